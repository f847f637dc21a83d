#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "cpg/graph.hpp"

namespace cpg {

/// Closed integer interval [lo, hi]; its cardinality is hi - lo + 1.
struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::int64_t size() const { return hi - lo + 1; }
  bool operator==(const Interval&) const = default;
};

/// Intersection of two intervals, if nonempty.
std::optional<Interval> intersect(const Interval& a, const Interval& b);

/// Finite family of intervals; duplicates allowed.
using IntervalSet = std::vector<Interval>;

/// Reads lines "a b" with a <= b.
IntervalSet read_intervals(std::istream& in);
IntervalSet parse_intervals(std::string_view text);

/// Vertex i ~ vertex j iff intervals i and j meet.
Graph interval_graph(const IntervalSet& s);

/// Every nonempty intersection of a subfamily has odd cardinality. Families of
/// at most 20 intervals are checked subset by subset.
bool is_odd_intersection(const IntervalSet& s);
/// Same property via singletons and pairs only.
bool is_odd_intersection_pairwise(const IntervalSet& s);

/// For an odd intersection family, the union over each connected component of
/// the interval graph has odd cardinality. Returns whether that holds.
/// Throws PreconditionError when s is not an odd intersection family.
bool check_parity_lemma(const IntervalSet& s);

/// Replaces intervals i and j (which must meet) by their union, placed at
/// min(i, j); matches the vertex numbering of contract_edge.
IntervalSet merge_intervals(const IntervalSet& s, int i, int j);

}  // namespace cpg
