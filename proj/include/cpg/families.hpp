#pragma once

#include <cstdint>
#include <string>

#include "cpg/graph.hpp"
#include "cpg/intervals.hpp"

namespace cpg {

enum class Family {
  Path,
  Antipath,
  Hole,
  Antihole,
  ExpandedAntihole,
  Clique,
  Split,
  TriviallyPerfect,
  Chordal,
  Interval,
  Random,
};

std::string to_string(Family f);
Family family_from_string(const std::string& name);

/// `size` is the vertex count for every family except ExpandedAntihole, where
/// it is the antipath length p (even, >= 6) and the graph has p + 2 vertices.
/// Seeded families are reproducible functions of (size, seed, edge_probability).
struct FamilySpec {
  Family family = Family::Path;
  int size = 0;
  std::uint64_t seed = 0;
  double edge_probability = 0.5;
};

/// Throws InputError for parameters the family does not admit.
Graph generate(const FamilySpec& spec);

/// Expanded antihole on p + 2 vertices: u = 0, v = 1, w_i = i + 1. Matches the
/// vertex layout of an ExpandedAntihole certificate.
Graph expanded_antihole(int p);

/// Random laminar family of n intervals: siblings are disjoint, children sit
/// inside their parent, and some intervals are repeated.
IntervalSet random_nested_intervals(int n, std::uint64_t seed);
IntervalSet random_intervals(int n, std::uint64_t seed, std::int64_t span = 0);

bool is_split(const Graph& g);
/// LexBFS order checked as a perfect elimination ordering.
bool is_chordal(const Graph& g);
/// No induced P4 and no induced C4.
bool is_trivially_perfect(const Graph& g);
/// All holes have at most k vertices.
bool is_k_hole_free(const Graph& g, int k);

/// Vertices in LexBFS visiting order, starting from vertex 0 and breaking
/// label ties by smallest index.
std::vector<int> lex_bfs(const Graph& g);

}  // namespace cpg
