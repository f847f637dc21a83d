#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cpg/graph.hpp"

namespace cpg {

/// Outcome of a seeded batch property run. `failures` holds a short
/// reproducer for each failing trial (at most a handful are kept).
struct BatchReport {
  std::string property;
  std::uint64_t seed = 0;
  int trials = 0;
  int passed = 0;
  std::vector<std::string> failures;

  bool ok() const { return passed == trials; }
};

/// Size of the largest hole in g, or 0 when g has none.
int largest_hole_size(const Graph& g);

/// Rejection-samples odd intersection interval families and checks that each
/// component of the interval graph spans an odd number of points. Also checks
/// that merging two meeting intervals contracts the matching edge.
BatchReport check_interval_parity(int count, std::uint64_t seed);
BatchReport check_interval_merge(int count, std::uint64_t seed);

/// Random (g, F) with n <= 9 and |F| <= 3: no hole of G/F outgrows the
/// largest hole of G.
BatchReport check_hole_survival(int count, std::uint64_t seed);

/// Random weighted graphs with n <= 10: the utter-graph co-2-plex optimum
/// equals the exhaustive one.
BatchReport check_co2plex_optimum(int count, std::uint64_t seed);

/// Both recognizers on every connected graph with at most max_n vertices.
/// Throws InvariantViolation on the first disagreement.
BatchReport check_method_agreement(int max_n);

}  // namespace cpg
