#include "cpg/checks.hpp"

#include <algorithm>
#include <random>

#include "cpg/detectors.hpp"
#include "cpg/enumerate.hpp"
#include "cpg/families.hpp"
#include "cpg/intervals.hpp"
#include "cpg/io.hpp"
#include "cpg/recognition.hpp"
#include "cpg/utter.hpp"

namespace cpg {
namespace {

constexpr std::size_t kKeptFailures = 5;

void record(BatchReport& r, bool ok, const std::string& reproducer) {
  ++r.trials;
  if (ok) {
    ++r.passed;
  } else if (r.failures.size() < kKeptFailures) {
    r.failures.push_back(reproducer);
  }
}

std::string describe(const IntervalSet& s) {
  std::string out;
  for (const Interval& iv : s) out += "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
  return out;
}

Graph sample_graph(std::mt19937_64& rng, int n) {
  return generate({Family::Random, n, rng(), std::uniform_real_distribution<double>(0.2, 0.8)(rng)});
}

}  // namespace

int largest_hole_size(const Graph& g) {
  for (int k = g.n(); k >= 4; --k) {
    if (find_hole_at_least(g, k)) return k;
  }
  return 0;
}

BatchReport check_interval_parity(int count, std::uint64_t seed) {
  BatchReport r{"interval-parity", seed, 0, 0, {}};
  std::mt19937_64 rng(seed);
  while (r.trials < count) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    const IntervalSet s = random_intervals(n, rng(), 16);
    if (!is_odd_intersection(s)) continue;
    record(r, check_parity_lemma(s), describe(s));
  }
  return r;
}

BatchReport check_interval_merge(int count, std::uint64_t seed) {
  BatchReport r{"interval-merge", seed, 0, 0, {}};
  std::mt19937_64 rng(seed);
  while (r.trials < count) {
    const int n = std::uniform_int_distribution<int>(2, 10)(rng);
    const IntervalSet s = random_intervals(n, rng(), 20);
    const Graph g = interval_graph(s);
    const auto edges = g.edges();
    if (edges.empty()) continue;
    const Edge e = edges[rng() % edges.size()];
    const Graph merged = interval_graph(merge_intervals(s, e.u, e.v));
    record(r, merged.same_structure(contract_edge(g, e)), describe(s));
  }
  return r;
}

BatchReport check_hole_survival(int count, std::uint64_t seed) {
  BatchReport r{"hole-survival", seed, 0, 0, {}};
  std::mt19937_64 rng(seed);
  while (r.trials < count) {
    const Graph g = sample_graph(rng, std::uniform_int_distribution<int>(4, 9)(rng));
    auto edges = g.edges();
    if (edges.empty()) continue;
    std::shuffle(edges.begin(), edges.end(), rng);
    edges.resize(std::min<std::size_t>(edges.size(), std::uniform_int_distribution<int>(1, 3)(rng)));
    const EdgeSet f(edges);
    const Graph h = contract_set(g, f);
    std::string reproducer = to_graph6(g) + " F=";
    for (const Edge& e : f) reproducer += std::to_string(e.u) + "-" + std::to_string(e.v) + ",";
    record(r, largest_hole_size(h) <= largest_hole_size(g), reproducer);
  }
  return r;
}

BatchReport check_co2plex_optimum(int count, std::uint64_t seed) {
  BatchReport r{"co2plex-optimum", seed, 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (int t = 0; t < count; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const Graph g = sample_graph(rng, n);
    std::vector<std::int64_t> w(n);
    for (auto& x : w) x = std::uniform_int_distribution<std::int64_t>(-2, 10)(rng);
    const WeightedGraph wg(g, std::move(w));
    const auto fast = max_weight_co2plex(wg);
    const bool ok = fast.weight == brute_force_co2plex(wg).weight && is_valid_co2plex(g, fast.plex) &&
                    wg.weight_of(co2plex_vertices(fast.plex)) == fast.weight;
    record(r, ok, write_weighted(wg));
  }
  return r;
}

BatchReport check_method_agreement(int max_n) {
  BatchReport r{"method-agreement", 0, 0, 0, {}};
  for (int n = 1; n <= max_n; ++n) {
    for (const Graph& g : enumerate_graphs(n, true)) {
      const bool a = is_contraction_perfect_single_edge(g).contraction_perfect;
      const bool b = is_contraction_perfect_forbidden(g).contraction_perfect;
      if (a != b) throw InvariantViolation("recognizers disagree on " + to_graph6(g));
      record(r, true, "");
    }
  }
  return r;
}

}  // namespace cpg
