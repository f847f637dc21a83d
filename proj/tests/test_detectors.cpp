#include <random>

#include <gtest/gtest.h>

#include "cpg/detectors.hpp"
#include "cpg/enumerate.hpp"
#include "cpg/families.hpp"
#include "oracles.hpp"

namespace cpg {
namespace {

Graph bipartite_random(int a, int b, std::mt19937_64& rng) {
  GraphBuilder builder(a + b);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < a; ++i)
    for (int j = a; j < a + b; ++j)
      if (coin(rng)) builder.add_edge(i, j);
  return std::move(builder).build();
}

TEST(FindHole, Examples) {
  auto c6 = find_hole_at_least(cycle_graph(6), 5);
  ASSERT_TRUE(c6);
  EXPECT_EQ(c6->vertices.size(), 6U);
  EXPECT_TRUE(validate_certificate(cycle_graph(6), *c6));

  const Graph chordal = generate({Family::Chordal, 12, 3, 0.6});
  EXPECT_FALSE(find_hole_at_least(chordal, 4));

  // C6 plus the long chord 0-3: two C4s and nothing larger.
  const Graph chorded = Graph::from_edges(
      6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}});
  EXPECT_EQ(oracle::largest_hole(chorded), 4);
  EXPECT_FALSE(find_hole_at_least(chorded, 5));
  EXPECT_TRUE(find_hole_at_least(chorded, 4));
  EXPECT_THROW(find_hole_at_least(chorded, 3), InputError);
}

TEST(FindHole, AgreesWithSubsetEnumeration) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = std::uniform_int_distribution<int>(4, 10)(rng);
    const double p = std::uniform_real_distribution<double>(0.2, 0.7)(rng);
    const Graph g = oracle::random_graph(n, p, rng);
    const int largest = oracle::largest_hole(g);
    for (int k = 4; k <= n; ++k) {
      auto cert = find_hole_at_least(g, k);
      ASSERT_EQ(cert.has_value(), largest >= k) << to_string(g) << " k=" << k;
      if (cert) {
        EXPECT_TRUE(validate_certificate(g, *cert));
        EXPECT_GE(static_cast<int>(cert->vertices.size()), k);
      }
    }
    auto odd = find_odd_hole(g);
    ASSERT_EQ(odd.has_value(), oracle::has_odd_hole(g)) << to_string(g);
    if (odd) {
      EXPECT_TRUE(validate_certificate(g, *odd));
      EXPECT_EQ(odd->vertices.size() % 2, 1U);
    }
  }
}

TEST(FindHole, DeterministicFirstCertificate) {
  const Graph g = generate({Family::Random, 12, 99, 0.3});
  EXPECT_EQ(find_hole_at_least(g, 4), find_hole_at_least(g, 4));
}

TEST(FindOddHole, Examples) {
  auto c5 = find_odd_hole(cycle_graph(5));
  ASSERT_TRUE(c5);
  EXPECT_EQ(c5->vertices, (std::vector<int>{0, 1, 2, 3, 4}));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) EXPECT_FALSE(find_odd_hole(bipartite_random(5, 6, rng)));
  EXPECT_FALSE(find_odd_hole(cycle_graph(6)));
}

TEST(FindEvenHoleThrough, RequiresEdgeAndPassesThroughIt) {
  const Graph c8 = cycle_graph(8);
  auto cert = find_even_hole_through(c8, {2, 3});
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->vertices[0], 2);
  EXPECT_EQ(cert->vertices[1], 3);
  EXPECT_TRUE(validate_certificate(c8, *cert));
  EXPECT_FALSE(find_even_hole_through(cycle_graph(7), {0, 1}));
  EXPECT_THROW(find_even_hole_through(c8, {0, 2}), InputError);
}

TEST(FindOddAntihole, Examples) {
  const Graph anti7 = complement(cycle_graph(7));
  auto cert = find_odd_antihole(anti7);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->kind, CertKind::OddAntihole);
  EXPECT_EQ(cert->vertices.size(), 7U);
  EXPECT_TRUE(validate_certificate(anti7, *cert));

  auto c5 = find_odd_antihole(cycle_graph(5));
  ASSERT_TRUE(c5);
  EXPECT_EQ(c5->vertices.size(), 5U);
  EXPECT_TRUE(validate_certificate(cycle_graph(5), *c5));

  for (int n = 0; n <= 4; ++n) {
    for (const Graph& g : enumerate_graphs(n)) EXPECT_FALSE(find_odd_antihole(g));
  }
}

TEST(IsPerfect, Examples) {
  EXPECT_TRUE(is_perfect(cycle_graph(6)).perfect);
  const auto c5 = is_perfect(cycle_graph(5));
  EXPECT_FALSE(c5.perfect);
  ASSERT_TRUE(c5.certificate);
  EXPECT_EQ(c5.certificate->kind, CertKind::Hole);
  EXPECT_EQ(c5.certificate->vertices.size(), 5U);
  EXPECT_FALSE(is_perfect(contract_edge(cycle_graph(6), {0, 1})).perfect);
}

// The definitional test: omega == chi on every induced subgraph.
TEST(IsPerfect, MatchesDefinitionExhaustivelyUpToSeven) {
  for (int n = 0; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const auto verdict = is_perfect(g);
      ASSERT_EQ(verdict.perfect, oracle::perfect_by_definition(g)) << to_graph6(g);
      if (!verdict.perfect) EXPECT_TRUE(validate_certificate(g, *verdict.certificate));
    }
  }
}

TEST(IsPerfect, MatchesDefinitionOnRandomEightAndNine) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 8 + trial % 2;
    const double p = std::uniform_real_distribution<double>(0.25, 0.75)(rng);
    const Graph g = oracle::random_graph(n, p, rng);
    ASSERT_EQ(is_perfect(g).perfect, oracle::perfect_by_definition(g)) << to_graph6(g);
  }
}

TEST(IsPerfect, WeakPerfectGraphTheorem) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    EXPECT_EQ(is_perfect(g).perfect, is_perfect(complement(g)).perfect);
  }
}

TEST(FindExpandedAntihole, Examples) {
  const Graph eah = expanded_antihole(6);
  auto cert = find_expanded_antihole(eah);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->vertices.size(), 8U);
  EXPECT_TRUE(validate_certificate(eah, *cert));

  for (int n = 1; n <= 12; ++n) EXPECT_FALSE(find_expanded_antihole(complement(path_graph(n))));
  for (int n = 0; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) EXPECT_FALSE(find_expanded_antihole(g));
  }
}

TEST(FindExpandedAntiholeInvolving, Examples) {
  const Graph eah = expanded_antihole(6);
  auto on_uv = find_expanded_antihole_involving(eah, {0, 1});
  ASSERT_TRUE(on_uv);
  EXPECT_TRUE(validate_certificate(eah, *on_uv));
  EXPECT_EQ(Edge::of(on_uv->vertices[0], on_uv->vertices[1]), (Edge{0, 1}));

  // w_1 = 2 and w_6 = 7 are adjacent; that antipath edge also carries one.
  auto on_w1wp = find_expanded_antihole_involving(eah, {2, 7});
  ASSERT_TRUE(on_w1wp);
  EXPECT_TRUE(validate_certificate(eah, *on_w1wp));
  EXPECT_EQ(Edge::of(on_w1wp->vertices[0], on_w1wp->vertices[1]), (Edge{2, 7}));

  EXPECT_FALSE(find_expanded_antihole_involving(cycle_graph(6), {0, 1}));
  EXPECT_THROW(find_expanded_antihole_involving(eah, {0, 2}), InputError);  // u and w_1 are apart
}

TEST(FindExpandedAntihole, ContractingItsEdgeBreaksPerfection) {
  for (int p : {6, 8, 10}) {
    const Graph eah = expanded_antihole(p);
    auto cert = find_expanded_antihole(eah);
    ASSERT_TRUE(cert);
    const Graph contracted = contract_edge(eah, Edge::of(cert->vertices[0], cert->vertices[1]));
    const auto verdict = is_perfect(contracted);
    EXPECT_FALSE(verdict.perfect);
    auto anti = find_odd_antihole(contracted);
    ASSERT_TRUE(anti);
    EXPECT_EQ(static_cast<int>(anti->vertices.size()), p + 1);
  }
}

// For perfect g, contracting uv creates an odd
// antihole of size >= 7 exactly when an expanded antihole sits on uv.
TEST(FindExpandedAntiholeInvolving, OddAntiholeAfterContractionIffExpandedAntihole) {
  auto check = [](const Graph& g) {
    if (!is_perfect(g).perfect) return;
    for (const Edge& e : g.edges()) {
      const Graph h = contract_edge(g, e);
      bool long_antihole = false;
      for (int s : oracle::all_hole_sizes(complement(h))) long_antihole = long_antihole || (s >= 7 && s % 2 == 1);
      EXPECT_EQ(long_antihole, find_expanded_antihole_involving(g, e).has_value()) << to_graph6(g);
    }
  };
  for (int p : {6, 8}) check(expanded_antihole(p));
  std::mt19937_64 rng(47);
  int perfect_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = oracle::random_graph(9, 0.6, rng);
    if (is_perfect(g).perfect) ++perfect_seen;
    check(g);
  }
  EXPECT_GT(perfect_seen, 10);
}

// A hole in G/F is matched by a hole at least as large in G.
TEST(FindHole, HolesSurviveUncontraction) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(4, 9)(rng);
    const Graph g = oracle::random_graph(n, 0.45, rng);
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    edges.resize(std::min<std::size_t>(edges.size(), std::uniform_int_distribution<int>(0, 3)(rng)));
    const Graph h = contract_set(g, EdgeSet(edges));
    for (int k = 4; k <= h.n(); ++k) {
      if (find_hole_at_least(h, k)) EXPECT_TRUE(find_hole_at_least(g, k)) << to_graph6(g);
    }
  }
}

TEST(CliqueAndChromatic, Examples) {
  EXPECT_EQ(clique_number(cycle_graph(5)), 2);
  EXPECT_EQ(chromatic_number(cycle_graph(5)), 3);
  EXPECT_EQ(clique_number(cycle_graph(6)), 2);
  EXPECT_EQ(chromatic_number(cycle_graph(6)), 2);
  EXPECT_EQ(clique_number(complete_graph(5)), 5);
  EXPECT_EQ(chromatic_number(complete_graph(5)), 5);
  EXPECT_EQ(chromatic_number(Graph(0)), 0);
  EXPECT_EQ(chromatic_number(Graph(3)), 1);
}

TEST(Certificate, ValidatorRejectsBrokenWitnesses) {
  const Graph c6 = cycle_graph(6);
  EXPECT_TRUE(validate_certificate(c6, {CertKind::Hole, {0, 1, 2, 3, 4, 5}}));
  EXPECT_FALSE(validate_certificate(c6, {CertKind::Hole, {0, 1, 2, 3, 5, 4}}));
  EXPECT_FALSE(validate_certificate(c6, {CertKind::Hole, {0, 1, 2}}));
  EXPECT_FALSE(validate_certificate(c6, {CertKind::Hole, {0, 1, 1, 2}}));
  EXPECT_FALSE(validate_certificate(c6, {CertKind::OddAntihole, {0, 1, 2, 3, 4, 5}}));
  // A C5 validates under either kind.
  const Graph c5 = cycle_graph(5);
  EXPECT_TRUE(validate_certificate(c5, {CertKind::Hole, {0, 1, 2, 3, 4}}));
  EXPECT_TRUE(validate_certificate(c5, {CertKind::OddAntihole, {0, 2, 4, 1, 3}}));

  const Graph eah = expanded_antihole(6);
  const Certificate good{CertKind::ExpandedAntihole, {0, 1, 2, 3, 4, 5, 6, 7}};
  EXPECT_TRUE(validate_certificate(eah, good));
  Certificate swapped = good;
  std::swap(swapped.vertices[0], swapped.vertices[1]);
  EXPECT_FALSE(validate_certificate(eah, swapped));
  EXPECT_FALSE(validate_certificate(eah, {CertKind::ExpandedAntihole, {0, 1, 2, 3, 4, 5}}));
}

}  // namespace
}  // namespace cpg
