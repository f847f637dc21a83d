#include <random>

#include <gtest/gtest.h>

#include "cpg/families.hpp"
#include "cpg/recognition.hpp"
#include "cpg/utter.hpp"
#include "oracles.hpp"

namespace cpg {
namespace {

Graph make(Family f, int size, std::uint64_t seed = 0, double p = 0.5) { return generate({f, size, seed, p}); }

Graph star(int leaves) {
  GraphBuilder b(leaves + 1);
  for (int i = 1; i <= leaves; ++i) b.add_edge(0, i);
  return std::move(b).build();
}

TEST(Generate, FixedFamilies) {
  EXPECT_EQ(make(Family::Hole, 7), cycle_graph(7));
  EXPECT_EQ(make(Family::Antihole, 7), complement(cycle_graph(7)));
  EXPECT_EQ(make(Family::Path, 4), path_graph(4));
  EXPECT_EQ(make(Family::Antipath, 6), complement(path_graph(6)));
  EXPECT_EQ(make(Family::Clique, 5), complete_graph(5));
  EXPECT_FALSE(is_perfect(make(Family::Hole, 5)).perfect);
  EXPECT_TRUE(is_contraction_perfect_forbidden(make(Family::Antipath, 7)).contraction_perfect);
  EXPECT_TRUE(is_contraction_perfect_single_edge(make(Family::Antipath, 7)).contraction_perfect);
}

TEST(Generate, ExpandedAntiholeStructure) {
  for (int p : {6, 8, 10}) {
    const Graph g = make(Family::ExpandedAntihole, p);
    ASSERT_EQ(g.n(), p + 2);
    auto w = [](int i) { return i + 1; };
    EXPECT_TRUE(g.adjacent(0, 1));
    for (int i = 1; i <= p; ++i) {
      EXPECT_EQ(g.adjacent(0, w(i)), i >= 2 && i <= p - 2) << "u~w" << i;
      EXPECT_EQ(g.adjacent(1, w(i)), i >= 3 && i <= p - 1) << "v~w" << i;
      for (int j = i + 1; j <= p; ++j) EXPECT_EQ(g.adjacent(w(i), w(j)), j - i >= 2);
    }
    const Graph h = contract_edge(g, {0, 1});
    EXPECT_TRUE(h.same_structure(complement(cycle_graph(p + 1))));
    EXPECT_TRUE(is_perfect(g).perfect);
  }
}

TEST(Generate, InvalidParameters) {
  EXPECT_THROW(make(Family::ExpandedAntihole, 7), InputError);
  EXPECT_THROW(make(Family::ExpandedAntihole, 4), InputError);
  EXPECT_THROW(make(Family::Hole, 3), InputError);
  EXPECT_THROW(make(Family::Antihole, 2), InputError);
  EXPECT_THROW(make(Family::Path, -1), InputError);
  EXPECT_THROW(make(Family::Random, 5, 1, 1.5), InputError);
  EXPECT_THROW(make(Family::Clique, kMaxVertices + 1), CapExceeded);
  EXPECT_THROW(family_from_string("petersen"), InputError);
  EXPECT_EQ(family_from_string("expanded-antihole"), Family::ExpandedAntihole);
  EXPECT_EQ(to_string(Family::TriviallyPerfect), "trivially-perfect");
}

TEST(Generate, ReproducibleFromSeed) {
  for (Family f : {Family::Split, Family::TriviallyPerfect, Family::Chordal, Family::Interval, Family::Random}) {
    EXPECT_EQ(make(f, 20, 42), make(f, 20, 42)) << to_string(f);
  }
  EXPECT_NE(make(Family::Random, 20, 1), make(Family::Random, 20, 2));
}

TEST(Generate, MembersPassTheirRecognizers) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 1 + static_cast<int>(seed % 14);
    const Graph split = make(Family::Split, n, seed);
    EXPECT_TRUE(is_split(split));
    EXPECT_TRUE(oracle::split_by_partition(split));
    const Graph tp = make(Family::TriviallyPerfect, n, seed);
    EXPECT_TRUE(is_trivially_perfect(tp));
    EXPECT_TRUE(oracle::no_p4_no_c4(tp));
    EXPECT_TRUE(is_chordal(make(Family::Chordal, n, seed)));
    EXPECT_TRUE(is_chordal(make(Family::Interval, n, seed)));
  }
  for (int n = 1; n <= 12; ++n) EXPECT_TRUE(is_chordal(make(Family::Clique, n)));
  for (int n = 4; n <= 12; ++n) EXPECT_EQ(oracle::largest_hole(make(Family::Hole, n)), n);
}

TEST(ClassTests, Examples) {
  EXPECT_FALSE(is_split(cycle_graph(4)));
  EXPECT_FALSE(is_split(cycle_graph(5)));
  EXPECT_FALSE(is_split(complement(cycle_graph(4))));
  GraphBuilder b(6);  // K3 on {0,1,2} with pendants
  b.add_edge(0, 1).add_edge(1, 2).add_edge(0, 2).add_edge(0, 3).add_edge(1, 4).add_edge(1, 5);
  EXPECT_TRUE(is_split(std::move(b).build()));
  EXPECT_TRUE(is_split(star(4)));

  EXPECT_FALSE(is_trivially_perfect(path_graph(4)));
  EXPECT_FALSE(is_trivially_perfect(cycle_graph(4)));
  EXPECT_TRUE(is_trivially_perfect(star(3)));

  EXPECT_TRUE(is_chordal(star(5)));
  EXPECT_TRUE(is_chordal(path_graph(9)));
  EXPECT_FALSE(is_chordal(cycle_graph(4)));

  EXPECT_TRUE(is_k_hole_free(cycle_graph(6), 6));
  EXPECT_FALSE(is_k_hole_free(cycle_graph(6), 5));
  EXPECT_TRUE(is_k_hole_free(complete_graph(5), 3));
  EXPECT_TRUE(is_k_hole_free(make(Family::Chordal, 12, 3), 3));
  EXPECT_THROW(is_k_hole_free(cycle_graph(6), 2), InputError);
}

TEST(ClassTests, AgreeWithOraclesOnRandomGraphs) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = std::uniform_int_distribution<int>(0, 9)(rng);
    const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    const Graph g = oracle::random_graph(n, p, rng);
    EXPECT_EQ(is_split(g), oracle::split_by_partition(g)) << to_graph6(g);
    EXPECT_EQ(is_trivially_perfect(g), oracle::no_p4_no_c4(g)) << to_graph6(g);
    EXPECT_EQ(is_chordal(g), !find_hole_at_least(g, 4).has_value()) << to_graph6(g);
    const int largest = oracle::largest_hole(g);
    for (int k = 3; k <= 7; ++k) EXPECT_EQ(is_k_hole_free(g, k), largest <= k);
  }
}

TEST(ClassStability, UtterGraphsStayInClass) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    const Graph split = make(Family::Split, n, seed);
    if (split.n() + split.edge_count() <= vertex_cap()) EXPECT_TRUE(is_split(utter(split).graph));
    const Graph tp = make(Family::TriviallyPerfect, n, seed);
    if (tp.n() + tp.edge_count() <= vertex_cap()) EXPECT_TRUE(is_trivially_perfect(utter(tp).graph));
    const Graph chordal = make(Family::Chordal, n, seed);
    if (chordal.n() + chordal.edge_count() <= vertex_cap()) EXPECT_TRUE(is_chordal(utter(chordal).graph));
    const Graph interval = make(Family::Interval, n, seed);
    if (interval.n() + interval.edge_count() <= vertex_cap()) EXPECT_TRUE(is_chordal(utter(interval).graph));
  }
}

TEST(ClassStability, ReverseDirectionThroughEmbedding) {
  // G sits in u(G) as the induced subgraph on its first |V| vertices, so a
  // hereditary class containing u(G) contains G.
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(std::uniform_int_distribution<int>(1, 7)(rng), 0.5, rng);
    const Graph u = utter(g).graph;
    if (is_split(u)) EXPECT_TRUE(is_split(g));
    if (is_trivially_perfect(u)) EXPECT_TRUE(is_trivially_perfect(g));
    if (is_chordal(u)) EXPECT_TRUE(is_chordal(g));
  }
}

TEST(ClassStability, KHoleFreeSurvivesUtter) {
  std::mt19937_64 rng(71);
  int checked = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 8)(rng);
    const Graph g = oracle::random_graph(n, 0.35, rng);
    if (g.n() + g.edge_count() > vertex_cap()) continue;
    const Graph u = utter(g).graph;
    for (int k : {3, 4, 5}) {
      if (!is_k_hole_free(g, k)) continue;
      ++checked;
      EXPECT_TRUE(is_k_hole_free(u, k)) << to_graph6(g) << " k=" << k;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Minimality, NamedFamilies) {
  for (int p : {6, 8}) EXPECT_TRUE(is_minimally_non_cp(expanded_antihole(p))) << p;
  for (int n : {5, 6, 7, 8}) EXPECT_TRUE(is_minimally_non_cp(cycle_graph(n))) << n;
  EXPECT_TRUE(is_minimally_non_cp(complement(cycle_graph(7))));
  EXPECT_FALSE(is_minimally_non_cp(cycle_graph(4)));
  EXPECT_FALSE(is_minimally_non_cp(complement(cycle_graph(6))));
}

TEST(LexBfs, VisitsEveryVertexOnce) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(std::uniform_int_distribution<int>(0, 15)(rng), 0.3, rng);
    const auto order = lex_bfs(g);
    ASSERT_EQ(static_cast<int>(order.size()), g.n());
    EXPECT_EQ(vector_to_mask(order), g.all());
  }
}

}  // namespace
}  // namespace cpg
