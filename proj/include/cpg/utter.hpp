#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "cpg/graph.hpp"
#include "cpg/io.hpp"

namespace cpg {

/// A vertex of u(G) stands for either a vertex or an edge of G.
using Origin = std::variant<int, Edge>;

/// u(G): vertices 0..|V|-1 are G's vertices in order, followed by G's edges in
/// ascending (u, v) order. Two elements are adjacent iff they are adjacent,
/// incident, or adjacent by contraction in G.
struct UtterGraph {
  Graph graph;
  std::vector<Origin> origin;
  int base_vertices = 0;

  /// Index of the utter vertex standing for edge e of G.
  int edge_vertex(Edge e) const;
};

/// Throws CapExceeded when |V| + |E| exceeds the vertex cap.
UtterGraph utter(const Graph& g);

/// Vertex-edge representation of a co-2-plex: W induces no edge, F is an
/// induced matching, and no edge joins W to V(F).
struct Co2Plex {
  std::vector<int> W;
  std::vector<Edge> F;

  bool operator==(const Co2Plex&) const = default;
};

/// Sorted members W ∪ V(F).
std::vector<int> co2plex_vertices(const Co2Plex& s);
bool is_valid_co2plex(const Graph& g, const Co2Plex& s);
/// Splits a vertex set inducing max degree <= 1 into (W, F).
/// Throws InputError otherwise.
Co2Plex co2plex_from_vertex_set(const Graph& g, VertexMask s);

/// Image in u(G): W's vertices and F's edge-vertices, sorted.
std::vector<int> co2plex_to_stable(const UtterGraph& u, const Co2Plex& s);
/// Inverse map. Throws InputError when s is not stable in u.
Co2Plex stable_to_co2plex(const UtterGraph& u, std::span<const int> s);

struct StableSetResult {
  std::vector<int> vertices;
  std::int64_t weight = 0;
};

/// Exact maximum-weight stable set by branch and bound. Among optimal sets
/// the lexicographically smallest sorted vertex list is returned.
StableSetResult max_weight_stable_set(const WeightedGraph& wg);

/// Weight of a heaviest stable set inside `candidates`, nothing else.
std::int64_t max_stable_weight(const WeightedGraph& wg, VertexMask candidates);

/// c~ on u(G): vertices keep c_v, edge uv gets c_u + c_v.
WeightedGraph lift_weights(const WeightedGraph& wg, const UtterGraph& u);
WeightedGraph lift_weights(const WeightedGraph& wg);

struct Co2PlexResult {
  Co2Plex plex;
  std::int64_t weight = 0;
};

/// Optimum through the stable-set bijection on u(G).
Co2PlexResult max_weight_co2plex(const WeightedGraph& wg);

/// Optimum by scanning every vertex subset (n <= 20).
Co2PlexResult brute_force_co2plex(const WeightedGraph& wg);

}  // namespace cpg
