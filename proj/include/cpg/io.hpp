#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cpg/graph.hpp"

namespace cpg {

/// Vertex-weighted graph; weights are exact integers.
struct WeightedGraph {
  Graph graph;
  std::vector<std::int64_t> weights;

  WeightedGraph() = default;
  WeightedGraph(Graph g, std::vector<std::int64_t> w);
  /// Sum of weights over a vertex set.
  std::int64_t weight_of(std::span<const int> vs) const;
};

// Edge-list text: "n m" then m lines "u v", 0-based. Blank lines and lines
// starting with '#' are skipped.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// Weighted edge-list: the edge-list block followed by n lines "v w".
WeightedGraph read_weighted(std::istream& in);
WeightedGraph parse_weighted(std::string_view text);
std::string write_weighted(const WeightedGraph& wg);

// graph6, the byte format used by nauty and the House of Graphs catalog.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

}  // namespace cpg
