#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cpg/graph.hpp"

namespace cpg {

/// Upper-triangle adjacency bits under a canonical vertex order; equal for
/// two graphs exactly when they are isomorphic. Intended for n <= 11.
std::uint64_t canonical_code(const Graph& g);

/// The graph rebuilt in canonical vertex order.
Graph canonical_form(const Graph& g);

/// One representative per isomorphism class on exactly n vertices, in
/// ascending canonical code order.
std::vector<Graph> enumerate_graphs(int n, bool connected_only = false);

/// Every labelled graph on n vertices (2^(n(n-1)/2) of them), n <= 7.
void for_each_labelled_graph(int n, const std::function<void(const Graph&)>& f);

}  // namespace cpg
