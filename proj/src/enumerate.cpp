#include "cpg/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cpg {

namespace {

using Cells = std::vector<std::vector<int>>;

// Splits cells by neighbour counts into every cell until stable. Groups are
// ordered by their count vectors, so the result is isomorphism invariant.
void refine(const Graph& g, Cells& cells) {
  while (true) {
    std::vector<VertexMask> masks;
    masks.reserve(cells.size());
    for (const auto& c : cells) masks.push_back(vector_to_mask(c));
    Cells next;
    next.reserve(g.n());
    for (const auto& c : cells) {
      if (c.size() == 1) {
        next.push_back(c);
        continue;
      }
      std::map<std::vector<int>, std::vector<int>> groups;
      for (int v : c) {
        std::vector<int> sig(masks.size());
        for (std::size_t k = 0; k < masks.size(); ++k) sig[k] = popcount(g.neighbors(v) & masks[k]);
        groups[std::move(sig)].push_back(v);
      }
      for (auto& [sig, members] : groups) next.push_back(std::move(members));
    }
    const bool stable = next.size() == cells.size();
    cells = std::move(next);
    if (stable) return;
  }
}

std::uint64_t code_for(const Graph& g, const std::vector<int>& order) {
  std::uint64_t code = 0;
  for (std::size_t j = 1; j < order.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0);
  return code;
}

bool twins(const Graph& g, int x, int y) {
  return (g.neighbors(x) & ~bit(y)) == (g.neighbors(y) & ~bit(x));
}

void search(const Graph& g, Cells cells, std::uint64_t& best, std::vector<int>& best_order,
            bool& have) {
  refine(g, cells);
  auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
  if (target == cells.end()) {
    std::vector<int> order;
    for (const auto& c : cells) order.push_back(c.front());
    const std::uint64_t code = code_for(g, order);
    if (!have || code < best) {
      best = code;
      best_order = std::move(order);
      have = true;
    }
    return;
  }
  const std::size_t idx = static_cast<std::size_t>(target - cells.begin());
  const std::vector<int> cell = *target;
  std::vector<int> tried;
  for (int v : cell) {
    // Swapping twins is an automorphism fixing the partition.
    if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(g, v, t); })) continue;
    tried.push_back(v);
    Cells branch = cells;
    std::vector<int> rest;
    for (int x : cell)
      if (x != v) rest.push_back(x);
    branch[idx] = {v};
    branch.insert(branch.begin() + static_cast<long>(idx) + 1, std::move(rest));
    search(g, std::move(branch), best, best_order, have);
  }
}

std::vector<int> canonical_order(const Graph& g, std::uint64_t& code) {
  if (g.n() > 11) throw InputError("canonical codes are limited to 11 vertices");
  std::vector<int> all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  Cells cells;
  if (g.n() > 0) cells.push_back(all);
  std::vector<int> order;
  bool have = false;
  code = 0;
  search(g, cells, code, order, have);
  return order;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  std::uint64_t code = 0;
  canonical_order(g, code);
  return code;
}

Graph canonical_form(const Graph& g) {
  std::uint64_t code = 0;
  const std::vector<int> order = canonical_order(g, code);
  Graph out = induced_subgraph(g, std::span<const int>(order));
  std::vector<Label> plain(out.n());
  for (int v = 0; v < out.n(); ++v) plain[v] = {v};
  return out.with_labels(std::move(plain));
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  if (n < 0 || n > 10) throw InputError("enumeration supports 0 <= n <= 10");
  std::vector<Graph> layer{Graph(0)};
  for (int k = 1; k <= n; ++k) {
    std::map<std::uint64_t, Graph> next;
    for (const Graph& base : layer) {
      for (VertexMask nb = 0; nb < (VertexMask{1} << (k - 1)); ++nb) {
        GraphBuilder b(k);
        for (const Edge& e : base.edges()) b.add_edge(e.u, e.v);
        for_each_bit(nb, [&](int z) { b.add_edge(k - 1, z); });
        Graph cand = std::move(b).build();
        std::uint64_t code = 0;
        canonical_order(cand, code);
        if (!next.contains(code)) next.emplace(code, canonical_form(cand));
      }
    }
    layer.clear();
    for (auto& [code, g] : next) layer.push_back(std::move(g));
  }
  if (connected_only) {
    std::erase_if(layer, [](const Graph& g) { return !is_connected(g); });
  }
  return layer;
}

void for_each_labelled_graph(int n, const std::function<void(const Graph&)>& f) {
  if (n < 0 || n > 7) throw InputError("labelled enumeration supports 0 <= n <= 7");
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  const std::uint64_t limit = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<VertexMask> rows(n, 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1U) {
        rows[pairs[k].u] |= bit(pairs[k].v);
        rows[pairs[k].v] |= bit(pairs[k].u);
      }
    }
    f(Graph::from_rows(std::move(rows)));
  }
}

}  // namespace cpg
