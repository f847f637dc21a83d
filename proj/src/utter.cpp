#include "cpg/utter.hpp"

#include <algorithm>
#include <numeric>

namespace cpg {

namespace {

// Branch and bound for the heaviest stable set among positive-weight
// candidates. Bound: greedy clique cover, heaviest vertex first, charging
// each clique its heaviest member.
class StableSetSolver {
 public:
  explicit StableSetSolver(const WeightedGraph& wg) : wg_(wg), g_(wg.graph) {
    order_.resize(g_.n());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return wg.weights[a] > wg.weights[b]; });
    for (int v = 0; v < g_.n(); ++v) {
      if (wg.weights[v] > 0) positive_ |= bit(v);
    }
  }

  std::int64_t best(VertexMask candidates) {
    best_ = 0;
    stop_at_ = INT64_MAX;
    search(candidates & positive_, 0);
    return best_;
  }

  // Whether some stable set inside `candidates` weighs at least target.
  bool reaches(VertexMask candidates, std::int64_t target) {
    if (target <= 0) return true;
    best_ = target - 1;
    stop_at_ = target;
    search(candidates & positive_, 0);
    return best_ >= target;
  }

 private:
  std::int64_t cover_bound(VertexMask p) const {
    std::int64_t bound = 0;
    VertexMask cliques[kMaxVertices];
    int count = 0;
    for (int v : order_) {
      if (!(p & bit(v))) continue;
      int c = 0;
      while (c < count && (cliques[c] & ~g_.neighbors(v))) ++c;
      if (c == count) {
        cliques[count++] = 0;
        bound += wg_.weights[v];
      }
      cliques[c] |= bit(v);
    }
    return bound;
  }

  void search(VertexMask p, std::int64_t cur) {
    if (cur > best_) best_ = cur;
    if (best_ >= stop_at_ || !p) return;
    if (cur + cover_bound(p) <= best_) return;
    int pivot = -1, pivot_deg = -1;
    for_each_bit(p, [&](int v) {
      const int d = popcount(g_.neighbors(v) & p);
      if (d > pivot_deg) {
        pivot_deg = d;
        pivot = v;
      }
    });
    if (pivot_deg == 0) {
      std::int64_t total = cur;
      for_each_bit(p, [&](int v) { total += wg_.weights[v]; });
      best_ = std::max(best_, total);
      return;
    }
    search(p & ~g_.closed_neighbors(pivot), cur + wg_.weights[pivot]);
    search(p & ~bit(pivot), cur);
  }

  const WeightedGraph& wg_;
  const Graph& g_;
  std::vector<int> order_;
  VertexMask positive_ = 0;
  std::int64_t best_ = 0;
  std::int64_t stop_at_ = INT64_MAX;
};

void check_in_range(const Graph& g, std::span<const int> vs) {
  for (int v : vs) g.check_vertex(v);
}

}  // namespace

int UtterGraph::edge_vertex(Edge e) const {
  e = Edge::of(e.u, e.v);
  auto first = origin.begin() + base_vertices;
  auto it = std::lower_bound(first, origin.end(), e, [](const Origin& o, const Edge& key) {
    return std::get<Edge>(o) < key;
  });
  if (it == origin.end() || std::get<Edge>(*it) != e) throw InputError("edge is not in the graph");
  return static_cast<int>(it - origin.begin());
}

UtterGraph utter(const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  const int n = g.n();
  const long total = n + static_cast<long>(edges.size());
  if (total > vertex_cap()) {
    throw CapExceeded("utter graph would have " + std::to_string(total) + " vertices; cap is " +
                      std::to_string(vertex_cap()));
  }
  UtterGraph u;
  u.base_vertices = n;
  GraphBuilder b(static_cast<int>(total));
  for (int v = 0; v < n; ++v) u.origin.emplace_back(v);
  for (const Edge& e : edges) u.origin.emplace_back(e);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  // An edge element's reach: everything within distance one of an endpoint.
  std::vector<VertexMask> reach(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    reach[i] = g.closed_neighbors(edges[i].u) | g.closed_neighbors(edges[i].v);
    for_each_bit(reach[i], [&](int w) { b.add_edge(w, n + static_cast<int>(i)); });
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (reach[i] & (bit(edges[j].u) | bit(edges[j].v))) {
        b.add_edge(n + static_cast<int>(i), n + static_cast<int>(j));
      }
    }
  }
  u.graph = std::move(b).build();
  return u;
}

std::vector<int> co2plex_vertices(const Co2Plex& s) {
  std::vector<int> out = s.W;
  for (const Edge& e : s.F) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_valid_co2plex(const Graph& g, const Co2Plex& s) {
  VertexMask w = 0, covered = 0;
  for (int v : s.W) {
    if (v < 0 || v >= g.n() || (w & bit(v))) return false;
    w |= bit(v);
  }
  for (const Edge& e : s.F) {
    if (!g.has_edge(e)) return false;
    const VertexMask ends = bit(e.u) | bit(e.v);
    if (covered & ends) return false;
    covered |= ends;
  }
  if (w & covered) return false;
  const VertexMask all = w | covered;
  bool ok = true;
  for_each_bit(w, [&](int v) { ok = ok && !(g.neighbors(v) & all); });
  for (const Edge& e : s.F) {
    ok = ok && (g.neighbors(e.u) & all) == bit(e.v) && (g.neighbors(e.v) & all) == bit(e.u);
  }
  return ok;
}

Co2Plex co2plex_from_vertex_set(const Graph& g, VertexMask s) {
  if (s & ~g.all()) throw InputError("vertex set exceeds the graph");
  Co2Plex out;
  for_each_bit(s, [&](int v) {
    const VertexMask nb = g.neighbors(v) & s;
    if (popcount(nb) > 1) throw InputError("vertex set induces a vertex of degree >= 2");
    if (!nb) {
      out.W.push_back(v);
    } else if (v < lowest(nb)) {
      out.F.push_back({v, lowest(nb)});
    }
  });
  return out;
}

std::vector<int> co2plex_to_stable(const UtterGraph& u, const Co2Plex& s) {
  const Graph base = induced_subgraph(u.graph, full_mask(u.base_vertices));
  if (!is_valid_co2plex(base, s)) throw InputError("not a co-2-plex of the origin graph");
  std::vector<int> out = s.W;
  for (const Edge& e : s.F) out.push_back(u.edge_vertex(e));
  std::sort(out.begin(), out.end());
  return out;
}

Co2Plex stable_to_co2plex(const UtterGraph& u, std::span<const int> s) {
  check_in_range(u.graph, s);
  VertexMask m = 0;
  for (int x : s) {
    if ((m & bit(x)) || (u.graph.neighbors(x) & m)) {
      throw InputError("vertex set is not stable in the utter graph");
    }
    m |= bit(x);
  }
  Co2Plex out;
  for_each_bit(m, [&](int x) {
    if (const int* v = std::get_if<int>(&u.origin[x])) {
      out.W.push_back(*v);
    } else {
      out.F.push_back(std::get<Edge>(u.origin[x]));
    }
  });
  return out;
}

std::int64_t max_stable_weight(const WeightedGraph& wg, VertexMask candidates) {
  return StableSetSolver(wg).best(candidates & wg.graph.all());
}

StableSetResult max_weight_stable_set(const WeightedGraph& wg) {
  const Graph& g = wg.graph;
  StableSetSolver solver(wg);
  const std::int64_t optimum = solver.best(g.all());
  // Fix members one at a time: the smallest vertex that still extends to an
  // optimum using only larger vertices, stopping as soon as the optimum is hit.
  StableSetResult out;
  VertexMask avail = g.all();
  while (out.weight != optimum) {
    bool advanced = false;
    for_each_bit(avail, [&](int v) {
      if (advanced) return;
      const VertexMask rest = avail & ~g.closed_neighbors(v) & ~full_mask(v + 1);
      if (solver.reaches(rest, optimum - out.weight - wg.weights[v])) {
        out.vertices.push_back(v);
        out.weight += wg.weights[v];
        avail = rest;
        advanced = true;
      }
    });
    if (!advanced) throw InvariantViolation("stable set reconstruction lost the optimum");
  }
  return out;
}

WeightedGraph lift_weights(const WeightedGraph& wg, const UtterGraph& u) {
  if (u.base_vertices != wg.graph.n()) throw InputError("utter graph does not match the weights");
  std::vector<std::int64_t> lifted(u.graph.n());
  for (int x = 0; x < u.graph.n(); ++x) {
    if (const int* v = std::get_if<int>(&u.origin[x])) {
      lifted[x] = wg.weights[*v];
    } else {
      const Edge& e = std::get<Edge>(u.origin[x]);
      lifted[x] = wg.weights[e.u] + wg.weights[e.v];
    }
  }
  return WeightedGraph(u.graph, std::move(lifted));
}

WeightedGraph lift_weights(const WeightedGraph& wg) { return lift_weights(wg, utter(wg.graph)); }

Co2PlexResult max_weight_co2plex(const WeightedGraph& wg) {
  const UtterGraph u = utter(wg.graph);
  const StableSetResult stable = max_weight_stable_set(lift_weights(wg, u));
  Co2PlexResult out{stable_to_co2plex(u, stable.vertices), stable.weight};
  if (wg.weight_of(co2plex_vertices(out.plex)) != out.weight) {
    throw InvariantViolation("lifted weight disagrees with co-2-plex weight");
  }
  return out;
}

Co2PlexResult brute_force_co2plex(const WeightedGraph& wg) {
  const Graph& g = wg.graph;
  if (g.n() > 20) throw InputError("brute force co-2-plex search is limited to 20 vertices");
  const std::uint64_t limit = std::uint64_t{1} << g.n();
  std::int64_t best = 0;
  VertexMask best_set = 0;
  for (std::uint64_t s = 1; s < limit; ++s) {
    bool ok = true;
    std::int64_t weight = 0;
    for_each_bit(s, [&](int v) {
      ok = ok && popcount(g.neighbors(v) & s) <= 1;
      weight += wg.weights[v];
    });
    if (ok && weight > best) {
      best = weight;
      best_set = s;
    }
  }
  return {co2plex_from_vertex_set(g, best_set), best};
}

}  // namespace cpg
