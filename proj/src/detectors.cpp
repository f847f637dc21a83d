#include "cpg/detectors.hpp"

#include <algorithm>

namespace cpg {

namespace {

enum class Parity { Any, Odd, Even };

// Depth-first growth of induced paths that close into a hole. A path
// (s, a, ..., last) may only extend through vertices outside the closed
// neighbourhoods of its interior; a candidate adjacent to s closes the cycle.
class HoleSearch {
 public:
  HoleSearch(const Graph& g, int min_size, Parity parity)
      : g_(g), min_size_(std::max(min_size, 4)), parity_(parity) {}

  std::optional<std::vector<int>> any_hole() {
    for (int s = 0; s < g_.n(); ++s) {
      const VertexMask allowed = g_.all() & ~full_mask(s + 1);
      if (popcount(allowed) + 1 < min_size_) break;
      for_each_bit(g_.neighbors(s) & allowed, [&](int a) {
        if (found_) return;
        path_ = {s, a};
        grow(bit(s) | bit(a), 0, allowed, true);
      });
      if (found_) return path_;
    }
    return std::nullopt;
  }

  std::optional<std::vector<int>> hole_through(int u, int v) {
    path_ = {u, v};
    grow(bit(u) | bit(v), 0, g_.all(), false);
    if (found_) return path_;
    return std::nullopt;
  }

 private:
  bool accepts(int size) const {
    if (size < min_size_) return false;
    if (parity_ == Parity::Odd) return size % 2 == 1;
    if (parity_ == Parity::Even) return size % 2 == 0;
    return true;
  }

  void grow(VertexMask on_path, VertexMask blocked, VertexMask allowed, bool dedupe) {
    const int s = path_.front();
    const int last = path_.back();
    const VertexMask candidates = g_.neighbors(last) & allowed & ~blocked & ~on_path;
    const VertexMask next_blocked = blocked | g_.closed_neighbors(last);
    VertexMask rest = candidates;
    while (rest && !found_) {
      const int x = lowest(rest);
      rest &= rest - 1;
      if (g_.adjacent(x, s)) {
        const int size = static_cast<int>(path_.size()) + 1;
        if (path_.size() >= 3 && (!dedupe || x > path_[1]) && accepts(size)) {
          path_.push_back(x);
          found_ = true;
        }
        continue;
      }
      const VertexMask next_on_path = on_path | bit(x);
      const VertexMask avail = allowed & ~next_blocked & ~next_on_path;
      const VertexMask closers = g_.neighbors(s) & avail;
      if (!closers) continue;
      // Vertices reachable from x through available vertices bound what the
      // rest of the cycle can use.
      VertexMask reach = g_.neighbors(x) & avail;
      VertexMask frontier = reach;
      while (frontier) {
        VertexMask next = 0;
        for_each_bit(frontier, [&](int y) { next |= g_.neighbors(y); });
        frontier = next & avail & ~reach;
        reach |= frontier;
      }
      if (!(reach & closers)) continue;
      if (static_cast<int>(path_.size()) + 1 + popcount(reach) < min_size_) continue;
      path_.push_back(x);
      grow(next_on_path, next_blocked, allowed, dedupe);
      if (!found_) path_.pop_back();
    }
  }

  const Graph& g_;
  int min_size_;
  Parity parity_;
  std::vector<int> path_;
  bool found_ = false;
};

// Antipath (w_1, ..., w_p) with p even >= 6 built around an oriented edge
// (u, v): w_1, w_p miss both ends, w_2 sees only u, w_{p-1} sees only v and
// the middle vertices see both.
class ExpandedAntiholeSearch {
 public:
  ExpandedAntiholeSearch(const Graph& g, int u, int v) : g_(g), u_(u), v_(v) {
    outside_ = g.all() & ~(g.closed_neighbors(u) | g.closed_neighbors(v));
    u_only_ = g.neighbors(u) & ~g.closed_neighbors(v);
    v_only_ = g.neighbors(v) & ~g.closed_neighbors(u);
    both_ = g.neighbors(u) & g.neighbors(v);
  }

  std::optional<Certificate> run() {
    if (popcount(outside_) < 2 || !u_only_ || !v_only_ || popcount(both_) < 2) return std::nullopt;
    for_each_bit(outside_, [&](int w1) {
      if (found_) return;
      for_each_bit(u_only_ & ~g_.neighbors(w1), [&](int w2) {
        if (found_) return;
        seq_ = {w1, w2};
        middle(g_.neighbors(w1), 0);
      });
    });
    if (!found_) return std::nullopt;
    Certificate cert{CertKind::ExpandedAntihole, {u_, v_}};
    cert.vertices.insert(cert.vertices.end(), seq_.begin(), seq_.end());
    return cert;
  }

 private:
  // sees_all: vertices adjacent to every w except the last one placed.
  void middle(VertexMask sees_all, int placed) {
    const int last = seq_.back();
    const VertexMask open = sees_all & ~g_.closed_neighbors(last);
    const VertexMask next_sees_all = sees_all & g_.neighbors(last);
    if (placed >= 2 && placed % 2 == 0) {
      for_each_bit(open & v_only_, [&](int x) {
        if (found_) return;
        const VertexMask ends = next_sees_all & ~g_.closed_neighbors(x) & outside_;
        if (ends) {
          seq_.push_back(x);
          seq_.push_back(lowest(ends));
          found_ = true;
        }
      });
      if (found_) return;
    }
    VertexMask rest = open & both_;
    while (rest && !found_) {
      const int x = lowest(rest);
      rest &= rest - 1;
      seq_.push_back(x);
      middle(next_sees_all, placed + 1);
      if (!found_) seq_.pop_back();
    }
  }

  const Graph& g_;
  int u_, v_;
  VertexMask outside_ = 0, u_only_ = 0, v_only_ = 0, both_ = 0;
  std::vector<int> seq_;
  bool found_ = false;
};

std::optional<Certificate> as_hole(std::optional<std::vector<int>> cycle, CertKind kind) {
  if (!cycle) return std::nullopt;
  return Certificate{kind, std::move(*cycle)};
}

int max_clique(const Graph& g, VertexMask cand, int size, int best) {
  if (!cand) return std::max(size, best);
  while (cand) {
    if (size + popcount(cand) <= best) return best;
    const int v = lowest(cand);
    best = max_clique(g, cand & g.neighbors(v), size + 1, best);
    cand &= ~bit(v);
  }
  return best;
}

bool colorable(const Graph& g, const std::vector<int>& order, std::vector<int>& color,
               std::size_t idx, int k, int used) {
  if (idx == order.size()) return true;
  const int v = order[idx];
  const int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool clash = false;
    for_each_bit(g.neighbors(v), [&](int z) { clash = clash || color[z] == c; });
    if (clash) continue;
    color[v] = c;
    if (colorable(g, order, color, idx + 1, k, std::max(used, c + 1))) return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

std::string to_string(CertKind kind) {
  switch (kind) {
    case CertKind::Hole: return "hole";
    case CertKind::OddAntihole: return "odd-antihole";
    case CertKind::ExpandedAntihole: return "expanded-antihole";
  }
  return "unknown";
}

CertKind cert_kind_from_string(const std::string& name) {
  if (name == "hole") return CertKind::Hole;
  if (name == "odd-antihole") return CertKind::OddAntihole;
  if (name == "expanded-antihole") return CertKind::ExpandedAntihole;
  throw InputError("unknown certificate kind '" + name + "'");
}

std::optional<Certificate> find_hole_at_least(const Graph& g, int k) {
  if (k < 4) throw InputError("hole size bound must be at least 4");
  return as_hole(HoleSearch(g, k, Parity::Any).any_hole(), CertKind::Hole);
}

std::optional<Certificate> find_odd_hole(const Graph& g) {
  return as_hole(HoleSearch(g, 5, Parity::Odd).any_hole(), CertKind::Hole);
}

std::optional<Certificate> find_even_hole_through(const Graph& g, Edge e, int min_size) {
  e = Edge::of(e.u, e.v);
  if (!g.has_edge(e)) throw InputError("not an edge of the graph");
  return as_hole(HoleSearch(g, min_size, Parity::Even).hole_through(e.u, e.v), CertKind::Hole);
}

std::optional<Certificate> find_odd_antihole(const Graph& g) {
  return as_hole(HoleSearch(complement(g), 5, Parity::Odd).any_hole(), CertKind::OddAntihole);
}

std::optional<Certificate> find_expanded_antihole(const Graph& g) {
  if (g.n() < 8) return std::nullopt;
  for (const Edge& e : g.edges()) {
    if (auto cert = ExpandedAntiholeSearch(g, e.u, e.v).run()) return cert;
    if (auto cert = ExpandedAntiholeSearch(g, e.v, e.u).run()) return cert;
  }
  return std::nullopt;
}

std::optional<Certificate> find_expanded_antihole_involving(const Graph& g, Edge e) {
  e = Edge::of(e.u, e.v);
  if (!g.has_edge(e)) throw InputError("not an edge of the graph");
  if (g.n() < 8) return std::nullopt;
  if (auto cert = ExpandedAntiholeSearch(g, e.u, e.v).run()) return cert;
  return ExpandedAntiholeSearch(g, e.v, e.u).run();
}

PerfectionVerdict is_perfect(const Graph& g) {
  if (auto cert = find_odd_hole(g)) return {false, std::move(cert)};
  if (auto cert = find_odd_antihole(g)) return {false, std::move(cert)};
  return {true, std::nullopt};
}

int clique_number(const Graph& g) { return max_clique(g, g.all(), 0, 0); }

int chromatic_number(const Graph& g) {
  if (g.n() == 0) return 0;
  std::vector<int> order(g.n());
  for (int v = 0; v < g.n(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int k = std::max(1, clique_number(g));; ++k) {
    std::vector<int> color(g.n(), -1);
    if (colorable(g, order, color, 0, k, 0)) return k;
  }
}

}  // namespace cpg
