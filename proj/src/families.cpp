#include "cpg/families.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "cpg/detectors.hpp"

namespace cpg {

namespace {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

Graph split_graph(int n, double p, Rng& rng) {
  const int k = uniform_int(rng, 1, n);
  GraphBuilder b(n);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) b.add_edge(i, j);
  for (int s = k; s < n; ++s)
    for (int c = 0; c < k; ++c)
      if (coin(rng, p)) b.add_edge(s, c);
  return std::move(b).build();
}

// Each new vertex attaches to a clique, so the reverse insertion order is a
// perfect elimination ordering.
Graph chordal_graph(int n, double p, Rng& rng) {
  std::vector<VertexMask> rows(n, 0);
  for (int i = 1; i < n; ++i) {
    const int anchor = uniform_int(rng, 0, i - 1);
    VertexMask clique = bit(anchor);
    std::vector<int> pool = mask_to_vector(rows[anchor]);
    std::shuffle(pool.begin(), pool.end(), rng);
    for (int y : pool) {
      if ((clique & ~rows[y]) == 0 && coin(rng, p)) clique |= bit(y);
    }
    rows[i] = clique;
    for_each_bit(clique, [&](int y) { rows[y] |= bit(i); });
  }
  return Graph::from_rows(std::move(rows));
}

Graph random_graph(int n, double p, Rng& rng) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng, p)) b.add_edge(i, j);
  return std::move(b).build();
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Antipath: return "antipath";
    case Family::Hole: return "hole";
    case Family::Antihole: return "antihole";
    case Family::ExpandedAntihole: return "expanded-antihole";
    case Family::Clique: return "clique";
    case Family::Split: return "split";
    case Family::TriviallyPerfect: return "trivially-perfect";
    case Family::Chordal: return "chordal";
    case Family::Interval: return "interval";
    case Family::Random: return "random";
  }
  return "unknown";
}

Family family_from_string(const std::string& name) {
  for (Family f : {Family::Path, Family::Antipath, Family::Hole, Family::Antihole,
                   Family::ExpandedAntihole, Family::Clique, Family::Split,
                   Family::TriviallyPerfect, Family::Chordal, Family::Interval, Family::Random}) {
    if (to_string(f) == name) return f;
  }
  throw InputError("unknown family '" + name + "'");
}

Graph expanded_antihole(int p) {
  require(p >= 6 && p % 2 == 0, "expanded antihole needs an even antipath length p >= 6");
  GraphBuilder b(p + 2);
  auto w = [](int i) { return i + 1; };
  b.add_edge(0, 1);
  for (int i = 1; i <= p; ++i)
    for (int j = i + 2; j <= p; ++j) b.add_edge(w(i), w(j));
  for (int i = 2; i <= p - 2; ++i) b.add_edge(0, w(i));
  for (int i = 3; i <= p - 1; ++i) b.add_edge(1, w(i));
  return std::move(b).build();
}

IntervalSet random_nested_intervals(int n, std::uint64_t seed) {
  require(n >= 0, "negative interval count");
  Rng rng(seed);
  std::vector<int> parent(n, -1), copy_of(n, -1), roots;
  std::vector<std::vector<int>> children(n);
  std::vector<int> originals;
  for (int i = 0; i < n; ++i) {
    if (!originals.empty() && coin(rng, 0.15)) {
      copy_of[i] = originals[uniform_int(rng, 0, static_cast<int>(originals.size()) - 1)];
      continue;
    }
    const int pick = uniform_int(rng, 0, static_cast<int>(originals.size()));
    if (pick == static_cast<int>(originals.size())) {
      roots.push_back(i);
    } else {
      parent[i] = originals[pick];
      children[parent[i]].push_back(i);
    }
    originals.push_back(i);
  }
  IntervalSet out(n);
  std::int64_t pos = 0;
  std::function<void(int)> lay = [&](int v) {
    out[v].lo = pos++;
    for (int c : children[v]) lay(c);
    out[v].hi = pos++;
  };
  for (int r : roots) lay(r);
  for (int i = 0; i < n; ++i) {
    if (copy_of[i] >= 0) out[i] = out[copy_of[i]];
  }
  return out;
}

IntervalSet random_intervals(int n, std::uint64_t seed, std::int64_t span) {
  require(n >= 0, "negative interval count");
  Rng rng(seed);
  if (span <= 0) span = std::max<std::int64_t>(4, 2 * n);
  IntervalSet out(n);
  for (auto& iv : out) {
    iv.lo = std::uniform_int_distribution<std::int64_t>(0, span - 1)(rng);
    const std::int64_t len = std::uniform_int_distribution<std::int64_t>(1, std::max<std::int64_t>(1, span / 3))(rng);
    iv.hi = iv.lo + len - 1;
  }
  return out;
}

Graph generate(const FamilySpec& spec) {
  const int n = spec.size;
  require(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0,
          "edge probability must lie in [0, 1]");
  Rng rng(spec.seed);
  switch (spec.family) {
    case Family::ExpandedAntihole:
      return expanded_antihole(n);
    case Family::Hole:
      require(n >= 4, "a hole needs at least 4 vertices");
      return cycle_graph(n);
    case Family::Antihole:
      require(n >= 4, "an antihole needs at least 4 vertices");
      return complement(cycle_graph(n));
    default:
      break;
  }
  require(n >= 1, "family size must be positive");
  switch (spec.family) {
    case Family::Path: return path_graph(n);
    case Family::Antipath: return complement(path_graph(n));
    case Family::Clique: return complete_graph(n);
    case Family::Split: return split_graph(n, spec.edge_probability, rng);
    case Family::TriviallyPerfect: return interval_graph(random_nested_intervals(n, spec.seed));
    case Family::Chordal: return chordal_graph(n, spec.edge_probability, rng);
    case Family::Interval: return interval_graph(random_intervals(n, spec.seed));
    case Family::Random: return random_graph(n, spec.edge_probability, rng);
    default: break;
  }
  throw InputError("unhandled family");
}

bool is_split(const Graph& g) {
  // Hammer-Simeone: with degrees d_1 >= ... >= d_n and m the largest i with
  // d_i >= i - 1, g is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i.
  std::vector<int> d(g.n());
  for (int v = 0; v < g.n(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  int m = 0;
  for (int i = 1; i <= g.n(); ++i) {
    if (d[i - 1] >= i - 1) m = i;
  }
  long head = 0, tail = 0;
  for (int i = 0; i < g.n(); ++i) (i < m ? head : tail) += d[i];
  return head == static_cast<long>(m) * (m - 1) + tail;
}

std::vector<int> lex_bfs(const Graph& g) {
  const int n = g.n();
  std::vector<std::vector<int>> label(n);
  std::vector<int> order;
  VertexMask unvisited = g.all();
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for_each_bit(unvisited, [&](int v) {
      if (pick < 0 || label[v] > label[pick]) pick = v;
    });
    order.push_back(pick);
    unvisited &= ~bit(pick);
    for_each_bit(g.neighbors(pick) & unvisited, [&](int z) { label[z].push_back(n - step); });
  }
  return order;
}

bool is_chordal(const Graph& g) {
  const std::vector<int> order = lex_bfs(g);
  VertexMask earlier = 0;
  std::vector<int> pos(g.n());
  for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
  for (int v : order) {
    const VertexMask back = g.neighbors(v) & earlier;
    earlier |= bit(v);
    if (!back) continue;
    int parent = -1;
    for_each_bit(back, [&](int z) {
      if (parent < 0 || pos[z] > pos[parent]) parent = z;
    });
    if ((back & ~bit(parent)) & ~g.neighbors(parent)) return false;
  }
  return true;
}

bool is_trivially_perfect(const Graph& g) {
  // P4- and C4-free exactly when the closed neighbourhoods of the two ends of
  // every edge are nested.
  for (const Edge& e : g.edges()) {
    const VertexMask a = g.closed_neighbors(e.u);
    const VertexMask b = g.closed_neighbors(e.v);
    if ((a & ~b) && (b & ~a)) return false;
  }
  return true;
}

bool is_k_hole_free(const Graph& g, int k) {
  require(k >= 3, "k-hole-free needs k >= 3");
  return !find_hole_at_least(g, k + 1).has_value();
}

}  // namespace cpg
