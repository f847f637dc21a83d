#include "cpg/graph.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace cpg {

namespace {

int initial_cap() {
  if (const char* env = std::getenv("CPG_VERTEX_CAP")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 1 && value <= kMaxVertices) {
      return static_cast<int>(value);
    }
  }
  return kMaxVertices;
}

std::atomic<int>& cap_storage() {
  static std::atomic<int> cap{initial_cap()};
  return cap;
}

}  // namespace

int vertex_cap() { return cap_storage().load(std::memory_order_relaxed); }

void set_vertex_cap(int cap) {
  if (cap < 1 || cap > kMaxVertices) {
    throw InputError("vertex cap must lie in [1, " + std::to_string(kMaxVertices) + "]");
  }
  cap_storage().store(cap, std::memory_order_relaxed);
}

std::vector<int> mask_to_vector(VertexMask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  for_each_bit(m, [&](int v) { out.push_back(v); });
  return out;
}

VertexMask vector_to_mask(std::span<const int> vs) {
  VertexMask m = 0;
  for (int v : vs) m |= bit(v);
  return m;
}

Edge Edge::of(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.u == e.v) throw InputError("edge with identical endpoints");
    e = Edge::of(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  VertexMask seen = 0;
  for (const Edge& e : edges_) {
    VertexMask ends = bit(e.u) | bit(e.v);
    if (seen & ends) matching_ = false;
    seen |= ends;
  }
}

bool EdgeSet::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge::of(e.u, e.v));
}

VertexMask EdgeSet::vertices() const {
  VertexMask m = 0;
  for (const Edge& e : edges_) m |= bit(e.u) | bit(e.v);
  return m;
}

Graph::Graph(int n) {
  if (n < 0) throw InputError("negative vertex count");
  if (n > vertex_cap()) {
    throw CapExceeded("graph has " + std::to_string(n) + " vertices; cap is " +
                      std::to_string(vertex_cap()));
  }
  rows_.assign(n, 0);
  labels_.resize(n);
  for (int v = 0; v < n; ++v) labels_[v] = {v};
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  return std::move(b).build();
}

Graph Graph::from_rows(std::vector<VertexMask> rows) {
  Graph g(static_cast<int>(rows.size()));
  const VertexMask all = g.all();
  for (int v = 0; v < g.n(); ++v) {
    if (rows[v] & ~all) throw InputError("adjacency row refers to a missing vertex");
    if (rows[v] & bit(v)) throw InputError("self-loop at vertex " + std::to_string(v));
  }
  for (int a = 0; a < g.n(); ++a) {
    for_each_bit(rows[a], [&](int b) {
      if (!((rows[b] >> a) & 1U)) throw InputError("adjacency rows are not symmetric");
    });
  }
  g.rows_ = std::move(rows);
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexMask r : rows_) twice += popcount(r);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int a = 0; a < n(); ++a) {
    for_each_bit(rows_[a] & ~full_mask(a + 1), [&](int b) { out.push_back({a, b}); });
  }
  return out;
}

bool Graph::has_edge(Edge e) const {
  return e.u >= 0 && e.v >= 0 && e.u < n() && e.v < n() && e.u != e.v && adjacent(e.u, e.v);
}

Graph Graph::with_labels(std::vector<Label> labels) const {
  if (static_cast<int>(labels.size()) != n()) throw InputError("label count mismatch");
  Graph g = *this;
  for (Label& l : labels) std::sort(l.begin(), l.end());
  g.labels_ = std::move(labels);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n()) {
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(n()) + ")");
  }
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

GraphBuilder& GraphBuilder::add_edge(int a, int b) {
  g_.check_vertex(a);
  g_.check_vertex(b);
  if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
  g_.rows_[a] |= bit(b);
  g_.rows_[b] |= bit(a);
  return *this;
}

GraphBuilder& GraphBuilder::set_label(int v, Label label) {
  g_.check_vertex(v);
  std::sort(label.begin(), label.end());
  g_.labels_[v] = std::move(label);
  return *this;
}

Graph GraphBuilder::build() && { return std::move(g_); }

Graph complement(const Graph& g) {
  std::vector<VertexMask> rows(g.n());
  const VertexMask all = g.all();
  for (int v = 0; v < g.n(); ++v) rows[v] = ~g.neighbors(v) & all & ~bit(v);
  return Graph::from_rows(std::move(rows)).with_labels(g.labels());
}

Graph induced_subgraph(const Graph& g, std::span<const int> w) {
  VertexMask seen = 0;
  for (int v : w) {
    g.check_vertex(v);
    if (seen & bit(v)) throw InputError("duplicate vertex " + std::to_string(v));
    seen |= bit(v);
  }
  const int k = static_cast<int>(w.size());
  std::vector<VertexMask> rows(k, 0);
  std::vector<Label> labels(k);
  for (int i = 0; i < k; ++i) {
    labels[i] = g.label(w[i]);
    for (int j = 0; j < k; ++j) {
      if (g.adjacent(w[i], w[j])) rows[i] |= bit(j);
    }
  }
  return Graph::from_rows(std::move(rows)).with_labels(std::move(labels));
}

Graph induced_subgraph(const Graph& g, VertexMask w) {
  if (w & ~g.all()) throw InputError("vertex set exceeds the graph");
  const std::vector<int> vs = mask_to_vector(w);
  return induced_subgraph(g, std::span<const int>(vs));
}

Graph delete_vertex(const Graph& g, int v) {
  g.check_vertex(v);
  return induced_subgraph(g, g.all() & ~bit(v));
}

int contracted_index(Edge e, int vertex) {
  if (vertex == e.v) return e.u;
  return vertex > e.v ? vertex - 1 : vertex;
}

Graph contract_edge(const Graph& g, Edge e) {
  e = Edge::of(e.u, e.v);
  if (!g.has_edge(e)) {
    throw InputError("cannot contract non-edge (" + std::to_string(e.u) + ", " +
                     std::to_string(e.v) + ")");
  }
  return contract_set(g, EdgeSet({e}));
}

Graph contract_set(const Graph& g, const EdgeSet& f) {
  for (const Edge& e : f) {
    if (!g.has_edge(e)) {
      throw InputError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") is not in the graph");
    }
  }
  const int n = g.n();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : f) {
    int a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  // Roots are component minima, so numbering roots in ascending order
  // reproduces the shift convention of contracted_index.
  std::vector<int> image(n);
  std::vector<VertexMask> members;
  for (int v = 0; v < n; ++v) {
    if (find(v) == v) {
      image[v] = static_cast<int>(members.size());
      members.push_back(0);
    }
  }
  for (int v = 0; v < n; ++v) {
    image[v] = image[find(v)];
    members[image[v]] |= bit(v);
  }
  const int k = static_cast<int>(members.size());
  std::vector<VertexMask> rows(k, 0);
  std::vector<Label> labels(k);
  for (int c = 0; c < k; ++c) {
    VertexMask nb = 0;
    for_each_bit(members[c], [&](int v) {
      nb |= g.neighbors(v);
      labels[c].insert(labels[c].end(), g.label(v).begin(), g.label(v).end());
    });
    nb &= ~members[c];
    for_each_bit(nb, [&](int z) { rows[c] |= bit(image[z]); });
  }
  return Graph::from_rows(std::move(rows)).with_labels(std::move(labels));
}

Graph add_twin(const Graph& g, int v, TwinKind kind) {
  g.check_vertex(v);
  const int n = g.n();
  GraphBuilder b(n + 1);
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  for_each_bit(g.neighbors(v), [&](int z) { b.add_edge(n, z); });
  if (kind == TwinKind::True) b.add_edge(n, v);
  int fresh = 0;
  for (int x = 0; x < n; ++x) {
    b.set_label(x, g.label(x));
    for (int name : g.label(x)) fresh = std::max(fresh, name + 1);
  }
  b.set_label(n, {fresh});
  return std::move(b).build();
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> out;
  VertexMask unseen = g.all();
  while (unseen) {
    VertexMask comp = bit(lowest(unseen));
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
      frontier = next & ~comp;
      comp |= next;
    }
    unseen &= ~comp;
    out.push_back(mask_to_vector(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  return std::move(b).build();
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "Graph(n=" << g.n() << ", edges={";
  bool first = true;
  for (const Edge& e : g.edges()) {
    os << (first ? "" : ", ") << e.u << '-' << e.v;
    first = false;
  }
  os << "})";
  return os.str();
}

}  // namespace cpg
