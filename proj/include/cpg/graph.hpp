#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpg {

/// Bit set over vertex identifiers; bit i set means vertex i is a member.
using VertexMask = std::uint64_t;

/// Hard upper bound imposed by the single-word adjacency rows.
inline constexpr int kMaxVertices = 64;

/// Malformed input: bad vertex ids, non-edges passed to contraction, parse errors.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A graph would exceed the configured vertex cap.
class CapExceeded : public InputError {
 public:
  using InputError::InputError;
};

/// An operation was called on an input violating its stated hypothesis.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A produced result failed its own validation. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Vertex cap in effect. Defaults to 64; the CPG_VERTEX_CAP environment
/// variable may lower it. Values above kMaxVertices are rejected.
int vertex_cap();
void set_vertex_cap(int cap);

inline constexpr VertexMask bit(int v) { return VertexMask{1} << v; }
inline constexpr VertexMask full_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}
inline int popcount(VertexMask m) { return std::popcount(m); }
inline int lowest(VertexMask m) { return std::countr_zero(m); }

/// Calls f(v) for every member of m in ascending order.
template <class F>
void for_each_bit(VertexMask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

std::vector<int> mask_to_vector(VertexMask m);
VertexMask vector_to_mask(std::span<const int> vs);

struct Edge {
  int u = 0;
  int v = 0;

  /// Normalizes the endpoint order so that u < v.
  static Edge of(int a, int b);

  auto operator<=>(const Edge&) const = default;
};

/// Sorted set of distinct edges.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(Edge e) const;
  /// True when no two edges share an endpoint.
  bool is_matching() const { return matching_; }
  VertexMask vertices() const;

  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

 private:
  std::vector<Edge> edges_;
  bool matching_ = true;
};

/// Original identities carried by a vertex: a sorted list of names. Plain
/// vertices carry one name; a contracted vertex carries the union of the
/// names it absorbed.
using Label = std::vector<int>;

/// Simple undirected graph on vertices 0..n-1 backed by a dense bit matrix.
/// Values are immutable once built; every operation returns a new graph.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices labelled {0}, {1}, ...
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_rows(std::vector<VertexMask> rows);

  int n() const { return static_cast<int>(rows_.size()); }
  int edge_count() const;
  bool adjacent(int a, int b) const { return (rows_[a] >> b) & 1U; }
  VertexMask neighbors(int v) const { return rows_[v]; }
  VertexMask closed_neighbors(int v) const { return rows_[v] | bit(v); }
  VertexMask all() const { return full_mask(n()); }
  int degree(int v) const { return popcount(rows_[v]); }
  std::span<const VertexMask> rows() const { return rows_; }

  /// Edges in ascending (u, v) order.
  std::vector<Edge> edges() const;
  bool has_edge(Edge e) const;

  const std::vector<Label>& labels() const { return labels_; }
  const Label& label(int v) const { return labels_[v]; }
  /// Replaces labels; one per vertex.
  Graph with_labels(std::vector<Label> labels) const;

  /// Structural equality ignoring labels.
  bool same_structure(const Graph& other) const { return rows_ == other.rows_; }
  bool operator==(const Graph&) const = default;

  void check_vertex(int v) const;

 private:
  friend class GraphBuilder;
  std::vector<VertexMask> rows_;
  std::vector<Label> labels_;
};

/// Mutable staging area for building a Graph edge by edge.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  GraphBuilder& add_edge(int a, int b);
  GraphBuilder& set_label(int v, Label label);
  Graph build() &&;

 private:
  Graph g_;
};

enum class TwinKind { True, False };

Graph complement(const Graph& g);
/// Vertex i of the result is w[i]; labels follow their vertices.
Graph induced_subgraph(const Graph& g, std::span<const int> w);
Graph induced_subgraph(const Graph& g, VertexMask w);
Graph delete_vertex(const Graph& g, int v);

/// Where a vertex of g lands after contracting the edge e: the merged vertex
/// takes index e.u and every vertex above e.v shifts down by one.
int contracted_index(Edge e, int vertex);

/// G/e. Throws InputError when e is not an edge of g.
Graph contract_edge(const Graph& g, Edge e);
/// G/F. Each component of (V(F), F) becomes the vertex indexed by its rank
/// among component minima; equals iterated contract_edge in any order.
Graph contract_set(const Graph& g, const EdgeSet& f);

/// Appends a twin v' of v as vertex n. A true twin is adjacent to v and
/// to N(v); a false twin copies N(v) only.
Graph add_twin(const Graph& g, int v, TwinKind kind);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Common named graphs.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

std::string to_string(const Graph& g);

}  // namespace cpg
