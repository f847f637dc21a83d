#include "cpg/io.hpp"

#include <istream>
#include <sstream>

namespace cpg {

namespace {

// Pulls whitespace-separated integers, skipping '#' comment lines.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  bool next(std::int64_t& out) {
    while (true) {
      if (line_ >> out) return true;
      if (!line_.eof()) throw InputError("expected an integer on line " + std::to_string(lineno_));
      std::string raw;
      if (!std::getline(in_, raw)) return false;
      ++lineno_;
      auto first = raw.find_first_not_of(" \t\r");
      if (first != std::string::npos && raw[first] == '#') raw.clear();
      line_.clear();
      line_.str(raw);
    }
  }

  std::int64_t expect(const char* what) {
    std::int64_t v = 0;
    if (!next(v)) throw InputError(std::string("unexpected end of input reading ") + what);
    return v;
  }

 private:
  std::istream& in_;
  std::istringstream line_;
  int lineno_ = 0;
};

Graph read_edges(TokenReader& tokens) {
  const std::int64_t n = tokens.expect("vertex count");
  const std::int64_t m = tokens.expect("edge count");
  if (n < 0 || m < 0) throw InputError("negative count in header");
  if (n > vertex_cap()) {
    throw CapExceeded("input has " + std::to_string(n) + " vertices; cap is " +
                      std::to_string(vertex_cap()));
  }
  GraphBuilder b(static_cast<int>(n));
  std::vector<VertexMask> seen(static_cast<std::size_t>(n), 0);
  for (std::int64_t i = 0; i < m; ++i) {
    const std::int64_t u = tokens.expect("edge endpoint");
    const std::int64_t v = tokens.expect("edge endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    }
    if (u != v && (seen[u] & bit(static_cast<int>(v)))) {
      throw InputError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    b.add_edge(static_cast<int>(u), static_cast<int>(v));
    seen[u] |= bit(static_cast<int>(v));
    seen[v] |= bit(static_cast<int>(u));
  }
  return std::move(b).build();
}

}  // namespace

WeightedGraph::WeightedGraph(Graph g, std::vector<std::int64_t> w)
    : graph(std::move(g)), weights(std::move(w)) {
  if (static_cast<int>(weights.size()) != graph.n()) {
    throw InputError("weight vector length does not match vertex count");
  }
}

std::int64_t WeightedGraph::weight_of(std::span<const int> vs) const {
  std::int64_t total = 0;
  for (int v : vs) total += weights.at(v);
  return total;
}

Graph read_edge_list(std::istream& in) {
  TokenReader tokens(in);
  Graph g = read_edges(tokens);
  std::int64_t extra = 0;
  if (tokens.next(extra)) throw InputError("trailing data after the edge list");
  return g;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  const auto edges = g.edges();
  os << g.n() << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

WeightedGraph read_weighted(std::istream& in) {
  TokenReader tokens(in);
  Graph g = read_edges(tokens);
  std::vector<std::int64_t> weights(g.n(), 0);
  std::vector<bool> seen(g.n(), false);
  for (int i = 0; i < g.n(); ++i) {
    const std::int64_t v = tokens.expect("weighted vertex");
    const std::int64_t w = tokens.expect("vertex weight");
    if (v < 0 || v >= g.n()) throw InputError("weight line names vertex " + std::to_string(v));
    if (seen[v]) throw InputError("vertex " + std::to_string(v) + " weighted twice");
    seen[v] = true;
    weights[v] = w;
  }
  std::int64_t extra = 0;
  if (tokens.next(extra)) throw InputError("trailing data after the weight block");
  return WeightedGraph(std::move(g), std::move(weights));
}

WeightedGraph parse_weighted(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_weighted(in);
}

std::string write_weighted(const WeightedGraph& wg) {
  std::string out = write_edge_list(wg.graph);
  for (int v = 0; v < wg.graph.n(); ++v) {
    out += std::to_string(v) + ' ' + std::to_string(wg.weights[v]) + '\n';
  }
  return out;
}

std::string to_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw InputError("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw InputError("invalid graph6 byte");
  }
  std::size_t pos = 0;
  long n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw InputError("graph6 size field too large");
    n = (long(text[1] - 63) << 12) | (long(text[2] - 63) << 6) | long(text[3] - 63);
    pos = 4;
  }
  if (n > vertex_cap()) {
    throw CapExceeded("graph6 input has " + std::to_string(n) + " vertices; cap is " +
                      std::to_string(vertex_cap()));
  }
  const long pairs = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() != expected) throw InputError("graph6 string has the wrong length");
  GraphBuilder b(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (pairs % 6 != 0) {
    const int byte = text[expected - 1] - 63;
    if (byte & ((1 << (6 - pairs % 6)) - 1)) throw InputError("graph6 padding bits are not zero");
  }
  return std::move(b).build();
}

}  // namespace cpg
