// Certificate validation. Deliberately written against Graph::adjacent only,
// so a searcher bug cannot be masked by a validator bug in shared code.

#include <set>

#include "cpg/detectors.hpp"

namespace cpg {

namespace {

std::optional<std::string> check_distinct(const Graph& g, const std::vector<int>& vs) {
  std::set<int> seen;
  for (int v : vs) {
    if (v < 0 || v >= g.n()) return "vertex " + std::to_string(v) + " out of range";
    if (!seen.insert(v).second) return "vertex " + std::to_string(v) + " repeated";
  }
  return std::nullopt;
}

// Every pair (i, j) must be adjacent exactly when |i - j| == 1 cyclically;
// `want_edge` selects graph (hole) or complement (antihole) semantics.
std::optional<std::string> check_cycle(const Graph& g, const std::vector<int>& vs, bool want_edge) {
  const std::size_t p = vs.size();
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == p - 1);
      const bool edge = g.adjacent(vs[i], vs[j]);
      if ((edge == want_edge) != consecutive) {
        return "pair (" + std::to_string(vs[i]) + ", " + std::to_string(vs[j]) +
               ") breaks the cycle pattern";
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> certificate_error(const Graph& g, const Certificate& cert) {
  const auto& vs = cert.vertices;
  if (auto err = check_distinct(g, vs)) return err;
  const int p = static_cast<int>(vs.size());
  switch (cert.kind) {
    case CertKind::Hole:
      if (p < 4) return "a hole needs at least 4 vertices";
      return check_cycle(g, vs, true);
    case CertKind::OddAntihole:
      if (p < 5 || p % 2 == 0) return "an odd antihole needs an odd number >= 5 of vertices";
      return check_cycle(g, vs, false);
    case CertKind::ExpandedAntihole: {
      const int len = p - 2;
      if (len < 6 || len % 2 != 0) return "antipath length must be even and at least 6";
      const int u = vs[0];
      const int v = vs[1];
      if (!g.adjacent(u, v)) return "u and v are not adjacent";
      // w_i sits at vs[i + 1] for 1-based i.
      auto w = [&](int i) { return vs[i + 1]; };
      for (int i = 1; i <= len; ++i) {
        for (int j = i + 1; j <= len; ++j) {
          if (g.adjacent(w(i), w(j)) != (j - i >= 2)) return "w's do not induce an antipath";
        }
      }
      for (int i = 1; i <= len; ++i) {
        const bool u_should = i >= 2 && i <= len - 2;
        const bool v_should = i >= 3 && i <= len - 1;
        if (g.adjacent(u, w(i)) != u_should) {
          return "u has the wrong adjacency to w_" + std::to_string(i);
        }
        if (g.adjacent(v, w(i)) != v_should) {
          return "v has the wrong adjacency to w_" + std::to_string(i);
        }
      }
      return std::nullopt;
    }
  }
  return "unknown certificate kind";
}

bool validate_certificate(const Graph& g, const Certificate& cert) {
  return !certificate_error(g, cert).has_value();
}

}  // namespace cpg
