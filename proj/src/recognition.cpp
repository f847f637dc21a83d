#include "cpg/recognition.hpp"

#include <algorithm>

namespace cpg {

namespace {

std::vector<int> remap(const std::vector<int>& local, const std::vector<int>& comp) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int j : local) out.push_back(comp[j]);
  return out;
}

Verdict single_edge_connected(const Graph& g) {
  Verdict out{true, Method::SingleEdge, std::nullopt, std::nullopt};
  PerfectionVerdict base = is_perfect(g);
  if (!base.perfect) {
    out.contraction_perfect = false;
    out.certificate = std::move(base.certificate);
    return out;
  }
  for (const Edge& e : g.edges()) {
    PerfectionVerdict after = is_perfect(contract_edge(g, e));
    if (!after.perfect) {
      out.contraction_perfect = false;
      out.certificate = std::move(after.certificate);
      out.culprit_edge = e;
      return out;
    }
  }
  return out;
}

Verdict forbidden_connected(const Graph& g) {
  Verdict out{false, Method::Forbidden, std::nullopt, std::nullopt};
  if ((out.certificate = find_hole_at_least(g, 5))) return out;
  if ((out.certificate = find_odd_antihole(g))) return out;
  if ((out.certificate = find_expanded_antihole(g))) return out;
  out.contraction_perfect = true;
  return out;
}

// Runs `connected` on each component and lifts a failing certificate back to
// the indices of g (or of g/culprit).
template <class F>
Verdict componentwise(const Graph& g, Method method, F connected) {
  const auto comps = connected_components(g);
  if (comps.size() <= 1) return connected(g);
  for (const auto& comp : comps) {
    Verdict local = connected(induced_subgraph(g, std::span<const int>(comp)));
    if (local.contraction_perfect) continue;
    Verdict out{false, method, std::nullopt, std::nullopt};
    Certificate cert = *local.certificate;
    if (local.culprit_edge) {
      const Edge le = *local.culprit_edge;
      const Edge ge = Edge::of(comp[le.u], comp[le.v]);
      for (int& j : cert.vertices) {
        const int x = j >= le.v ? j + 1 : j;
        j = contracted_index(ge, comp[x]);
      }
      out.culprit_edge = ge;
    } else {
      cert.vertices = remap(cert.vertices, comp);
    }
    out.certificate = std::move(cert);
    return out;
  }
  return Verdict{true, method, std::nullopt, std::nullopt};
}

}  // namespace

std::string to_string(Method m) {
  return m == Method::SingleEdge ? "single-edge" : "forbidden-subgraph";
}

std::string to_string(EdgeStatus s) {
  switch (s) {
    case EdgeStatus::Safe: return "safe";
    case EdgeStatus::EvenHole: return "even-hole";
    case EdgeStatus::ExpandedAntihole: return "expanded-antihole";
  }
  return "unknown";
}

Verdict is_contraction_perfect_single_edge(const Graph& g) {
  return componentwise(g, Method::SingleEdge, single_edge_connected);
}

Verdict is_contraction_perfect_forbidden(const Graph& g) {
  return componentwise(g, Method::Forbidden, forbidden_connected);
}

Verdict recognize(const Graph& g, Method method) {
  return method == Method::SingleEdge ? is_contraction_perfect_single_edge(g)
                                      : is_contraction_perfect_forbidden(g);
}

Graph certificate_host(const Graph& g, const Verdict& verdict) {
  return verdict.culprit_edge ? contract_edge(g, *verdict.culprit_edge) : g;
}

bool verdict_is_consistent(const Graph& g, const Verdict& verdict) {
  if (verdict.contraction_perfect) return !verdict.certificate && !verdict.culprit_edge;
  if (!verdict.certificate) return false;
  if (verdict.culprit_edge && !g.has_edge(*verdict.culprit_edge)) return false;
  return validate_certificate(certificate_host(g, verdict), *verdict.certificate);
}

EdgeDiagnosis diagnose_edge(const Graph& g, Edge e) {
  e = Edge::of(e.u, e.v);
  if (!g.has_edge(e)) throw InputError("diagnose_edge: not an edge of the graph");
  if (!is_perfect(g).perfect) throw PreconditionError("diagnose_edge requires a perfect graph");
  if (is_perfect(contract_edge(g, e)).perfect) return {EdgeStatus::Safe, std::nullopt};
  if (auto hole = find_even_hole_through(g, e, 6)) return {EdgeStatus::EvenHole, std::move(hole)};
  if (auto eah = find_expanded_antihole_involving(g, e)) {
    return {EdgeStatus::ExpandedAntihole, std::move(eah)};
  }
  throw InvariantViolation("contraction broke perfection but no witness exists in the graph");
}

bool is_minimally_non_cp(const Graph& g) {
  if (is_contraction_perfect_forbidden(g).contraction_perfect) return false;
  for (int v = 0; v < g.n(); ++v) {
    if (!is_contraction_perfect_forbidden(delete_vertex(g, v)).contraction_perfect) return false;
  }
  return true;
}

}  // namespace cpg
