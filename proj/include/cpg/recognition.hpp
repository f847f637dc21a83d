#pragma once

#include <optional>
#include <string>

#include "cpg/detectors.hpp"
#include "cpg/graph.hpp"

namespace cpg {

enum class Method { SingleEdge, Forbidden };

std::string to_string(Method m);

/// Outcome of a contraction-perfection test. When the answer is negative the
/// certificate is present; it lives in G itself, or in G/culprit_edge when
/// culprit_edge is set.
struct Verdict {
  bool contraction_perfect = true;
  Method method = Method::SingleEdge;
  std::optional<Certificate> certificate;
  std::optional<Edge> culprit_edge;
};

/// Perfect, and perfect after contracting each single edge. Edges are tried
/// in ascending order and the first failure is reported.
Verdict is_contraction_perfect_single_edge(const Graph& g);

/// No hole of size >= 5, no odd antihole, no expanded antihole.
Verdict is_contraction_perfect_forbidden(const Graph& g);

Verdict recognize(const Graph& g, Method method);

/// The graph a verdict's certificate refers to.
Graph certificate_host(const Graph& g, const Verdict& verdict);

/// The verdict's certificate validates in its host graph.
bool verdict_is_consistent(const Graph& g, const Verdict& verdict);

enum class EdgeStatus { Safe, EvenHole, ExpandedAntihole };

std::string to_string(EdgeStatus s);

struct EdgeDiagnosis {
  EdgeStatus status = EdgeStatus::Safe;
  /// Present unless Safe; always hosted in g itself.
  std::optional<Certificate> certificate;
};

/// Why (or whether) contracting e breaks perfection of a perfect graph:
/// an even hole of size >= 6 through e, or an expanded antihole on e.
/// Throws PreconditionError if g is imperfect, InputError if e is no edge.
EdgeDiagnosis diagnose_edge(const Graph& g, Edge e);

/// Not contraction perfect, while every one-vertex deletion is.
bool is_minimally_non_cp(const Graph& g);

}  // namespace cpg
