#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpg/graph.hpp"

namespace cpg {

enum class CertKind { Hole, OddAntihole, ExpandedAntihole };

std::string to_string(CertKind kind);
CertKind cert_kind_from_string(const std::string& name);

/// Witness for a negative verdict, expressed over its host graph's indices.
///
/// Hole and OddAntihole list the cycle order (v_1, ..., v_p). An
/// ExpandedAntihole lists u, v and then the antipath w_1, ..., w_p, where u
/// sees exactly w_2..w_{p-2} and v sees exactly w_3..w_{p-1} among the w's.
struct Certificate {
  CertKind kind = CertKind::Hole;
  std::vector<int> vertices;

  bool operator==(const Certificate&) const = default;
};

/// Checks every defining clause of the certificate against g. Shares no code
/// with the searchers. A C5 validates as either Hole or OddAntihole.
bool validate_certificate(const Graph& g, const Certificate& cert);
/// Same, with a reason on failure.
std::optional<std::string> certificate_error(const Graph& g, const Certificate& cert);

/// Induced cycle on at least k vertices (k >= 4).
std::optional<Certificate> find_hole_at_least(const Graph& g, int k);
/// Induced cycle of odd length >= 5.
std::optional<Certificate> find_odd_hole(const Graph& g);
/// Induced cycle of even length >= min_size passing through the edge e.
std::optional<Certificate> find_even_hole_through(const Graph& g, Edge e, int min_size = 6);
/// Odd hole of the complement, reported as an OddAntihole.
std::optional<Certificate> find_odd_antihole(const Graph& g);

std::optional<Certificate> find_expanded_antihole(const Graph& g);
/// Expanded antihole whose distinguished edge is e (either orientation).
/// Throws InputError when e is not an edge of g.
std::optional<Certificate> find_expanded_antihole_involving(const Graph& g, Edge e);

struct PerfectionVerdict {
  bool perfect = true;
  std::optional<Certificate> certificate;
};

/// Odd hole or odd antihole search; perfect iff neither exists.
PerfectionVerdict is_perfect(const Graph& g);

// Exact values for cross-checking on small graphs.
int clique_number(const Graph& g);
int chromatic_number(const Graph& g);

}  // namespace cpg
