#pragma once

#include <json.hpp>

#include "cpg/detectors.hpp"
#include "cpg/graph.hpp"
#include "cpg/recognition.hpp"
#include "cpg/utter.hpp"

namespace cpg {

inline constexpr int kSchemaVersion = 1;

/// A vertex's label as JSON: a bare integer for an original vertex, a sorted
/// array for a contracted one.
nlohmann::json label_to_json(const Label& label);
/// Finds the vertex of g carrying this label; throws InputError if none.
int vertex_for_label(const Graph& g, const nlohmann::json& label);

/// {"kind", "vertices" (labels in host), "valid"}.
nlohmann::json certificate_to_json(const Graph& host, const Certificate& cert);
Certificate certificate_from_json(const Graph& host, const nlohmann::json& doc);

nlohmann::json verdict_to_json(const Graph& g, const Verdict& verdict);
nlohmann::json diagnosis_to_json(const Graph& g, Edge e, const EdgeDiagnosis& d);
nlohmann::json utter_to_json(const UtterGraph& u);
nlohmann::json co2plex_to_json(const Co2PlexResult& r);

}  // namespace cpg
