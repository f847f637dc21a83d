#include "cpg/json_io.hpp"

#include <algorithm>

namespace cpg {

using nlohmann::json;

json label_to_json(const Label& label) {
  if (label.size() == 1) return label.front();
  return json(label);
}

int vertex_for_label(const Graph& g, const json& label) {
  Label want;
  if (label.is_number_integer()) {
    want = {label.get<int>()};
  } else if (label.is_array()) {
    want = label.get<Label>();
    std::sort(want.begin(), want.end());
  } else {
    throw InputError("vertex label must be an integer or an array of integers");
  }
  for (int v = 0; v < g.n(); ++v) {
    if (g.label(v) == want) return v;
  }
  throw InputError("no vertex carries label " + label.dump());
}

json certificate_to_json(const Graph& host, const Certificate& cert) {
  json vertices = json::array();
  for (int v : cert.vertices) vertices.push_back(label_to_json(host.label(v)));
  return {{"kind", to_string(cert.kind)},
          {"vertices", std::move(vertices)},
          {"valid", validate_certificate(host, cert)}};
}

Certificate certificate_from_json(const Graph& host, const json& doc) {
  try {
    Certificate cert;
    cert.kind = cert_kind_from_string(doc.at("kind").get<std::string>());
    for (const json& label : doc.at("vertices")) cert.vertices.push_back(vertex_for_label(host, label));
    return cert;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed certificate document: ") + e.what());
  }
}

json verdict_to_json(const Graph& g, const Verdict& verdict) {
  json doc = {{"schema_version", kSchemaVersion},
              {"contraction_perfect", verdict.contraction_perfect},
              {"method", to_string(verdict.method)},
              {"certificate", nullptr},
              {"culprit_edge", nullptr},
              {"host", verdict.culprit_edge ? "G/e" : "G"}};
  if (verdict.culprit_edge) {
    const Edge e = *verdict.culprit_edge;
    doc["culprit_edge"] = {label_to_json(g.label(e.u)), label_to_json(g.label(e.v))};
  }
  if (verdict.certificate) {
    doc["certificate"] = certificate_to_json(certificate_host(g, verdict), *verdict.certificate);
  }
  return doc;
}

json diagnosis_to_json(const Graph& g, Edge e, const EdgeDiagnosis& d) {
  json doc = {{"edge", {label_to_json(g.label(e.u)), label_to_json(g.label(e.v))}},
              {"status", to_string(d.status)},
              {"certificate", nullptr}};
  if (d.certificate) doc["certificate"] = certificate_to_json(g, *d.certificate);
  return doc;
}

json utter_to_json(const UtterGraph& u) {
  json origin = json::array();
  for (const Origin& o : u.origin) {
    if (const int* v = std::get_if<int>(&o)) {
      origin.push_back({{"vertex", *v}});
    } else {
      const Edge& e = std::get<Edge>(o);
      origin.push_back({{"edge", {e.u, e.v}}});
    }
  }
  json edges = json::array();
  for (const Edge& e : u.graph.edges()) edges.push_back({e.u, e.v});
  return {{"schema_version", kSchemaVersion},
          {"n", u.graph.n()},
          {"m", u.graph.edge_count()},
          {"edges", std::move(edges)},
          {"origin", std::move(origin)}};
}

json co2plex_to_json(const Co2PlexResult& r) {
  json f = json::array();
  for (const Edge& e : r.plex.F) f.push_back({e.u, e.v});
  return {{"schema_version", kSchemaVersion}, {"W", r.plex.W}, {"F", std::move(f)}, {"weight", r.weight}};
}

}  // namespace cpg
