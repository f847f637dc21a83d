// Command-line front end for the contraction-perfect graph toolkit.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cpg/checks.hpp"
#include "cpg/detectors.hpp"
#include "cpg/families.hpp"
#include "cpg/io.hpp"
#include "cpg/json_io.hpp"
#include "cpg/recognition.hpp"
#include "cpg/utter.hpp"

namespace {

using cpg::Graph;
using nlohmann::json;

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kInvariant = 3 };

struct Options {
  std::string input;
  std::string format;
  std::string output = "human";
  std::string emit = "edge-list";
  std::string method = "both";
  std::string verify;
  std::string family;
  int size = 0;
  std::uint64_t seed = 0;
  double p = 0.5;
  std::string property = "all";
  int count = 0;
  int max_n = 7;
  std::string to = "edge-list";
  bool brute_force = false;
};

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw cpg::InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<Graph> load_graphs(const Options& o) {
  const std::string text = slurp(o.input);
  if (o.format == "edge-list") return {cpg::parse_edge_list(text)};
  if (o.format == "weighted") return {cpg::parse_weighted(text).graph};
  std::vector<Graph> out;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(cpg::from_graph6(line));
  }
  if (out.empty()) throw cpg::InputError("no graph6 strings in input");
  return out;
}

Graph load_one(const Options& o) {
  auto graphs = load_graphs(o);
  if (graphs.size() != 1) throw cpg::InputError("expected exactly one graph");
  return std::move(graphs.front());
}

std::string label(const Graph& g, int v) { return cpg::label_to_json(g.label(v)).dump(); }

std::string vertex_list(const Graph& host, const std::vector<int>& vs) {
  std::string out;
  for (int v : vs) out += (out.empty() ? "" : " ") + label(host, v);
  return out;
}

void emit_graph(std::ostream& os, const Graph& g, const std::string& emit) {
  if (emit == "graph6") {
    os << cpg::to_graph6(g) << '\n';
  } else {
    os << cpg::write_edge_list(g);
  }
}

// A certificate that fails its own validator means a detector is broken.
void require_valid(const Graph& host, const cpg::Certificate& cert) {
  if (auto err = cpg::certificate_error(host, cert)) {
    throw cpg::InvariantViolation("emitted certificate failed validation: " + *err);
  }
}

int verify_certificates(const Graph& g, const json& doc, std::ostream& os) {
  if (doc.contains("verdicts")) {
    int worst = kOk;
    for (const json& v : doc.at("verdicts")) worst = std::max(worst, verify_certificates(g, v, os));
    return worst;
  }
  Graph host = g;
  json cert = doc;
  if (doc.contains("host")) {
    if (doc.at("certificate").is_null()) {
      os << "no certificate to verify\n";
      return kOk;
    }
    cert = doc.at("certificate");
    if (doc.at("host") == "G/e") {
      const json& e = doc.at("culprit_edge");
      const int u = cpg::vertex_for_label(g, e.at(0));
      const int v = cpg::vertex_for_label(g, e.at(1));
      host = cpg::contract_edge(g, {std::min(u, v), std::max(u, v)});
    }
  }
  const cpg::Certificate c = cpg::certificate_from_json(host, cert);
  if (auto err = cpg::certificate_error(host, c)) {
    os << "certificate invalid: " << *err << '\n';
    return kNegative;
  }
  os << "certificate valid: " << cpg::to_string(c.kind) << " on " << c.vertices.size() << " vertices\n";
  return kOk;
}

void print_verdict(std::ostream& os, const Graph& g, const cpg::Verdict& v) {
  os << cpg::to_string(v.method) << ": " << (v.contraction_perfect ? "contraction perfect" : "not contraction perfect")
     << '\n';
  if (v.culprit_edge) {
    os << "  culprit edge: " << label(g, v.culprit_edge->u) << " " << label(g, v.culprit_edge->v) << '\n';
  }
  if (v.certificate) {
    const Graph host = cpg::certificate_host(g, v);
    os << "  certificate: " << cpg::to_string(v.certificate->kind) << " in " << (v.culprit_edge ? "G/e" : "G")
       << ": " << vertex_list(host, v.certificate->vertices) << '\n';
  }
}

int run_recognize(const Options& o) {
  std::vector<cpg::Method> methods;
  if (o.method == "single-edge" || o.method == "both") methods.push_back(cpg::Method::SingleEdge);
  if (o.method == "forbidden" || o.method == "both") methods.push_back(cpg::Method::Forbidden);

  const auto graphs = load_graphs(o);
  if (!o.verify.empty()) {
    if (graphs.size() != 1) throw cpg::InputError("--verify needs exactly one input graph");
    json doc;
    try {
      doc = json::parse(slurp(o.verify));
    } catch (const json::exception& e) {
      throw cpg::InputError(std::string("cannot parse certificate file: ") + e.what());
    }
    return verify_certificates(graphs.front(), doc, std::cout);
  }

  int status = kOk;
  for (const Graph& g : graphs) {
    std::vector<cpg::Verdict> verdicts;
    for (cpg::Method m : methods) {
      verdicts.push_back(cpg::recognize(g, m));
      if (verdicts.back().certificate) require_valid(cpg::certificate_host(g, verdicts.back()), *verdicts.back().certificate);
    }
    const bool answer = verdicts.front().contraction_perfect;
    for (const auto& v : verdicts) {
      if (v.contraction_perfect != answer) {
        throw cpg::InvariantViolation("recognizers disagree on " + cpg::to_graph6(g));
      }
    }
    if (!answer) status = kNegative;

    if (o.output == "json") {
      json doc;
      if (verdicts.size() == 1) {
        doc = cpg::verdict_to_json(g, verdicts.front());
      } else {
        doc = {{"schema_version", cpg::kSchemaVersion}, {"contraction_perfect", answer}, {"agree", true}};
        doc["verdicts"] = json::array();
        for (const auto& v : verdicts) doc["verdicts"].push_back(cpg::verdict_to_json(g, v));
      }
      doc["n"] = g.n();
      doc["m"] = g.edge_count();
      std::cout << doc.dump() << '\n';
    } else {
      std::cout << "graph: n=" << g.n() << " m=" << g.edge_count() << '\n';
      for (const auto& v : verdicts) print_verdict(std::cout, g, v);
      if (verdicts.size() > 1) std::cout << "methods agree\n";
    }
  }
  return status;
}

int run_diagnose(const Options& o) {
  const Graph g = load_one(o);
  const cpg::PerfectionVerdict pv = cpg::is_perfect(g);
  if (!pv.perfect) {
    require_valid(g, *pv.certificate);
    if (o.output == "json") {
      json doc = {{"schema_version", cpg::kSchemaVersion}, {"perfect", false},
                  {"certificate", cpg::certificate_to_json(g, *pv.certificate)}};
      std::cout << doc.dump() << '\n';
    } else {
      std::cout << "not perfect; per-edge diagnosis needs a perfect graph\n"
                << "  certificate: " << cpg::to_string(pv.certificate->kind) << ": "
                << vertex_list(g, pv.certificate->vertices) << '\n';
    }
    return kNegative;
  }

  json edges = json::array();
  bool all_safe = true;
  for (const cpg::Edge& e : g.edges()) {
    const cpg::EdgeDiagnosis d = cpg::diagnose_edge(g, e);
    if (d.certificate) require_valid(g, *d.certificate);
    all_safe = all_safe && d.status == cpg::EdgeStatus::Safe;
    if (o.output == "json") {
      edges.push_back(cpg::diagnosis_to_json(g, e, d));
    } else {
      std::cout << label(g, e.u) << " " << label(g, e.v) << "  " << cpg::to_string(d.status);
      if (d.certificate) std::cout << "  " << vertex_list(g, d.certificate->vertices);
      std::cout << '\n';
    }
  }
  if (o.output == "json") {
    json doc = {{"schema_version", cpg::kSchemaVersion}, {"perfect", true}, {"contraction_perfect", all_safe},
                {"edges", std::move(edges)}};
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << (all_safe ? "contraction perfect" : "not contraction perfect") << '\n';
  }
  return all_safe ? kOk : kNegative;
}

int run_utter(const Options& o) {
  const Graph g = load_one(o);
  const cpg::UtterGraph u = cpg::utter(g);
  if (o.output == "json") {
    std::cout << cpg::utter_to_json(u).dump() << '\n';
    return kOk;
  }
  if (o.emit == "graph6") {
    emit_graph(std::cout, u.graph, o.emit);
    return kOk;
  }
  std::cout << "# utter graph of n=" << g.n() << " m=" << g.edge_count() << '\n';
  for (int x = 0; x < u.graph.n(); ++x) {
    if (const int* v = std::get_if<int>(&u.origin[x])) {
      std::cout << "# " << x << " = vertex " << *v << '\n';
    } else {
      const cpg::Edge e = std::get<cpg::Edge>(u.origin[x]);
      std::cout << "# " << x << " = edge " << e.u << " " << e.v << '\n';
    }
  }
  emit_graph(std::cout, u.graph, "edge-list");
  return kOk;
}

int run_co2plex(const Options& o) {
  const std::string text = slurp(o.input);
  cpg::WeightedGraph wg;
  if (o.format == "weighted") {
    wg = cpg::parse_weighted(text);
  } else {
    const Graph g = o.format == "graph6" ? cpg::from_graph6(text) : cpg::parse_edge_list(text);
    wg = cpg::WeightedGraph(g, std::vector<std::int64_t>(g.n(), 1));
  }
  const cpg::Co2PlexResult r = cpg::max_weight_co2plex(wg);
  if (o.brute_force && cpg::brute_force_co2plex(wg).weight != r.weight) {
    throw cpg::InvariantViolation("utter-graph optimum differs from exhaustive optimum");
  }
  if (o.output == "json") {
    std::cout << cpg::co2plex_to_json(r).dump() << '\n';
  } else {
    std::cout << "weight: " << r.weight << "\nW:";
    for (int v : r.plex.W) std::cout << ' ' << v;
    std::cout << "\nF:";
    for (const cpg::Edge& e : r.plex.F) std::cout << ' ' << e.u << '-' << e.v;
    std::cout << '\n';
  }
  return kOk;
}

int run_generate(const Options& o) {
  const cpg::FamilySpec spec{cpg::family_from_string(o.family), o.size, o.seed, o.p};
  const Graph g = cpg::generate(spec);
  if (o.output == "json") {
    json edges = json::array();
    for (const cpg::Edge& e : g.edges()) edges.push_back({e.u, e.v});
    json doc = {{"schema_version", cpg::kSchemaVersion}, {"family", o.family}, {"size", o.size},
                {"seed", o.seed}, {"p", o.p}, {"n", g.n()}, {"edges", std::move(edges)},
                {"graph6", cpg::to_graph6(g)}};
    std::cout << doc.dump() << '\n';
    return kOk;
  }
  if (o.emit == "graph6") {
    std::cerr << "family=" << o.family << " size=" << o.size << " seed=" << o.seed << " p=" << o.p << '\n';
  } else {
    std::cout << "# family=" << o.family << " size=" << o.size << " seed=" << o.seed << " p=" << o.p << '\n';
  }
  emit_graph(std::cout, g, o.emit);
  return kOk;
}

int run_check(const Options& o) {
  auto count_or = [&](int fallback) { return o.count > 0 ? o.count : fallback; };
  std::vector<cpg::BatchReport> reports;
  const bool all = o.property == "all";
  if (all || o.property == "parity") {
    reports.push_back(cpg::check_interval_parity(count_or(1000), o.seed));
    reports.push_back(cpg::check_interval_merge(count_or(200), o.seed));
  }
  if (all || o.property == "survival") reports.push_back(cpg::check_hole_survival(count_or(500), o.seed));
  if (all || o.property == "bijection") reports.push_back(cpg::check_co2plex_optimum(count_or(500), o.seed));

  bool ok = true;
  json docs = json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    if (o.output == "json") {
      docs.push_back({{"property", r.property}, {"seed", r.seed}, {"trials", r.trials}, {"passed", r.passed},
                      {"failures", r.failures}});
    } else {
      std::cout << r.property << " seed=" << r.seed << ": " << r.passed << "/" << r.trials << " passed\n";
      for (const auto& f : r.failures) std::cout << "  failed: " << f << '\n';
    }
  }
  if (o.output == "json") {
    std::cout << json{{"schema_version", cpg::kSchemaVersion}, {"ok", ok}, {"reports", docs}}.dump() << '\n';
  }
  return ok ? kOk : kInvariant;
}

int run_convert(const Options& o) {
  for (const Graph& g : load_graphs(o)) emit_graph(std::cout, g, o.to);
  return kOk;
}

int run_selftest(const Options& o) {
  const cpg::BatchReport r = cpg::check_method_agreement(o.max_n);
  if (o.output == "json") {
    std::cout << json{{"schema_version", cpg::kSchemaVersion}, {"max_n", o.max_n}, {"graphs", r.trials},
                      {"agree", r.passed}}
                     .dump()
              << '\n';
  } else {
    std::cout << "recognizers agree on " << r.passed << "/" << r.trials << " connected graphs with n <= "
              << o.max_n << '\n';
  }
  return r.ok() ? kOk : kInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contraction-perfect graph toolkit"};
  app.require_subcommand(1);
  Options o;
  int cap = 0;
  app.add_option("--cap", cap, "Lower the vertex cap (also CPG_VERTEX_CAP)")->check(CLI::Range(1, cpg::kMaxVertices));

  const std::vector<std::string> graph_formats{"edge-list", "graph6", "weighted"};
  auto add_input = [&](CLI::App* sub, const std::string& default_format) {
    sub->add_option("input", o.input, "Input file, or - for standard input");
    sub->add_option("--format", o.format, "Input format")
        ->check(CLI::IsMember(graph_formats))
        ->default_str(default_format);
    sub->add_option("--output", o.output, "Output style")->check(CLI::IsMember({"human", "json"}));
  };

  auto* recognize = app.add_subcommand("recognize", "Decide contraction perfection");
  add_input(recognize, "edge-list");
  recognize->add_option("--method", o.method)->check(CLI::IsMember({"single-edge", "forbidden", "both"}));
  recognize->add_option("--verify", o.verify, "Validate a JSON certificate against the input graph");

  auto* diagnose = app.add_subcommand("diagnose", "Per-edge report for a perfect graph");
  add_input(diagnose, "edge-list");

  auto* utter = app.add_subcommand("utter", "Build the utter graph");
  add_input(utter, "edge-list");
  utter->add_option("--emit", o.emit)->check(CLI::IsMember({"edge-list", "graph6"}));

  auto* co2plex = app.add_subcommand("co2plex", "Maximum-weight co-2-plex");
  add_input(co2plex, "weighted");
  co2plex->add_flag("--brute-force-check", o.brute_force, "Compare with exhaustive search (n <= 20)");

  auto* generate = app.add_subcommand("generate", "Emit a member of a graph family");
  generate->add_option("--family", o.family)->required();
  generate->add_option("--size", o.size, "Vertex count, or p for expanded-antihole")->required();
  generate->add_option("--seed", o.seed);
  generate->add_option("--p", o.p, "Edge probability for the random family");
  generate->add_option("--emit", o.emit)->check(CLI::IsMember({"edge-list", "graph6"}));
  generate->add_option("--output", o.output)->check(CLI::IsMember({"human", "json"}));

  auto* check = app.add_subcommand("check-lemma", "Seeded batch property runs");
  check->add_option("--property", o.property)->check(CLI::IsMember({"parity", "survival", "bijection", "all"}));
  check->add_option("--count", o.count, "Trials per property")->check(CLI::PositiveNumber);
  check->add_option("--seed", o.seed);
  check->add_option("--output", o.output)->check(CLI::IsMember({"human", "json"}));

  auto* convert = app.add_subcommand("convert", "Transcode between graph formats");
  add_input(convert, "edge-list");
  convert->add_option("--to", o.to)->check(CLI::IsMember({"edge-list", "graph6"}));

  auto* selftest = app.add_subcommand("selftest", "Exhaustive recognizer agreement sweep");
  selftest->add_option("--max-n", o.max_n)->check(CLI::Range(1, 10));
  selftest->add_option("--output", o.output)->check(CLI::IsMember({"human", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (cap > 0) cpg::set_vertex_cap(std::min(cap, cpg::vertex_cap()));
    CLI::App* sub = app.get_subcommands().front();
    if (o.format.empty()) o.format = sub == co2plex ? "weighted" : "edge-list";
    if (sub == recognize) return run_recognize(o);
    if (sub == diagnose) return run_diagnose(o);
    if (sub == utter) return run_utter(o);
    if (sub == co2plex) return run_co2plex(o);
    if (sub == generate) return run_generate(o);
    if (sub == check) return run_check(o);
    if (sub == convert) return run_convert(o);
    return run_selftest(o);
  } catch (const cpg::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const cpg::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const cpg::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvariant;
  }
}
