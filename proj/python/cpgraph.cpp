#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "cpg/checks.hpp"
#include "cpg/detectors.hpp"
#include "cpg/families.hpp"
#include "cpg/io.hpp"
#include "cpg/json_io.hpp"
#include "cpg/recognition.hpp"
#include "cpg/utter.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

py::object to_python(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const json& x : j) out.append(to_python(x));
      return out;
    }
    default: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
      return out;
    }
  }
}

cpg::Method method_from(const std::string& name) {
  if (name == "single-edge") return cpg::Method::SingleEdge;
  if (name == "forbidden") return cpg::Method::Forbidden;
  throw cpg::InputError("method must be single-edge or forbidden");
}

std::vector<std::pair<int, int>> edge_pairs(const cpg::Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const cpg::Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

cpg::Edge edge_of(const cpg::Graph& g, int u, int v) {
  g.check_vertex(u);
  g.check_vertex(v);
  return cpg::Edge::of(u, v);
}

py::object certificate_or_none(const cpg::Graph& host, const std::optional<cpg::Certificate>& c) {
  if (!c) return py::none();
  return to_python(cpg::certificate_to_json(host, *c));
}

}  // namespace

PYBIND11_MODULE(cpgraph, m) {
  m.doc() = "Contraction-perfect graph recognition, utter graphs and co-2-plexes";

  auto input_error = py::register_exception<cpg::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<cpg::CapExceeded>(m, "CapExceeded", input_error.ptr());
  py::register_exception<cpg::PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<cpg::InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<cpg::Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             cpg::GraphBuilder b(n);
             for (auto [u, v] : edges) b.add_edge(u, v);
             return std::move(b).build();
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("n", &cpg::Graph::n)
      .def_property_readonly("m", &cpg::Graph::edge_count)
      .def("edges", &edge_pairs)
      .def("adjacent",
           [](const cpg::Graph& g, int u, int v) {
             g.check_vertex(u);
             g.check_vertex(v);
             return g.adjacent(u, v);
           })
      .def("neighbors",
           [](const cpg::Graph& g, int v) {
             g.check_vertex(v);
             return cpg::mask_to_vector(g.neighbors(v));
           })
      .def("label", [](const cpg::Graph& g, int v) {
        g.check_vertex(v);
        return g.label(v);
      })
      .def("same_structure", &cpg::Graph::same_structure)
      .def("to_graph6", [](const cpg::Graph& g) { return cpg::to_graph6(g); })
      .def("to_edge_list", [](const cpg::Graph& g) { return cpg::write_edge_list(g); })
      .def_static("from_graph6", [](const std::string& s) { return cpg::from_graph6(s); })
      .def_static("from_edge_list", [](const std::string& s) { return cpg::parse_edge_list(s); })
      .def(py::self == py::self)
      .def("__repr__", [](const cpg::Graph& g) {
        return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("path_graph", &cpg::path_graph);
  m.def("cycle_graph", &cpg::cycle_graph);
  m.def("complete_graph", &cpg::complete_graph);
  m.def("complement", &cpg::complement);
  m.def("induced_subgraph",
        [](const cpg::Graph& g, const std::vector<int>& w) { return cpg::induced_subgraph(g, std::span<const int>(w)); });
  m.def("contract_edge", [](const cpg::Graph& g, int u, int v) { return cpg::contract_edge(g, edge_of(g, u, v)); });
  m.def("contract_set", [](const cpg::Graph& g, const std::vector<std::pair<int, int>>& f) {
    std::vector<cpg::Edge> edges;
    for (auto [u, v] : f) edges.push_back(edge_of(g, u, v));
    return cpg::contract_set(g, cpg::EdgeSet(edges));
  });

  m.def("is_perfect", [](const cpg::Graph& g) {
    const auto v = cpg::is_perfect(g);
    return py::make_tuple(v.perfect, certificate_or_none(g, v.certificate));
  });
  m.def("find_odd_hole", [](const cpg::Graph& g) { return certificate_or_none(g, cpg::find_odd_hole(g)); });
  m.def("find_expanded_antihole",
        [](const cpg::Graph& g) { return certificate_or_none(g, cpg::find_expanded_antihole(g)); });
  m.def(
      "recognize",
      [](const cpg::Graph& g, const std::string& method) {
        return to_python(cpg::verdict_to_json(g, cpg::recognize(g, method_from(method))));
      },
      py::arg("g"), py::arg("method") = "single-edge");
  m.def("is_contraction_perfect",
        [](const cpg::Graph& g) { return cpg::is_contraction_perfect_single_edge(g).contraction_perfect; });
  m.def("diagnose", [](const cpg::Graph& g, int u, int v) {
    const cpg::Edge e = edge_of(g, u, v);
    return to_python(cpg::diagnosis_to_json(g, e, cpg::diagnose_edge(g, e)));
  });
  m.def("is_minimally_non_cp", &cpg::is_minimally_non_cp);

  m.def("utter", [](const cpg::Graph& g) {
    const cpg::UtterGraph u = cpg::utter(g);
    return py::make_tuple(u.graph, to_python(cpg::utter_to_json(u)["origin"]));
  });
  m.def("max_weight_co2plex", [](const cpg::Graph& g, const std::vector<std::int64_t>& weights) {
    return to_python(cpg::co2plex_to_json(cpg::max_weight_co2plex(cpg::WeightedGraph(g, weights))));
  });
  m.def("brute_force_co2plex_weight", [](const cpg::Graph& g, const std::vector<std::int64_t>& weights) {
    return cpg::brute_force_co2plex(cpg::WeightedGraph(g, weights)).weight;
  });

  m.def(
      "generate",
      [](const std::string& family, int size, std::uint64_t seed, double p) {
        return cpg::generate({cpg::family_from_string(family), size, seed, p});
      },
      py::arg("family"), py::arg("size"), py::arg("seed") = 0, py::arg("p") = 0.5);
  m.def("expanded_antihole", &cpg::expanded_antihole);
  m.def("is_split", &cpg::is_split);
  m.def("is_chordal", &cpg::is_chordal);
  m.def("is_trivially_perfect", &cpg::is_trivially_perfect);

  m.def("check_parity", [](const std::vector<std::pair<std::int64_t, std::int64_t>>& intervals) {
    cpg::IntervalSet s;
    for (auto [a, b] : intervals) s.push_back({a, b});
    return cpg::check_parity_lemma(s);
  });
  m.def("selftest", [](int max_n) { return cpg::check_method_agreement(max_n).trials; }, py::arg("max_n") = 6);

  m.def("vertex_cap", &cpg::vertex_cap);
  m.def("set_vertex_cap", &cpg::set_vertex_cap);
}
