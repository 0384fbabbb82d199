#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dmlab/constructive.hpp"
#include "dmlab/enumerate.hpp"
#include "dmlab/error.hpp"
#include "dmlab/io.hpp"
#include "dmlab/kfk.hpp"
#include "dmlab/qw.hpp"
#include "dmlab/search.hpp"
#include "dmlab/spectral.hpp"

namespace py = pybind11;
using namespace dmlab;

namespace {

QWSequence to_sequence(const std::vector<int>& profile) { return profile_to_sequence(profile); }

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["pass"] = r.pass;
  d["bijective"] = r.bijective;
  d["target"] = r.target;
  d["weights"] = r.weights;
  d["first_violation"] = r.first_violation ? py::cast(*r.first_violation) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_dmlab, m) {
  m.doc() = "Distance magic labelings of quasi wreath graphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }),
           py::arg("order"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edges", &Graph::edges)
      .def("neighbors", &Graph::neighbors, py::arg("v"))
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("to_graph6", [](const Graph& g) { return write_graph6(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__len__", &Graph::order)
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">";
      });

  m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
  m.def("write_graph6", &write_graph6);
  m.def("is_regular", &is_regular, py::arg("g"), py::arg("valency"));
  m.def("is_connected", &is_connected);
  m.def("canonical_certificate", [](const Graph& g) { return py::bytes(canonical_certificate(g)); });
  m.def("are_isomorphic", &are_isomorphic);

  m.def("build_qw", [](const std::vector<int>& profile) { return build_qw(to_sequence(profile)); },
        py::arg("profile"));
  m.def("build_qw_sequence",
        [](const std::vector<int>& bits) { return build_qw(validate_sequence(bits)); }, py::arg("bits"));
  m.def("build_wreath", &build_wreath, py::arg("k"));
  m.def("profile_to_sequence", [](const std::vector<int>& p) {
    const auto s = to_sequence(p);
    return std::vector<int>(s.bits().begin(), s.bits().end());
  });
  m.def("classify", [](const std::vector<int>& profile) {
    const auto c = classify(to_sequence(profile));
    py::dict d;
    d["distance_magic"] = c.distance_magic;
    d["reasons"] = c.reasons;
    d["type_a"] = c.type_a;
    d["type_b"] = c.type_b;
    d["other"] = c.other;
    return d;
  }, py::arg("profile"));

  m.def("construct_labeling",
        [](const std::vector<int>& profile) { return construct_labeling(to_sequence(profile)).labels; },
        py::arg("profile"));
  m.def("construct_tilde_labeling",
        [](const std::vector<int>& profile) { return construct_tilde_labeling(to_sequence(profile)).labels; },
        py::arg("profile"));
  m.def("wreath_labeling", [](int k) { return wreath_labeling(k).labels; });
  m.def("verify", [](const Graph& g, const std::vector<Label>& labels) {
    return report_dict(verify(g, CenteredLabeling{labels}));
  }, py::arg("g"), py::arg("labels"));
  m.def("to_standard", [](const std::vector<Label>& l) { return to_standard(CenteredLabeling{l}).labels; });
  m.def("from_standard", [](const std::vector<Label>& l) { return from_standard(StandardLabeling{l}).labels; });

  m.def("corollary_filter", [](const Graph& g) {
    const auto v = corollary_filter(g);
    return py::make_tuple(v.candidate, v.reason);
  });
  m.def("nullity", [](const Graph& g) { return nullspace_basis(adjacency_matrix(g)).dimension(); });

  m.def("find_labeling", [](const Graph& g, bool count, bool prefilter, std::optional<std::uint64_t> budget) {
    SearchOptions opts;
    opts.mode = count ? SearchMode::CountAll : SearchMode::FindOne;
    opts.prefilter = prefilter;
    opts.node_budget = budget;
    SearchOutcome out;
    {
      py::gil_scoped_release release;
      out = find_labeling(g, opts);
    }
    py::dict d;
    d["verdict"] = to_string(out.verdict);
    d["labels"] = out.labeling ? py::cast(out.labeling->labels) : py::none();
    d["folded_count"] = out.folded_count;
    d["raw_count"] = out.raw_count;
    d["nodes"] = out.stats.nodes;
    return d;
  }, py::arg("g"), py::arg("count") = false, py::arg("prefilter") = true, py::arg("node_budget") = py::none());

  m.def("enumerate_regular", [](int order, int valency, bool connected) {
    return enumerate_regular(EnumerationTask{order, valency, connected, true});
  }, py::arg("order"), py::arg("valency") = 4, py::arg("connected") = true);

  m.def("zero_antipodal_cycles", [](const Graph& g, const std::vector<Label>& labels) {
    std::vector<std::array<Vertex, 4>> out;
    for (const auto& c : find_zero_antipodal_cycles(g, CenteredLabeling{labels})) out.push_back(c.v);
    return out;
  });
  m.def("expand", [](const Graph& g, const std::vector<Label>& labels,
                     std::optional<std::array<Vertex, 4>> cycle) {
    CenteredLabeling lab{labels};
    Expansion e = cycle ? expand(g, lab, ZeroAntipodalCycle{*cycle}) : expand(g, lab);
    return py::make_tuple(e.graph, e.labeling.labels);
  }, py::arg("g"), py::arg("labels"), py::arg("cycle") = py::none());

  m.def("export_dot", [](const Graph& g, std::optional<std::vector<Label>> labels, std::optional<int> qw_m) {
    DotOptions opts;
    opts.qw_m = qw_m;
    if (labels) {
      CenteredLabeling lab{*labels};
      return export_dot(g, &lab, opts);
    }
    return export_dot(g, nullptr, opts);
  }, py::arg("g"), py::arg("labels") = py::none(), py::arg("qw_m") = py::none());

  m.def("labeling_to_json", [](const std::vector<Label>& labels, const std::string& scheme) {
    return write_labeling_json({scheme == "standard" ? Scheme::Standard : Scheme::Centered, labels});
  }, py::arg("labels"), py::arg("scheme") = "centered");
  m.def("labeling_from_json", [](const std::string& text) {
    auto doc = parse_labeling_json(text);
    return py::make_tuple(doc.scheme == Scheme::Standard ? "standard" : "centered", doc.labels);
  });
}
