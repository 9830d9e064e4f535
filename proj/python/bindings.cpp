#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phylosemi/classify.hpp"
#include "phylosemi/decompose.hpp"
#include "phylosemi/families.hpp"
#include "phylosemi/generators.hpp"
#include "phylosemi/io.hpp"

namespace py = pybind11;
using namespace phylosemi;

namespace {

std::vector<std::string> ids(const Graph& g, const std::vector<std::size_t>& edges) {
  std::vector<std::string> out;
  for (auto e : edges) out.push_back(g.edge(e).id);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Phylogenetic semigroups on multigraphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](const std::vector<std::tuple<std::string, std::string, std::string>>& edges, std::string name) {
             std::vector<Edge> out;
             for (const auto& [id, u, v] : edges) out.push_back({id, u, v});
             return Graph(std::move(out), std::move(name));
           }),
           py::arg("edges"), py::arg("name") = "", "Edges as (id, u, v) triples; u == v is a loop.")
      .def_property_readonly("name", &Graph::name)
      .def_property_readonly("edge_ids", &Graph::edge_ids)
      .def_property_readonly("vertices", &Graph::vertices)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::tuple<std::string, std::string, std::string>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.id, e.u, e.v);
                               return out;
                             })
      .def("is_trivalent", &Graph::is_trivalent)
      .def("__len__", &Graph::num_edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph " + (g.name().empty() ? std::string("(unnamed)") : g.name()) + " with " +
               std::to_string(g.num_edges()) + " edges>";
      });

  py::class_<Labeling>(m, "Labeling")
      .def(py::init<int, std::vector<int>>(), py::arg("degree"), py::arg("labels"))
      .def_static(
          "from_dict", [](const Graph& g, int degree, const std::map<std::string, int>& labels) {
            return Labeling::from_map(g, degree, labels);
          },
          py::arg("graph"), py::arg("degree"), py::arg("labels"))
      .def("to_dict", &Labeling::to_map)
      .def_readonly("degree", &Labeling::degree)
      .def_readonly("labels", &Labeling::labels)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const Labeling& w) { return py::hash(py::make_tuple(w.degree, py::tuple(py::cast(w.labels)))); })
      .def("__repr__", [](const Labeling& w) { return "Labeling" + to_string(w); });

  py::class_<MembershipReport>(m, "MembershipReport")
      .def_readonly("member", &MembershipReport::member)
      .def_property_readonly("violation", [](const MembershipReport& r) { return violation_name(r.violation); })
      .def_property_readonly("symbol", [](const MembershipReport& r) { return violation_symbol(r.violation); })
      .def_readonly("where", &MembershipReport::where)
      .def_readonly("detail", &MembershipReport::detail)
      .def("__bool__", [](const MembershipReport& r) { return r.member; });

  py::class_<GeneratorReport>(m, "GeneratorReport")
      .def_readonly("generators", &GeneratorReport::generators)
      .def_readonly("per_degree_counts", &GeneratorReport::per_degree_counts)
      .def_readonly("max_degree", &GeneratorReport::max_degree)
      .def_readonly("cap_used", &GeneratorReport::cap_used)
      .def_readonly("cap_hit", &GeneratorReport::cap_hit);

  py::enum_<Betti2Tag>(m, "Betti2Tag")
      .value("NoFreeLegs", Betti2Tag::NoFreeLegs)
      .value("CyclesInDifferentComponents", Betti2Tag::CyclesInDifferentComponents)
      .value("CyclesShareEdgeOrVertexWithFreeLeg", Betti2Tag::CyclesShareEdgeOrVertexWithFreeLeg)
      .value("CyclesSeparatedBySingleEdge", Betti2Tag::CyclesSeparatedBySingleEdge)
      .value("CyclesSeparatedByInnerVertex", Betti2Tag::CyclesSeparatedByInnerVertex);

  m.def("family", [](const std::string& name, const std::vector<int>& params) { return family(name, params); },
        py::arg("name"), py::arg("params") = std::vector<int>{});
  m.def("family_names", &family_names);
  m.def("first_betti_number", &first_betti_number);
  m.def("cycle_edges", [](const Graph& g) { return ids(g, cycle_edges(g)); });
  m.def("cycle_legs", [](const Graph& g) { return ids(g, cycle_legs(g)); });

  m.def("is_member", &is_member);
  m.def("check_membership", &check_membership);
  m.def("enumerate_networks", &enumerate_networks);
  m.def("enumerate_degree", &enumerate_degree);

  m.def("is_indecomposable", &is_indecomposable);
  m.def("minimal_generators", &minimal_generators, py::arg("graph"), py::arg("cap"));
  m.def("default_cap", &default_cap);

  m.def("classify_betti2", [](const Graph& g) {
    Betti2Class c = classify_betti2(g);
    return py::make_tuple(c.tag, c.max_degree);
  });
  m.def("generator_tag", &generator_tag);
  m.def("decompose_full", &decompose_full, py::arg("graph"), py::arg("labeling"), py::arg("cap"));

  m.def("parse_graph", &parse_graph);
  m.def("serialize_graph", &serialize_graph);
  m.def("parse_labeling", &parse_labeling);
  m.def("serialize_labeling", &serialize_labeling);
}
