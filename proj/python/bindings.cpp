#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "haarlab/atlas.hpp"
#include "haarlab/error.hpp"
#include "haarlab/repro.hpp"

namespace py = pybind11;
using namespace haarlab;

namespace {

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

ConnectionSet connection_set(const FiniteGroup& g, const py::object& s) {
  if (py::isinstance<py::str>(s)) return ConnectionSet::parse(g, s.cast<std::string>());
  return ConnectionSet::make(g, s.cast<std::vector<Elem>>(), Role::S);
}

py::list generators_of(const PermGroup& group) {
  py::list out;
  for (const auto& p : group.generators()) {
    auto images = p.images();
    out.append(std::vector<Point>(images.begin(), images.end()));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(haarlab, m) {
  m.doc() = "Haar graphs of finite groups: automorphism groups and Cayley tests";
  m.attr("__version__") = version();

  // translators run newest first, so the base class goes first
  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ScaleExceeded>(m, "ScaleExceeded", base);
  py::register_exception<UnknownName>(m, "UnknownName", base);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<InvalidConnectionSet>(m, "InvalidConnectionSet", base);

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_property_readonly("name", &FiniteGroup::name)
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("generators", &FiniteGroup::generators)
      .def_property_readonly("generator_names", &FiniteGroup::generator_names)
      .def_property_readonly("element_names", &FiniteGroup::element_names)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("element_order", &FiniteGroup::element_order)
      .def("parse_word", &FiniteGroup::parse_word)
      .def("parse_set", &FiniteGroup::parse_set)
      .def("format_set", &FiniteGroup::format_set)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("to_dict", [](const FiniteGroup& g) { return to_python(group_to_json(g)); })
      .def("__repr__", [](const FiniteGroup& g) { return "<FiniteGroup " + g.name() + " of order " + std::to_string(g.order()) + ">"; });

  m.def("atlas", &atlas, py::arg("name"));
  m.def("atlas_catalog", &atlas_catalog);
  m.def("cyclic", &cyclic);
  m.def("dihedral", &dihedral, py::arg("two_n"));
  m.def("dicyclic", &dicyclic, py::arg("m"));
  m.def("direct_product", &direct_product);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>())
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("add_edge", &Graph::add_edge)
      .def("has_edge", &Graph::has_edge)
      .def("neighbors", &Graph::neighbors)
      .def("degree", &Graph::degree)
      .def("edges", &Graph::edges)
      .def("to_graph6", &Graph::to_graph6)
      .def_static("from_graph6", &Graph::from_graph6)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; });

  py::class_<BiGraph>(m, "HaarGraph")
      .def_property_readonly("graph", [](const BiGraph& b) { return b.graph; })
      .def_property_readonly("group", [](const BiGraph& b) { return *b.group; })
      .def_property_readonly("S", [](const BiGraph& b) { return b.s; })
      .def("vertex_name", &BiGraph::vertex_name)
      .def("parse_vertex", &BiGraph::parse_vertex)
      .def("to_dot", &BiGraph::to_dot, py::arg("name") = "H");

  m.def("haar_graph", [](const FiniteGroup& g, const py::object& s) { return haar_graph(g, connection_set(g, s)); },
        py::arg("group"), py::arg("S"));
  m.def("cayley_graph",
        [](const FiniteGroup& g, const py::object& r) {
          if (py::isinstance<py::str>(r)) return cayley_graph(g, ConnectionSet::parse(g, r.cast<std::string>(), Role::R));
          return cayley_graph(g, ConnectionSet::make(g, r.cast<std::vector<Elem>>(), Role::R));
        },
        py::arg("group"), py::arg("R"));
  m.def("is_connected", [](const Graph& g) { return is_connected(g); });
  m.def("four_cycles_through_edge", &four_cycles_through_edge);
  m.def("four_cycles_through_vertex", &four_cycles_through_vertex);
  m.def("difference_set", [](const FiniteGroup& g, const py::object& s) {
    return difference_set(g, connection_set(g, s).elements);
  });

  m.def("automorphism_group",
        [](const Graph& g) {
          PermGroup a = [&] {
            py::gil_scoped_release release;
            return automorphism_group(g);
          }();
          py::dict out;
          out["order"] = py::int_(py::str(a.order().str()));
          out["generators"] = generators_of(a);
          out["orbits"] = a.orbits();
          return out;
        },
        "Order (int), generators (image lists) and orbits of Aut(graph)");
  m.def("is_vertex_transitive", [](const Graph& g) {
    py::gil_scoped_release release;
    return is_vertex_transitive(g);
  });
  m.def("is_cayley", [](const Graph& g) {
    CayleyVerdict v = [&] {
      py::gil_scoped_release release;
      return is_cayley(g);
    }();
    return to_python(verdict_to_json(v, "", "", is_connected(g)));
  });
  m.def("is_cayley_haar", [](const BiGraph& b) {
    CayleyVerdict v = [&] {
      py::gil_scoped_release release;
      return is_cayley(b);
    }();
    return to_python(verdict_to_json(v, b.group->name(), b.group->format_set(b.s), is_connected(b)));
  });
  m.def("is_ghrr", [](const FiniteGroup& g, const py::object& s) { return is_ghrr(g, connection_set(g, s)); });
  m.def("delta_shortcut", [](const FiniteGroup& g, const py::object& s) -> py::object {
    auto gens = delta_shortcut(g, connection_set(g, s));
    if (!gens) return py::none();
    py::list out;
    for (const auto& p : *gens) {
      auto images = p.images();
      out.append(std::vector<Point>(images.begin(), images.end()));
    }
    return std::move(out);
  });
  m.def("verify_normalizer", [](const FiniteGroup& g, const py::object& s) {
    auto r = verify_normalizer(g, connection_set(g, s));
    py::dict out;
    out["aut_order"] = py::int_(py::str(r.aut_order.str()));
    out["enumerated_order"] = r.enumerated_order;
    out["formula_order"] = py::int_(py::str(r.formula_order.str()));
    out["f_size"] = r.f_size;
    out["i_size"] = r.i_size;
    out["transitive"] = r.transitive;
    out["equal"] = r.equal;
    return out;
  });

  m.def("target_names", &target_names);
  m.def(
      "run_target",
      [](const std::string& name, std::vector<std::size_t> n, std::vector<std::size_t> p, std::size_t jobs) {
        nlohmann::json j;
        {
          py::gil_scoped_release release;
          Classifier c;
          j = run_target(c, name, n, p, jobs).to_json();
        }
        return to_python(j);
      },
      py::arg("name"), py::arg("n") = std::vector<std::size_t>{}, py::arg("p") = std::vector<std::size_t>{},
      py::arg("jobs") = 0, "Runs a verification target and returns the report as a dict");
  m.def(
      "scan",
      [](const std::string& group, bool connected, std::size_t max_size, bool find_non_cayley, std::size_t jobs) {
        nlohmann::json j;
        {
          py::gil_scoped_release release;
          Classifier c;
          ScanOptions o;
          o.connected_only = connected;
          o.max_size = max_size;
          o.find_non_cayley = find_non_cayley;
          o.jobs = jobs;
          j = scan(c, group, o).to_json();
        }
        return to_python(j);
      },
      py::arg("group"), py::arg("connected") = false, py::arg("max_size") = 0, py::arg("find_non_cayley") = false,
      py::arg("jobs") = 0);
}
