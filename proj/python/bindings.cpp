#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "sepbox/alter.hpp"
#include "sepbox/census.hpp"
#include "sepbox/classify.hpp"
#include "sepbox/digraph.hpp"
#include "sepbox/error.hpp"
#include "sepbox/io.hpp"
#include "sepbox/named.hpp"
#include "sepbox/permgroup.hpp"
#include "sepbox/products.hpp"
#include "sepbox/symmetry.hpp"
#include "sepbox/table.hpp"

namespace py = pybind11;
using namespace sepbox;

namespace {

py::int_ to_py(const GroupOrder& order) {
  return py::int_(py::str(order.str()));
}

Digraph make_digraph(std::size_t order, const std::vector<std::pair<Vertex, Vertex>>& darts) {
  std::vector<Dart> ds;
  ds.reserve(darts.size());
  for (auto [t, h] : darts) ds.push_back({t, h});
  return Digraph(order, std::move(ds));
}

std::vector<std::pair<Vertex, Vertex>> dart_pairs(const Digraph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(g.size());
  for (const auto& d : g.darts()) out.emplace_back(d.tail, d.head);
  return out;
}

std::vector<Vertex> image_list(const Permutation& p) {
  return {p.images().begin(), p.images().end()};
}

py::dict evidence_dict(const SymmetryEvidence& e) {
  py::dict d;
  d["vertex_orbits"] = e.vertex_orbits;
  d["edge_orbits"] = e.edge_orbits;
  d["dart_orbits"] = e.dart_orbits;
  d["group_order"] = to_py(e.group_order);
  d["vs"] = to_py(e.vs);
  d["dart_stab_nontrivial"] = e.dart_stab_nontrivial;
  return d;
}

py::dict entry_dict(const CensusEntry& e) {
  py::dict d;
  d["name"] = e.name;
  d["local_name"] = e.local_name;
  d["digraph"] = e.digraph;
  d["alter_perimeter"] = e.alter_perimeter;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> error(m, "SepboxError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<Digraph>(m, "Digraph")
      .def(py::init(&make_digraph), py::arg("order"), py::arg("darts"))
      .def_property_readonly("order", &Digraph::order)
      .def_property_readonly("size", &Digraph::size)
      .def_property_readonly("darts", &dart_pairs)
      .def("has_dart", &Digraph::has_dart)
      .def("out_neighbours",
           [](const Digraph& g, Vertex v) {
             auto s = g.out_neighbours(v);
             return std::vector<Vertex>(s.begin(), s.end());
           })
      .def("in_neighbours",
           [](const Digraph& g, Vertex v) {
             auto s = g.in_neighbours(v);
             return std::vector<Vertex>(s.begin(), s.end());
           })
      .def(py::self == py::self)
      .def("__repr__", [](const Digraph& g) {
        return "Digraph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) + ")";
      });

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<Vertex>>(), py::arg("images"))
      .def_property_readonly("degree", &Permutation::degree)
      .def_property_readonly("images", &image_list)
      .def("inverse", &Permutation::inverse)
      .def("is_identity", &Permutation::is_identity)
      .def("__call__", [](const Permutation& p, Vertex x) { return p[x]; })
      .def("__mul__", [](const Permutation& a, const Permutation& b) { return a * b; })
      .def(py::self == py::self)
      .def("__repr__", &Permutation::cycle_string);

  py::class_<PermGroup>(m, "PermGroup")
      .def(py::init([](std::size_t degree, std::vector<Permutation> gens) { return PermGroup(degree, std::move(gens)); }),
           py::arg("degree"), py::arg("generators"))
      .def_property_readonly("degree", &PermGroup::degree)
      .def_property_readonly("order", [](const PermGroup& g) { return to_py(g.order()); })
      .def_property_readonly("generators", &PermGroup::generators)
      .def_property_readonly("base", &PermGroup::base)
      .def("orbits", &PermGroup::orbits)
      .def("orbit", &PermGroup::orbit)
      .def("is_transitive", &PermGroup::is_transitive)
      .def("stabiliser_order", [](const PermGroup& g, Vertex v) { return to_py(g.stabiliser_order(v)); })
      .def("contains", &PermGroup::contains);

  m.def("reverse", &reverse);
  m.def("underlying", &underlying);
  m.def("is_orientation", &is_orientation);
  m.def("is_connected", &is_connected);
  m.def("girth", [](const Digraph& g) -> py::object {
    auto k = girth(g);
    if (k == kNoCycle) return py::none();
    return py::int_(k);
  });
  m.def("diameter", &diameter);
  m.def("dcyc", &dcyc, py::arg("n"));

  m.def("box_product", &box_product);
  m.def("sbp", &sbp);
  m.def("cdc", &cdc);
  m.def("dart_digraph", &dart_digraph);
  m.def("a2d", &a2d);
  m.def("a2g", &a2g);
  m.def("hash_product", [](const Digraph& g1, const Digraph& g2) {
    auto h = hash_product(g1, g2);
    py::dict d;
    d["graph"] = h.graph;
    d["oriented"] = h.oriented;
    d["vertices"] = h.vertices;
    d["component_count"] = h.component_count;
    return d;
  });
  m.def("predicted_component_count", &predicted_component_count);

  m.def("alter_labeling", [](const Digraph& g) {
    auto a = alter_labeling(g);
    py::dict d;
    d["modulus"] = a.modulus;
    d["perimeter"] = a.perimeter;
    d["class_of"] = a.class_of;
    return d;
  });
  m.def("alter_perimeter", &alter_perimeter);
  m.def("sum_zero_walk", [](const Digraph& g, Vertex u, Vertex v) -> py::object {
    auto w = sum_zero_walk(g, u, v);
    if (!w) return py::none();
    return py::make_tuple(w->vertices, w->signs);
  });

  m.def("automorphism_group", [](const Digraph& g) { return automorphism_group(g).group; });
  m.def("are_isomorphic", &are_isomorphic);
  m.def("find_isomorphism", &find_isomorphism);
  m.def("is_reversible", &is_reversible);
  m.def("find_reversal", [](const Digraph& g) { return find_reversal(g).witness; });
  m.def("is_dart_transitive", &is_dart_transitive);

  m.def("symmetry_type", [](const Digraph& g) {
    auto t = symmetry_type(g);
    auto d = evidence_dict(t.evidence);
    d["tag"] = to_string(t.tag);
    return d;
  });
  m.def("expected_type", [](const Digraph& g1, const Digraph& g2) {
    auto t = expected_type(g1, g2);
    py::dict d;
    d["tag"] = to_string(t.tag);
    d["clause"] = t.clause;
    return d;
  });

  m.def("named", [](const std::string& name) -> py::object {
    auto g = named::by_name(name);
    if (!g) return py::none();
    return py::cast(*g);
  });
  m.def("census_entry", [](const std::string& name) { return entry_dict(resolve_entry(name)); });
  m.def("generate_atd", [](std::size_t n) {
    py::list out;
    for (const auto& e : generate_atd(n)) out.append(entry_dict(e));
    return out;
  });

  m.def("parse_dg", [](const std::string& text) { return io::parse_dg(text); });
  m.def("format_dg", [](const Digraph& g) { return io::format_dg(g); });
  m.def("parse_json", [](const std::string& text) { return io::parse_json(text); });
  m.def("format_json", &io::format_json);

  m.def(
      "run_table",
      [](const std::vector<std::pair<std::string, std::string>>& pairs, const std::string& mode, bool pow2) {
        std::vector<std::pair<CensusEntry, CensusEntry>> spec;
        for (const auto& [a, b] : pairs) spec.emplace_back(resolve_entry(a), resolve_entry(b));
        return to_csv(run_table(spec, parse_table_mode(mode)), pow2);
      },
      py::arg("pairs"), py::arg("mode") = "t1", py::arg("pow2") = false);
}
