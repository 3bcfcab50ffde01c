#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ikg/canonical.hpp"
#include "ikg/catalog.hpp"
#include "ikg/enumeration.hpp"
#include "ikg/graph6.hpp"
#include "ikg/moves.hpp"
#include "ikg/planarity.hpp"
#include "ikg/prover.hpp"
#include "ikg/reduction.hpp"

namespace py = pybind11;
using namespace ikg;

namespace {

MoveSet parse_moves(const std::string& s) {
  MoveSet ms;
  if (s.find("ty") != std::string::npos) ms.triangle_y = true;
  if (s.find("yt") != std::string::npos) ms.y_triangle = true;
  return ms;
}

py::dict certificate_dict(const Certificate& c) {
  py::dict d;
  d["kind"] = std::string(to_string(c.kind));
  if (c.kind == CertKind::NotIKPlanarReduction ||
      c.kind == CertKind::NotIKTwoCut)
    d["pair"] = py::make_tuple(c.pair.first, c.pair.second);
  if (c.kind == CertKind::IKByContraction) {
    d["edge"] = py::make_tuple(c.contraction.first, c.contraction.second);
    d["family"] = c.family;
    d["target_order"] = c.target_order;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Graph engine for classifying triangle-free intrinsically knotted "
      "graphs with 22 edges";

  py::register_exception<GraphError>(m, "GraphError");

  py::class_<SimpleGraph>(m, "SimpleGraph")
      .def_static("from_edges", &SimpleGraph::from_edges, py::arg("order"),
                  py::arg("edges"))
      .def_property_readonly("order", &SimpleGraph::order)
      .def_property_readonly("edge_count", &SimpleGraph::edge_count)
      .def("has_edge", &SimpleGraph::has_edge)
      .def("degree", &SimpleGraph::degree)
      .def("edges", &SimpleGraph::edges)
      .def("__eq__", [](const SimpleGraph& a, const SimpleGraph& b) {
        return a == b;
      })
      .def("__repr__", [](const SimpleGraph& g) {
        return "SimpleGraph(g6='" + graph6_encode(g) + "')";
      });

  m.def("graph6_encode", &graph6_encode);
  m.def("graph6_decode", &graph6_decode);
  m.def("degree_sequence", &degree_sequence);
  m.def("is_triangle_free", &is_triangle_free);
  m.def("is_connected", &is_connected);
  m.def("is_planar", &is_planar);
  m.def("is_homeomorphic_to_k33", &is_homeomorphic_to_k33);
  m.def("contract_edge",
        [](const SimpleGraph& g, int u, int v) {
          return contract_edge(g, {u, v});
        });
  m.def("delete_vertex", &delete_vertex);
  m.def("delete_edge", [](const SimpleGraph& g, int u, int v) {
    return delete_edge(g, {u, v});
  });
  m.def("canonical_form",
        [](const SimpleGraph& g) { return canonicalize(g).bytes; });
  m.def("canonical_graph", &canonical_graph);
  m.def("is_isomorphic", &is_isomorphic);

  m.def("triangle_y", [](const SimpleGraph& g, int a, int b, int c) {
    return triangle_y(g, {a, b, c});
  });
  m.def("y_triangle", &y_triangle);
  m.def("family",
        [](const SimpleGraph& seed, const std::string& moves) {
          FamilyClosure f = family_closure(seed, parse_moves(moves));
          std::vector<std::string> out;
          for (const auto& [form, member] : f.members) out.push_back(form.bytes);
          return out;
        },
        py::arg("seed"), py::arg("moves") = "ty,yt");

  m.def("catalog", [](const std::string& name) { return build(name).graph; });
  m.def("catalog_names", &catalog_names);

  m.def("reduce_pair", &reduce_pair);
  m.def("pair_ledger", [](const SimpleGraph& g, int a, int b) {
    ReductionLedger led = pair_ledger(g, a, b);
    py::dict d;
    d["pair"] = py::make_tuple(led.pair.first, led.pair.second);
    d["ne"] = led.ne;
    d["nv3"] = led.nv3;
    d["v4"] = led.v4;
    d["vy"] = led.vy;
    d["predicted"] = led.predicted;
    d["actual"] = led.actual;
    d["degenerate"] = led.degenerate;
    d["in_regime"] = led.in_regime;
    return d;
  });

  m.def("prop21", [](const SimpleGraph& g, int a, int b) {
    Prop21Outcome o = prop21(g, a, b);
    py::dict d;
    d["kind"] = std::string(to_string(o.kind));
    d["reduced_edges"] = o.reduced_edges;
    d["eliminates"] = o.eliminates();
    return d;
  });

  m.def("eliminate",
        [](const SimpleGraph& g) { return certificate_dict(eliminate(g)); });

  m.def("enumerate_regime",
        [](int edges, int min_degree, bool triangle_free,
           const std::string& profile, int jobs) {
          Regime r;
          r.edge_count = edges;
          r.min_degree = min_degree;
          r.triangle_free = triangle_free;
          if (profile == "any") r.profile = DegreeProfile::Any;
          else if (profile == "maxdeg6plus")
            r.profile = DegreeProfile::MaxDegAtLeast6;
          else if (profile == "two-deg5")
            r.profile = DegreeProfile::MaxDeg5WithAtLeastTwoDeg5;
          else throw GraphError(Err::UnknownGraph, "unknown profile");
          std::vector<std::string> out;
          for (const auto& g : enumerate_sorted(r, jobs))
            out.push_back(graph6_encode(g));
          return out;
        },
        py::arg("edges"), py::arg("min_degree") = 3,
        py::arg("triangle_free") = true, py::arg("profile") = "any",
        py::arg("jobs") = 1);
}
