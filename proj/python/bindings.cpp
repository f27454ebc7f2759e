#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cylrig/characterize.hpp"
#include "cylrig/error.hpp"
#include "cylrig/graph_ops.hpp"
#include "cylrig/json_io.hpp"
#include "cylrig/placement_synth.hpp"

namespace py = pybind11;
using namespace cylrig;

namespace {

// Placements cross the boundary as lists of "num/den" strings.
using PointStrings = std::vector<std::vector<std::string>>;

Placement to_placement(const PointStrings& pts) {
  if (pts.empty()) return Placement(0, {});
  std::vector<Vector> points;
  for (const auto& p : pts) {
    Vector v;
    for (const auto& x : p) v.push_back(parse_rational(x));
    points.push_back(std::move(v));
  }
  const int dim = static_cast<int>(points.front().size());
  return Placement(dim, std::move(points));
}

PointStrings from_placement(const Placement& p) {
  PointStrings out;
  for (const auto& v : p.points) {
    std::vector<std::string> row;
    for (const auto& x : v) row.push_back(to_string(x));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rigidity of graphs in cylindrical and conical normed spaces";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<CatalogError>(m, "CatalogError", PyExc_KeyError);
  py::register_exception<MatroidAxiomError>(m, "MatroidAxiomError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>())
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) { return Graph(n, edges); }),
           py::arg("num_vertices"), py::arg("edges"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("edges", &Graph::edge_pairs)
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()) + " " +
               emit_graph6(g) + ">";
      });

  m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
  m.def("to_graph6", &emit_graph6);
  m.def("named_graph", [](const std::string& name) { return named_graph(name); });
  m.def("catalog_names", &catalog_names);
  m.def("edge_connectivity", &edge_connectivity);
  m.def("is_connected", &is_connected);

  m.def(
      "pebble_sparse", [](const Graph& g, int k, int l) { return pebble_sparse(g, {k, l}); }, py::arg("graph"),
      py::arg("k"), py::arg("l"));
  m.def(
      "pebble_tight", [](const Graph& g, int k, int l) { return pebble_tight(g, {k, l}); }, py::arg("graph"),
      py::arg("k"), py::arg("l"));
  m.def(
      "decompose_h_plus_trees",
      [](const Graph& g, int k, int l, int trees) -> std::optional<std::pair<EdgeSet, std::vector<EdgeSet>>> {
        auto d = decompose_h_plus_trees(g, {k, l}, trees);
        if (!d) return std::nullopt;
        return std::make_pair(d->h_edges, d->trees);
      },
      py::arg("graph"), py::arg("k") = 2, py::arg("l") = 3, py::arg("trees") = 1);
  m.def("nash_williams", &nash_williams, py::arg("graph"), py::arg("k"));

  m.def(
      "analyze_json",
      [](const Graph& g, const std::string& space, const std::string& q, std::uint64_t seed, bool check) {
        SpaceKind kind = parse_space_kind(space);
        Space s = space_for(kind, parse_rational(q));
        RigidityReport r = classify(g, kind);
        r.space = s.str();
        if (check) numeric_cross_check(g, kind, s, r, seed);
        return report_json(g, r, compute_screens(g, kind), seed).dump();
      },
      py::arg("graph"), py::arg("space") = "cyl-euclid", py::arg("q") = "3/2", py::arg("seed") = 0,
      py::arg("check") = true);
  m.def("connectivity_sufficient",
        [](const Graph& g, const std::string& space) { return connectivity_sufficient(g, parse_space_kind(space)); });
  m.def("rank_target", [](const std::string& space, int n) { return rank_target(parse_space_kind(space), n); });

  m.def("space_name", [](const std::string& text) { return parse_space(text).str(); });
  m.def(
      "rigidity_matrix",
      [](const Graph& g, const PointStrings& pts, const std::string& space) {
        return rigidity_matrix(g, to_placement(pts), parse_space(space)).approx;
      },
      py::arg("graph"), py::arg("placement"), py::arg("space"));
  m.def(
      "rigidity_rank",
      [](const Graph& g, const PointStrings& pts, const std::string& space, double tol) {
        return rank(rigidity_matrix(g, to_placement(pts), parse_space(space)), tol);
      },
      py::arg("graph"), py::arg("placement"), py::arg("space"), py::arg("tol") = kRankTolerance);
  m.def(
      "colouring",
      [](const Graph& g, const PointStrings& pts, const std::string& space) {
        EdgeColouring c = monochrome_labelling(g, to_placement(pts), parse_space(space));
        return std::make_pair(c.blue(), c.green());
      },
      py::arg("graph"), py::arg("placement"), py::arg("space"));
  m.def(
      "randomized_independence",
      [](const Graph& g, const std::string& space, std::uint64_t seed, int retries) {
        RandomizedResult r = randomized_independence(g, parse_space(space), seed, retries);
        return py::dict(py::arg("independent") = r.independent, py::arg("rank") = r.rank,
                        py::arg("attempts") = r.attempts, py::arg("exact") = r.exact);
      },
      py::arg("graph"), py::arg("space") = "linf(l2(2))", py::arg("seed") = 0, py::arg("retries") = 3);

  m.def(
      "key_lemma_placement",
      [](const Graph& g, const EdgeSet& forest, const std::string& inner) {
        return from_placement(key_lemma_placement(g, forest, parse_space(inner)));
      },
      py::arg("graph"), py::arg("forest"), py::arg("inner") = "l2(2)");
  m.def(
      "verify_colouring",
      [](const Graph& g, const PointStrings& pts, const EdgeSet& forest, const std::string& space) {
        return verify_colouring(g, to_placement(pts), forest, parse_space(space));
      },
      py::arg("graph"), py::arg("placement"), py::arg("forest"), py::arg("space") = "linf(l2(2))");

  m.def(
      "apply_op_json",
      [](const Graph& g, const std::string& op_json, std::uint64_t seed) {
        auto ops = parse_op_script("[" + op_json + "]");
        OpSpec op = ops.at(0);
        if (op.random) {
          std::mt19937_64 rng(seed);
          auto drawn = random_op(g, op.kind, op.d, rng);
          if (!drawn) throw PreconditionError("no valid parameters on this graph");
          op = *drawn;
        }
        return std::make_pair(apply_op(g, op), op_to_json(op));
      },
      py::arg("graph"), py::arg("op"), py::arg("seed") = 0);
}
