"""Rigidity of bar-joint frameworks in cylindrical and conical normed spaces."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    CatalogError,
    Graph,
    MatroidAxiomError,
    ParseError,
    PreconditionError,
    catalog_names,
    connectivity_sufficient,
    decompose_h_plus_trees,
    edge_connectivity,
    is_connected,
    named_graph,
    nash_williams,
    parse_graph6,
    pebble_sparse,
    pebble_tight,
    rank_target,
    randomized_independence,
    space_name,
    to_graph6,
)

__all__ = [
    "CatalogError",
    "Graph",
    "MatroidAxiomError",
    "ParseError",
    "PreconditionError",
    "analyze",
    "apply_op",
    "catalog_names",
    "colouring",
    "connectivity_sufficient",
    "decompose_h_plus_trees",
    "edge_connectivity",
    "is_connected",
    "key_lemma_placement",
    "named_graph",
    "nash_williams",
    "parse_graph6",
    "pebble_sparse",
    "pebble_tight",
    "rank_target",
    "randomized_independence",
    "rigidity_matrix",
    "rigidity_rank",
    "space_name",
    "to_graph6",
    "verify_colouring",
]


def _as_graph(g):
    if isinstance(g, Graph):
        return g
    try:
        return named_graph(g)
    except CatalogError:
        return parse_graph6(g)


def _points_out(points):
    return [[str(Fraction(x)) for x in p] for p in points]


def _points_in(points):
    return [[Fraction(x) for x in p] for p in points]


def analyze(graph, space="cyl-euclid", q="3/2", seed=0, check=True):
    """Verdict report for a Graph, catalog name or graph6 string, as a dict."""
    return json.loads(_core.analyze_json(_as_graph(graph), space, str(q), seed, check))


def rigidity_matrix(graph, placement, space="linf(l2(2))"):
    return _core.rigidity_matrix(_as_graph(graph), _points_out(placement), space)


def rigidity_rank(graph, placement, space="linf(l2(2))", tol=1e-9):
    return _core.rigidity_rank(_as_graph(graph), _points_out(placement), space, tol)


def colouring(graph, placement, space="linf(l2(2))"):
    """(blue edge ids, green edge ids)."""
    return _core.colouring(_as_graph(graph), _points_out(placement), space)


def key_lemma_placement(graph, forest, inner="l2(2)"):
    """Placement (lists of Fractions) whose green edges are exactly `forest`."""
    return _points_in(_core.key_lemma_placement(_as_graph(graph), sorted(forest), inner))


def verify_colouring(graph, placement, forest, space="linf(l2(2))"):
    return _core.verify_colouring(_as_graph(graph), _points_out(placement), sorted(forest), space)


def apply_op(graph, op, seed=0):
    """Applies one operation given as a dict; returns (graph, resolved op dict)."""
    g, resolved = _core.apply_op_json(_as_graph(graph), json.dumps(op), seed)
    return g, json.loads(resolved)
