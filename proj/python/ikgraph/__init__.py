"""Graph engine for the classification of triangle-free intrinsically
knotted graphs with 22 edges: exhaustive regime enumeration, vertex-pair
reductions with planarity elimination, triangle-Y family closures, and
contraction certificates."""

from ._core import (
    GraphError,
    SimpleGraph,
    canonical_form,
    canonical_graph,
    catalog,
    catalog_names,
    contract_edge,
    degree_sequence,
    delete_edge,
    delete_vertex,
    eliminate,
    enumerate_regime,
    family,
    graph6_decode,
    graph6_encode,
    is_connected,
    is_homeomorphic_to_k33,
    is_isomorphic,
    is_planar,
    is_triangle_free,
    pair_ledger,
    prop21,
    reduce_pair,
    triangle_y,
    y_triangle,
)

__all__ = [
    "GraphError",
    "SimpleGraph",
    "canonical_form",
    "canonical_graph",
    "catalog",
    "catalog_names",
    "contract_edge",
    "degree_sequence",
    "delete_edge",
    "delete_vertex",
    "eliminate",
    "enumerate_regime",
    "family",
    "graph6_decode",
    "graph6_encode",
    "is_connected",
    "is_homeomorphic_to_k33",
    "is_isomorphic",
    "is_planar",
    "is_triangle_free",
    "pair_ledger",
    "prop21",
    "reduce_pair",
    "triangle_y",
    "y_triangle",
]
