"""Smoke tests for the python bindings: small end-to-end checks of the
operations the module exposes."""

import pytest

import ikgraph as ik


def test_graph_roundtrip():
    g = ik.SimpleGraph.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)])
    assert g.order == 6
    assert g.edge_count == 9
    s = ik.graph6_encode(g)
    h = ik.graph6_decode(s)
    assert h == g
    assert ik.degree_sequence(g) == [3, 3, 3, 3, 3, 3]


def test_k33_properties():
    k33 = ik.catalog("K33")
    assert ik.is_triangle_free(k33)
    assert ik.is_connected(k33)
    assert not ik.is_planar(k33)
    assert ik.is_homeomorphic_to_k33(k33)


def test_catalog_theorem_graphs():
    c110 = ik.catalog("cousin110")
    m11 = ik.catalog("M11")
    assert c110.edge_count == 22 and m11.edge_count == 22
    assert ik.degree_sequence(c110) == [5, 5, 5, 5, 5, 5, 4, 4, 3, 3]
    assert ik.degree_sequence(m11) == [5, 5, 5, 5, 4, 4, 4, 3, 3, 3, 3]
    assert ik.is_triangle_free(c110) and ik.is_triangle_free(m11)


def test_canonical_form_relabeling_invariant():
    k33 = ik.catalog("K33")
    perm = [3, 0, 4, 1, 5, 2]
    edges = [(perm[u], perm[v]) for (u, v) in k33.edges()]
    shuffled = ik.SimpleGraph.from_edges(6, edges)
    assert ik.canonical_form(shuffled) == ik.canonical_form(k33)
    assert ik.is_isomorphic(shuffled, k33)


def test_reduce_pair_k7():
    k7 = ik.catalog("K7")
    r = ik.reduce_pair(k7, 0, 1)
    assert r.edge_count == 10  # K5
    assert not ik.is_planar(r)
    led = ik.pair_ledger(k7, 0, 1)
    assert led["actual"] == 10
    assert not led["in_regime"]  # 21 edges, and K7 has triangles


def test_family_count():
    k7 = ik.catalog("K7")
    members = ik.family(k7, moves="ty")
    assert len(members) == 14


def test_moves_roundtrip():
    k7 = ik.catalog("K7")
    g = ik.triangle_y(k7, 0, 1, 2)
    assert g.order == 8 and g.edge_count == 21
    back = ik.y_triangle(g, 7)
    assert ik.is_isomorphic(back, k7)


def test_eliminate():
    petersen = ik.catalog("Petersen")
    cert = ik.eliminate(petersen)
    assert cert["kind"] == "NotIKPlanarReduction"
    k7 = ik.catalog("K7")
    assert ik.eliminate(k7)["kind"] == "Survivor"


def test_enumerate_k33_regime():
    lines = ik.enumerate_regime(edges=9, min_degree=3, triangle_free=True)
    assert len(lines) == 1
    g = ik.graph6_decode(lines[0])
    assert ik.is_isomorphic(g, ik.catalog("K33"))


def test_errors():
    with pytest.raises(ik.GraphError):
        ik.SimpleGraph.from_edges(3, [(0, 0)])
    with pytest.raises(ik.GraphError):
        ik.catalog("no-such-graph")
