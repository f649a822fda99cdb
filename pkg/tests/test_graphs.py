"""Graph values, family construction, and graph6 serialization."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starextremal import counts, graphs
from starextremal.errors import FamilySizeError, Graph6Error, ParameterError
from starextremal.graphs import Graph


def test_graph_validation():
    with pytest.raises(ParameterError):
        Graph(2, (1, 0))  # asymmetric
    with pytest.raises(ParameterError):
        Graph(1, (1,))  # loop
    with pytest.raises(ParameterError):
        Graph(65, (0,) * 65)
    with pytest.raises(ParameterError):
        graphs.from_edges(3, [(0, 3)])


def test_build_g():
    g = graphs.build_g(6, 0, 2)
    assert graphs.degree_sequence(g) == [2, 2, 3, 3, 5, 5]
    g = graphs.build_g(5, -1, 1)  # I_1 u K_4
    assert graphs.degree_sequence(g) == [0, 3, 3, 3, 3]
    g = graphs.build_g(10, 0, 4)
    assert graphs.degree_sequence(g) == counts.degree_list_g(10, 0, 4)


def test_build_h():
    assert graphs.degree_sequence(graphs.build_h(6, 2, 1)) == [1, 4, 4, 4, 4, 5]
    # K_3 u K_3
    assert graphs.degree_sequence(graphs.build_h(6, 1, 3)) == [2] * 6
    assert graphs.degree_sequence(graphs.build_h(7, 3, 2)) == [3, 3, 4, 4, 4, 6, 6]


def test_count_stars():
    assert graphs.count_stars(graphs.cycle_graph(5), 2) == 5
    assert graphs.count_stars(graphs.build_g(6, 0, 1), 2) == 34
    assert graphs.count_stars(graphs.complete_graph(4), 3) == 4
    assert graphs.edge_count(graphs.build_g(6, 0, 1)) == 11
    assert graphs.degree_sequence(graphs.complete_graph(3)) == [2, 2, 2]
    assert graphs.degree_sequence(graphs.empty_graph(4)) == [0, 0, 0, 0]


def test_family_enumeration():
    members = list(graphs.enumerate_family(10, 0, 4))
    assert len(members) == 2
    assert members[0] == graphs.build_g(10, 0, 4)  # full graph first
    assert len(list(graphs.enumerate_family(6, 0, 1))) == 64
    assert len(list(graphs.enumerate_family(5, 0, 2))) == 1
    with pytest.raises(FamilySizeError):
        list(graphs.enumerate_family(8, 0, 1, cap=100))


def test_family_degrees_fixed_outside_clique():
    # independent-set and dominator degrees never change; only the
    # clique-part degrees vary across members
    n, ell, i = 7, 1, 1
    base = counts.degree_list_g(n, ell, i)
    lo, hi = base[0], n - 1
    for g in graphs.enumerate_family(n, ell, i):
        degs = [g.degree(v) for v in range(n)]
        assert degs[:i + ell] == [n - 1] * (i + ell)
        assert degs[i + ell:i + ell + i] == [lo] * i
    sizes = {graphs.edge_count(g) for g in graphs.enumerate_family(n, ell, i)}
    assert len(sizes) > 1


def test_graph6_known_values():
    assert graphs.graph6_encode(graphs.complete_graph(3)) == "Bw"
    assert graphs.graph6_decode("B?") == graphs.empty_graph(3)
    assert graphs.graph6_decode("Bw") == graphs.complete_graph(3)
    assert graphs.graph6_decode(">>graph6<<Bw") == graphs.complete_graph(3)
    g = graphs.build_g(10, 0, 4)
    assert graphs.graph6_decode(graphs.graph6_encode(g)) == g


def test_graph6_long_form():
    rng = random.Random(11)
    for n in (63, 64):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.3]
        g = graphs.from_edges(n, edges)
        text = graphs.graph6_encode(g)
        assert text.startswith("~")
        assert graphs.graph6_decode(text) == g


def test_graph6_errors():
    with pytest.raises(Graph6Error) as e:
        graphs.graph6_decode("B" + chr(32))
    assert e.value.offset == 1
    with pytest.raises(Graph6Error):
        graphs.graph6_decode("")
    with pytest.raises(Graph6Error):
        graphs.graph6_decode("D?")  # truncated payload for n=5
    with pytest.raises(Graph6Error):
        graphs.graph6_decode("B??")  # trailing bytes
    with pytest.raises(Graph6Error):
        graphs.graph6_decode("B" + chr(63 + 1))  # nonzero padding for n=3
    assert graphs.graph6_decode("~???") == graphs.empty_graph(0)  # long-form n=0
    with pytest.raises(Graph6Error):
        graphs.graph6_decode("~?@c")  # long-form n=100 exceeds the 64-vertex cap


@given(st.integers(0, 32), st.integers(0, 2 ** 31 - 1))
@settings(max_examples=300, deadline=None)
def test_graph6_roundtrip_random(n, seed):
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < 0.4]
    g = graphs.from_edges(n, edges)
    assert graphs.graph6_decode(graphs.graph6_encode(g)) == g


def test_relabel_preserves_structure():
    g = graphs.build_g(8, 1, 2)
    perm = [3, 0, 7, 1, 6, 2, 5, 4]
    h = g.relabel(perm)
    assert graphs.degree_sequence(h) == graphs.degree_sequence(g)
    assert graphs.edge_count(h) == graphs.edge_count(g)
    for u, v in g.edges():
        assert h.has_edge(perm[u], perm[v])
