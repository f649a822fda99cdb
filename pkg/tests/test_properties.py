"""Property deciders, closure, and the degree-condition witness."""

import random
from itertools import combinations

import pytest

from starextremal import graphs
from starextremal import properties as props
from starextremal.errors import ParameterError, PropertyDomainError
from starextremal.properties import PropertySpec


def random_graph(n, p, rng):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return graphs.from_edges(n, edges)


# --- hamiltonicity -----------------------------------------------------------

def test_hamiltonian_examples():
    assert props.is_hamiltonian(graphs.cycle_graph(6))
    assert not props.is_hamiltonian(graphs.build_g(6, 0, 2))
    assert props.is_hamiltonian(graphs.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))
    assert not props.is_hamiltonian(graphs.complete_graph(2))
    assert not props.is_hamiltonian(graphs.complete_graph(1))
    assert props.is_hamiltonian(graphs.complete_graph(3))


def test_traceable_examples():
    assert props.is_traceable(graphs.path_graph(5))
    assert not props.is_traceable(graphs.build_g(7, -1, 2))
    assert not props.is_traceable(graphs.build_g(5, -1, 1))  # disconnected
    assert props.is_traceable(graphs.complete_graph(1))
    assert props.is_traceable(graphs.complete_graph(2))
    assert not props.is_traceable(graphs.empty_graph(2))


def test_hamiltonian_connected_examples():
    assert props.is_hamiltonian_connected(graphs.complete_graph(4))
    assert not props.is_hamiltonian_connected(graphs.build_g(7, 1, 1))
    assert not props.is_hamiltonian_connected(graphs.cycle_graph(5))
    assert props.is_hamiltonian_connected(graphs.complete_graph(1))
    assert props.is_hamiltonian_connected(graphs.complete_graph(2))
    assert not props.is_hamiltonian_connected(graphs.empty_graph(2))


def test_k_edge_hamiltonian():
    assert props.is_k_edge_hamiltonian(graphs.complete_graph(5), 1)
    assert not props.is_k_edge_hamiltonian(graphs.build_g(8, 2, 1), 2)
    # a chordless cycle: its only spanning cycle carries every edge, and
    # any subset of cycle edges is a disjoint union of paths
    assert props.is_k_edge_hamiltonian(graphs.cycle_graph(6), 1)
    assert props.is_k_edge_hamiltonian(graphs.cycle_graph(6), 2)
    # a chord lies on no spanning cycle of cycle-plus-chord
    chord = graphs.cycle_graph(6).with_edge(0, 3)
    assert props.is_hamiltonian(chord)
    assert not props.is_k_edge_hamiltonian(chord, 1)
    with pytest.raises(ParameterError):
        props.is_k_edge_hamiltonian(graphs.complete_graph(5), 3)


def test_k_hamiltonian():
    assert props.is_k_hamiltonian(graphs.complete_graph(6), 2)
    assert not props.is_k_hamiltonian(graphs.build_g(8, 2, 1), 2)
    assert not props.is_k_hamiltonian(graphs.cycle_graph(5), 1)
    with pytest.raises(ParameterError):
        props.is_k_hamiltonian(graphs.cycle_graph(5), 3)


def test_connectivity():
    assert props.vertex_connectivity(graphs.build_h(6, 2, 1)) == 1
    assert not props.is_k_connected(graphs.build_h(6, 2, 1), 2)
    assert props.vertex_connectivity(graphs.complete_graph(5)) == 4
    assert props.vertex_connectivity(graphs.cycle_graph(6)) == 2
    assert props.vertex_connectivity(graphs.petersen_graph()) == 3
    assert props.vertex_connectivity(graphs.empty_graph(1)) == 0
    assert not props.is_k_connected(graphs.build_h(7, 3, 2), 3)
    assert props.is_k_connected(graphs.complete_graph(4), 3)


def test_connectivity_against_cut_enumeration():
    # independent oracle: smallest vertex subset whose removal disconnects
    # (or empties) the graph
    def kappa_brute(g):
        n = g.n
        if n <= 1:
            return 0
        full = (1 << n) - 1
        for size in range(0, n - 1):
            for cut in combinations(range(n), size):
                mask = full
                for v in cut:
                    mask ^= 1 << v
                # connected check on the remainder
                first = (mask & -mask).bit_length() - 1
                seen = 1 << first
                frontier = seen
                while frontier:
                    nxt = 0
                    r = frontier
                    while r:
                        v = (r & -r).bit_length() - 1
                        r &= r - 1
                        nxt |= g.rows[v]
                    frontier = nxt & mask & ~seen
                    seen |= frontier
                if seen != mask:
                    return size
        return n - 1

    rng = random.Random(5)
    for _ in range(120):
        n = rng.randrange(2, 8)
        g = random_graph(n, rng.choice([0.2, 0.5, 0.8]), rng)
        assert props.vertex_connectivity(g) == kappa_brute(g), g.edges()


def test_engine_against_subset_dp():
    rng = random.Random(17)
    for _ in range(250):
        n = rng.randrange(3, 10)
        g = random_graph(n, rng.choice([0.3, 0.5, 0.7]), rng)
        assert props.is_hamiltonian(g) == props.hamiltonian_cycle_dp(g), g.edges()


def test_forced_edges_against_cycle_enumeration():
    # oracle: enumerate all spanning cycles as vertex orders, check
    # containment of the forced set
    def cycles_containing(g, forced):
        import itertools
        n = g.n
        fs = {frozenset(e) for e in forced}
        for perm in itertools.permutations(range(1, n)):
            order = (0,) + perm
            es = {frozenset((order[i], order[(i + 1) % n])) for i in range(n)}
            if all(g.has_edge(u, v) for u, v in (tuple(e) for e in es)):
                if fs <= es:
                    return True
        return False

    rng = random.Random(23)
    checked = 0
    while checked < 80:
        n = rng.randrange(4, 7)
        g = random_graph(n, 0.6, rng)
        edges = g.edges()
        if len(edges) < 2:
            continue
        forest = []
        deg = {}
        for e in rng.sample(edges, min(len(edges), 2)):
            u, v = e
            if deg.get(u, 0) < 2 and deg.get(v, 0) < 2 and u != v:
                forest.append(e)
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
        full = (1 << n) - 1
        got = props._ham_cycle_masks(g.rows, full, tuple(forest))
        want = cycles_containing(g, forest)
        assert got == want, (g.edges(), forest)
        checked += 1


def test_cross_decider_consistency():
    rng = random.Random(29)
    for _ in range(120):
        n = rng.randrange(3, 9)
        g = random_graph(n, 0.5, rng)
        ham = props.is_hamiltonian(g)
        assert props.is_k_edge_hamiltonian(g, 0) == ham
        assert props.is_k_hamiltonian(g, 0) == ham
        assert props.is_k_connected(g, 1) == props.is_connected(g)
        if n >= 3 and props.is_hamiltonian_connected(g):
            assert ham
        if ham:
            assert props.is_traceable(g)


def test_spec_table():
    cases = [
        (PropertySpec("traceable"), -1, 2),
        (PropertySpec("hamiltonian"), 0, 3),
        (PropertySpec("hamiltonian_connected"), 1, 2),
        (PropertySpec("k_edge_hamiltonian", 2), 2, 3),
        (PropertySpec("k_hamiltonian", 2), 2, 5),
        (PropertySpec("k_connected", 3), 1, 4),
    ]
    for spec, ell, min_n in cases:
        assert spec.ell == ell
        assert spec.min_n == min_n
        assert spec.stability_threshold(10) == 10 + ell
    with pytest.raises(ParameterError):
        PropertySpec("hamiltonian", 2)
    with pytest.raises(ParameterError):
        PropertySpec("k_hamiltonian", 0)


def test_has_property_dispatch():
    assert props.has_property(graphs.complete_graph(5), PropertySpec("hamiltonian"))
    assert not props.has_property(graphs.build_g(9, 1, 2),
                                  PropertySpec("hamiltonian_connected"))
    assert not props.has_property(graphs.build_h(7, 3, 2),
                                  PropertySpec("k_connected", 3))
    with pytest.raises(PropertyDomainError):
        props.has_property(graphs.complete_graph(2), PropertySpec("hamiltonian"))
    with pytest.raises(PropertyDomainError):
        props.has_property(graphs.complete_graph(4),
                           PropertySpec("k_hamiltonian", 2))


def test_bc_closure():
    k6_minus = graphs.from_edges(6, [(u, v) for u in range(6)
                                     for v in range(u + 1, 6) if (u, v) != (0, 1)])
    assert props.bc_closure(k6_minus, 6) == graphs.complete_graph(6)
    pet = graphs.petersen_graph()
    assert props.bc_closure(pet, 10) == pet
    assert props.bc_closure(graphs.cycle_graph(5), 4) == graphs.complete_graph(5)


def test_bc_closure_confluence():
    rng = random.Random(31)
    for _ in range(25):
        n = rng.randrange(4, 9)
        g = random_graph(n, 0.4, rng)
        threshold = rng.randrange(0, n + 2)
        ref = props.bc_closure(g, threshold)
        for _ in range(5):
            assert props.bc_closure_random_order(g, threshold, rng) == ref


def test_bc_closure_grows_monotone():
    rng = random.Random(37)
    for _ in range(40):
        n = rng.randrange(3, 9)
        g = random_graph(n, 0.3, rng)
        c = props.bc_closure(g, n)
        for u, v in g.edges():
            assert c.has_edge(u, v)
        assert props.bc_closure(c, n) == c  # idempotent


def test_witness_examples():
    w = props.chvatal_witness(graphs.build_g(6, 0, 2), PropertySpec("hamiltonian"))
    assert w is not None and w.i_star == 2
    assert w.low_cap == 2 and w.low_count >= 2
    w = props.chvatal_witness(graphs.build_h(6, 2, 1), PropertySpec("k_connected", 2))
    assert w is not None and w.i_star == 1
    # complete graphs have every property; no witness requirement
    props.chvatal_witness(graphs.complete_graph(6), PropertySpec("hamiltonian"))


def test_witness_exists_for_every_lacking_graph_small():
    from starextremal.search import enumerate_graphs
    specs = [PropertySpec("hamiltonian"), PropertySpec("traceable"),
             PropertySpec("hamiltonian_connected"), PropertySpec("k_hamiltonian", 1),
             PropertySpec("k_connected", 2)]
    for n in (4, 5, 6):
        for g in enumerate_graphs(n, 0):
            for spec in specs:
                if g.n < spec.min_n:
                    continue
                if not props.has_property(g, spec):
                    assert props.chvatal_witness(g, spec) is not None, \
                        (spec.label, g.edges())
