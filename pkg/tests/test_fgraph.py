"""Functional-graph values: components, algebra, maps, serialization."""

from __future__ import annotations

import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powergraph.fgraph import (
    Component,
    FunctionalGraph,
    cyc,
    decompose_map,
    disjoint_union,
    from_map,
    graph_from_summary,
    hanging_tree_census,
    is_isomorphic,
    least_rotation,
    replicate,
    summary,
    tensor,
    to_dot,
    to_successor_map,
)
from powergraph.tree import elementary_tree, leaf

_FAST = settings(max_examples=200, deadline=None, derandomize=True)

T22 = elementary_tree((2, 2))
T3 = elementary_tree((3,))


def test_least_rotation():
    assert least_rotation([0]) == 0
    assert least_rotation([2, 1]) == 1
    assert least_rotation([1, 2, 1, 2]) == 0
    assert least_rotation([3, 3, 3]) == 0
    assert least_rotation(["b", "a", "c", "a"]) == 3  # "abac" < "acab"


@_FAST
@given(st.lists(st.integers(0, 3), min_size=1, max_size=12))
def test_least_rotation_is_minimal(seq):
    r = least_rotation(seq)
    best = seq[r:] + seq[:r]
    for k in range(len(seq)):
        assert best <= seq[k:] + seq[:k]


class TestComponent:
    def test_regularity(self):
        assert Component([T22, T22]).is_regular()
        assert not Component([T22, leaf()]).is_regular()
        assert Component([leaf()]).is_regular()

    def test_rotation_invariance(self):
        a = Component([T22, T3, leaf()])
        b = Component([T3, leaf(), T22])
        c = Component([leaf(), T22, T3])
        assert a.canonical_key() == b.canonical_key() == c.canonical_key()
        # a genuine reordering (not a rotation) is a different component
        d = Component([T3, T22, leaf()])
        assert d.canonical_key() != a.canonical_key()

    def test_counts(self):
        comp = Component([T22, T3])
        assert comp.cycle_length == 2
        assert comp.vertex_count == 7

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            Component([])


class TestFunctionalGraph:
    def test_merges_multiplicities(self):
        one = Component([leaf()])
        g = FunctionalGraph([(one, 2), (one, 3)])
        assert g.parts == ((one, 5),)
        assert g.component_count == 5
        assert g.vertex_count == 5

    def test_drops_zero_rejects_negative(self):
        one = Component([leaf()])
        assert FunctionalGraph([(one, 0)]).parts == ()
        with pytest.raises(ValueError):
            FunctionalGraph([(one, -1)])

    def test_empty_graph(self):
        g = FunctionalGraph()
        assert g.vertex_count == 0
        assert g.component_count == 0
        assert g == FunctionalGraph([])

    def test_equality_ignores_order(self):
        a = disjoint_union(cyc(2, T22), cyc(3))
        b = disjoint_union(cyc(3), cyc(2, T22))
        assert a == b
        assert hash(a) == hash(b)
        assert is_isomorphic(a, b)

    def test_immutable(self):
        g = cyc(4)
        with pytest.raises(AttributeError):
            g.parts = ()


def test_cyc():
    assert cyc(6).vertex_count == 6
    assert cyc(6).periodic_count == 6
    assert cyc(2, T22).vertex_count == 8
    assert cyc(2, T22).periodic_count == 2


def test_replicate():
    assert replicate(6, cyc(2)) == FunctionalGraph([(Component([leaf(), leaf()]), 6)])
    assert replicate(0, cyc(2)) == FunctionalGraph()
    assert replicate(2, replicate(3, cyc(5))) == replicate(6, cyc(5))


def test_tensor_of_cycles():
    # 6- and 4-cycles tensor into two 12-cycles
    assert tensor(cyc(6), cyc(4)) == replicate(2, cyc(12))


def test_tensor_cycle_with_hung_tree():
    # a plain r-cycle times a one-point cycle carrying T gives Cyc(r, T)
    assert tensor(cyc(3), cyc(1, elementary_tree((2,)))) == cyc(
        3, elementary_tree((2,))
    )


@_FAST
@given(st.lists(st.integers(1, 8), min_size=2, max_size=3))
def test_tensor_cycles_lemma(rs):
    prod = math.prod(rs)
    lcm = math.lcm(*rs)
    graphs = [cyc(r) for r in rs]
    out = graphs[0]
    for g in graphs[1:]:
        out = tensor(out, g)
    assert out == replicate(prod // lcm, cyc(lcm))


def test_tensor_distributes_over_union():
    a = disjoint_union(cyc(2), cyc(3))
    b = cyc(6)
    lhs = tensor(a, b)
    rhs = disjoint_union(tensor(cyc(2), b), tensor(cyc(3), b))
    assert lhs == rhs


def test_from_map_trivial_cases():
    assert from_map(3, lambda x: x) == replicate(3, cyc(1))
    assert from_map(6, lambda x: (x + 1) % 6) == cyc(6)
    assert from_map(0, lambda x: x) == FunctionalGraph()


def test_from_map_accepts_arrays_and_sequences():
    succ = [1, 2, 0, 0]  # 3-cycle with one extra leaf hanging on vertex 0
    expected = FunctionalGraph(
        [(Component([elementary_tree((2,)), leaf(), leaf()]), 1)]
    )
    assert from_map(4, succ) == expected
    assert from_map(4, np.asarray(succ)) == expected


@_FAST
@given(st.integers(1, 60), st.integers(0, 2**30))
def test_from_map_random_round_trip(n, seed):
    rng = np.random.default_rng(seed)
    succ = rng.integers(0, n, size=n, dtype=np.int64)
    g = from_map(n, succ)
    assert g.vertex_count == n
    # rebuilt successor table describes an isomorphic graph
    assert from_map(n, to_successor_map(g)) == g


def test_to_successor_map_shape():
    g = disjoint_union(cyc(2, T22), replicate(2, cyc(3)))
    succ = to_successor_map(g)
    assert len(succ) == g.vertex_count
    assert ((succ >= 0) & (succ < len(succ))).all()


def test_summary_round_trip():
    g = disjoint_union(replicate(4, cyc(2, elementary_tree((4, 2)))), cyc(1, T22))
    data = summary(g)
    assert data["vertex_count"] == g.vertex_count
    assert graph_from_summary(data) == g
    # survives a JSON round trip and ignores foreign keys
    data2 = json.loads(json.dumps(data))
    data2["provenance"] = "whatever"
    assert graph_from_summary(data2) == g


def test_summary_nonregular_component():
    g = from_map(5, [1, 0, 0, 1, 3])
    data = summary(g)
    assert graph_from_summary(data) == g


def test_summary_empty():
    data = summary(FunctionalGraph())
    assert data["components"] == []
    assert graph_from_summary(data) == FunctionalGraph()


def test_hanging_tree_census():
    g = disjoint_union(replicate(3, cyc(2, T22)), cyc(4))
    census = hanging_tree_census(g)
    assert census[T22.canonical_code()] == 6
    assert census["()"] == 4
    assert len(census) == 2


def test_to_dot_counts():
    g = disjoint_union(cyc(2, T22), cyc(3))
    dot = to_dot(g)
    assert dot.startswith("digraph")
    assert dot.count("->") == g.vertex_count  # functional: one edge per vertex


def test_to_dot_stable():
    a = disjoint_union(cyc(3), cyc(2, T22))
    b = disjoint_union(cyc(2, T22), cyc(3))
    assert to_dot(a) == to_dot(b)


@_FAST
@given(st.integers(1, 40), st.integers(0, 2**30))
def test_orbit_matches_iteration(n, seed):
    rng = np.random.default_rng(seed)
    succ = rng.integers(0, n, size=n, dtype=np.int64).tolist()
    dec = decompose_map(n, succ)
    v = int(rng.integers(0, n))
    seen = {}
    u, steps = v, 0
    while u not in seen:
        seen[u] = steps
        u = succ[u]
        steps += 1
    pre, per = dec.orbit(v)
    assert pre == seen[u]
    assert per == steps - seen[u]


@_FAST
@given(st.integers(1, 40), st.integers(0, 2**30))
def test_decompose_map_consistency(n, seed):
    rng = np.random.default_rng(seed)
    succ = rng.integers(0, n, size=n, dtype=np.int64)
    dec = decompose_map(n, succ)
    assert dec.graph() == from_map(n, succ)
    # every cycle vertex is its own root with preperiod 0
    for cycle in dec.cycles:
        for u in cycle:
            assert dec.orbit(u)[0] == 0
            assert dec.orbit(u)[1] == len(cycle)
