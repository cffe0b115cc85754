"""The acceptance checks behind `powergraph selftest`.

Ten numbered criteria: six frozen golden values, a full corpus sweep of
structural-vs-brute agreement, randomized property suites, a rewrite-rule
consistency check, and a total time budget.  Criteria run in order; each
reports pass/fail with a one-line detail.  The same functions back the
pytest acceptance suite, so `pytest` and `powergraph selftest` cannot
drift apart.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Callable, TextIO

import numpy as np
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from .arith import (
    Sequence,
    iterated_gcd,
    nu_omega_split,
    sequence_product,
    two_adic_valuation,
)
from .fgraph import cyc, disjoint_union, replicate, tensor
from .groups import (
    AbelianGroup,
    CyclicGroup,
    DihedralGroup,
    FiniteGroup,
    FlowerType,
    PGLGroup,
    QuaternionGroup,
    SemidirectGroup,
    UnitsGroup,
    center,
    flower_decompose,
)
from .oracle import brute_force_graph, successor_table, verify
from .structural import (
    central_tree,
    central_tree_rules,
    pgl_type,
    quaternion_graph,
    quaternion_type,
    semidirect_type,
    structural_graph,
)
from .tree import (
    elementary_tree,
    enclose,
    is_homogeneous,
    j_sum,
    leaf,
    scalar_dot,
    tree_sum,
)

#: wall-clock budget for criteria 1-9 together (criterion 10)
TIME_BUDGET_SECONDS = 60.0

_SET = settings(
    max_examples=1000,
    deadline=None,
    derandomize=True,
    database=None,
    suppress_health_check=list(HealthCheck),
)


# ---------------------------------------------------------------------------
# corpus


_corpus_cache: list[FiniteGroup] | None = None


def corpus_groups() -> list[FiniteGroup]:
    """The standard verification corpus (cached after first build)."""
    global _corpus_cache
    if _corpus_cache is None:
        groups: list[FiniteGroup] = []
        for n in range(1, 61):
            groups.append(CyclicGroup(n))
        for k in (1, 2, 3):
            for combo in combinations_with_replacement(range(2, 13), k):
                groups.append(AbelianGroup(combo))
        for n in range(3, 31):
            groups.append(DihedralGroup(n))
        for n in range(2, 16):
            groups.append(QuaternionGroup(n))
        for n in range(2, 201):
            for m in range(2, 400 // n + 1):
                for s in range(2, n):
                    if SemidirectGroup.flower_condition(n, m, s):
                        groups.append(SemidirectGroup(n, m, s))
        for q in (3, 4, 5, 7, 8, 9):
            groups.append(PGLGroup(q))
        _corpus_cache = groups
    return _corpus_cache


def flower_corpus() -> list[FiniteGroup]:
    """The noncyclic nonabelian part of the corpus (all flower groups)."""
    return [
        g
        for g in corpus_groups()
        if isinstance(g, (QuaternionGroup, SemidirectGroup, PGLGroup))
    ]


def _expected_family_type(g: FiniteGroup) -> FlowerType:
    if isinstance(g, QuaternionGroup):
        return quaternion_type(g.n)
    if isinstance(g, PGLGroup):
        return pgl_type(g.q)
    if isinstance(g, SemidirectGroup):  # includes DihedralGroup
        return semidirect_type(g.n, g.m, g.s)
    raise AssertionError(f"no family type for {g.name}")


# ---------------------------------------------------------------------------
# criteria 1-6: frozen golden values


def _criterion_abelian_golden() -> str:
    t42 = elementary_tree((4, 2))
    expected = disjoint_union(cyc(1, t42), replicate(4, cyc(2, t42)))
    res = structural_graph(AbelianGroup((6, 12)), 14)
    assert res is not None and res.graph == expected, "structural mismatch"
    assert brute_force_graph(AbelianGroup((6, 12)), 14) == expected
    assert brute_force_graph(UnitsGroup(91), 14) == expected
    return "abelian 6x12 and units mod 91 at t=14: {T(4,2)} (+) 4xCyc(2,T(4,2))"


def _criterion_quaternion24() -> str:
    t3 = elementary_tree((3,))
    expected = disjoint_union(
        cyc(2, t3), replicate(2, cyc(1, t3)), replicate(6, cyc(2))
    )
    g = QuaternionGroup(6)
    res = structural_graph(g, 3)
    brute = brute_force_graph(g, 3)
    assert res is not None and res.graph == expected == brute
    assert brute.vertex_count == 24
    return "quaternion order 24 at t=3: Cyc(2,T(3)) (+) 2x{T(3)} (+) 6xCyc(2)"


def _criterion_quaternion48() -> str:
    t222 = elementary_tree((2, 2, 2))
    alpha = two_adic_valuation(12)
    assert alpha == 2
    central = j_sum(t222, alpha, enclose([leaf()] * 24))
    expected = disjoint_union(replicate(2, cyc(1, t222)), cyc(1, central))
    g = QuaternionGroup(12)
    res = structural_graph(g, 10)
    brute = brute_force_graph(g, 10)
    assert res is not None and res.graph == expected == brute
    assert brute.vertex_count == 48
    return "quaternion order 48 at t=10: 2x{T(2,2,2)} (+) {T(2,2,2) +_2 <24x.>}"


def _criterion_semidirect() -> str:
    t5 = elementary_tree((5,))
    t22 = elementary_tree((2, 2))
    central = tree_sum(t5, scalar_dot(65, t22))
    expected = disjoint_union(replicate(2, cyc(6, t5)), cyc(1, central))
    g = SemidirectGroup(65, 4, 8)
    res = structural_graph(g, 10)
    brute = brute_force_graph(g, 10)
    assert res is not None and res.graph == expected == brute
    assert brute.vertex_count == 260
    return "C65 x| C4 (s=8) at t=10: 2xCyc(6,T(5)) (+) {T(5) + 65.T(2,2)}"


def _criterion_pgl5() -> str:
    t2 = elementary_tree((2,))
    t22 = elementary_tree((2, 2))
    central = tree_sum(scalar_dot(15, t22), scalar_dot(10, t2))
    expected = disjoint_union(
        replicate(10, cyc(2, t2)), replicate(6, cyc(4)), cyc(1, central)
    )
    rep = verify("pgl2:5", 2)
    res = structural_graph(PGLGroup(5), 2)
    assert res is not None and res.graph == expected
    assert rep.ok and rep.vertex_count == 120
    assert rep.distinct_trees == 3, f"expected 3 distinct trees, got {rep.distinct_trees}"
    return "PGL(2,5) at t=2: 10xCyc(2,T(2)) (+) 6xCyc(4) (+) {15.T(2,2) + 10.T(2)}; 3 trees"


def _criterion_pgl11() -> str:
    rep = verify("pgl2:11", 2)
    assert rep.ok and rep.vertex_count == 1320
    assert rep.distinct_trees == 4, f"expected 4 distinct trees, got {rep.distinct_trees}"
    return "PGL(2,11) at t=2 verified on 1320 vertices; 4 distinct hanging trees"


# ---------------------------------------------------------------------------
# criterion 7: corpus sweep


def _criterion_corpus_sweep() -> str:
    groups = corpus_groups()
    failures: list[tuple[str, int]] = []
    for g in groups:
        for t in range(1, 25):
            res = structural_graph(g, t)
            if res is None or res.graph != brute_force_graph(g, t):
                failures.append((g.name, t))
    assert not failures, f"{len(failures)} mismatches, first: {failures[:3]}"
    return f"{len(groups)} groups x t=1..24: {len(groups) * 24} structural-vs-brute matches"


# ---------------------------------------------------------------------------
# criterion 8: property suites


@st.composite
def _layer_sequences(draw) -> Sequence:
    """Non-increasing positive sequences with a bounded node budget."""
    k = draw(st.integers(1, 5))
    terms = []
    bound = 12
    product = 1
    for _ in range(k):
        x = draw(st.integers(1, bound))
        terms.append(x)
        bound = x
        product *= x
    assume(product <= 3000)
    return Sequence(terms)


@st.composite
def _gcd_sequences(draw) -> Sequence:
    n = draw(st.integers(2, 400))
    t = draw(st.integers(1, 60))
    return iterated_gcd(n, t)


@st.composite
def _flower_types(draw) -> FlowerType:
    c0 = draw(st.integers(1, 6))
    k = draw(st.integers(1, 8))
    muls = draw(st.lists(st.integers(1, 12), min_size=k, max_size=k))
    petals = tuple(c0 * m for m in muls)
    assume(sum(petals) <= 500)
    return FlowerType(c0, petals)


@_SET
@given(_layer_sequences())
def _prop_elementary_tree(v: Sequence) -> None:
    tr = elementary_tree(v)
    assert tr.node_count == v.product
    assert tr.depth == v.depth
    assert is_homogeneous(tr)


@_SET
@given(
    st.lists(st.integers(1, 8), min_size=1, max_size=3),
    st.lists(st.integers(1, 8), min_size=1, max_size=3),
)
def _prop_cycle_tensor(a: list[int], b: list[int]) -> None:
    left = disjoint_union(*(cyc(x) for x in a))
    right = disjoint_union(*(cyc(y) for y in b))
    expected = disjoint_union(
        *(
            replicate(math.gcd(x, y), cyc(math.lcm(x, y)))
            for x in a
            for y in b
        )
    )
    assert tensor(left, right) == expected


@_SET
@given(_gcd_sequences(), _gcd_sequences())
def _prop_loop_tensor(u: Sequence, v: Sequence) -> None:
    assume(u.product * v.product <= 4000)
    lhs = tensor(cyc(1, elementary_tree(u)), cyc(1, elementary_tree(v)))
    assert lhs == cyc(1, elementary_tree(sequence_product(u, v)))


@_SET
@given(_flower_types(), st.integers(1, 24))
def _prop_central_node_count(ft: FlowerType, t: int) -> None:
    nu0 = nu_omega_split(ft.pistil, t)[0]
    expected = (
        sum(nu_omega_split(c, t)[0] for c in ft.petals)
        - (len(ft.petals) - 1) * nu0
    )
    assert central_tree(ft, t).node_count == expected


def _criterion_property_suites() -> str:
    _prop_elementary_tree()
    _prop_cycle_tensor()
    _prop_loop_tensor()
    _prop_central_node_count()
    # tree-count bound: a k-petal flower graph has <= k+1 distinct trees
    bound_checks = 0
    for g in flower_corpus():
        dec = flower_decompose(g)
        k = len(dec.petals)
        for t in range(1, 25):
            res = structural_graph(g, t)
            codes = {
                tr.canonical_code()
                for comp, _ in res.graph.parts
                for tr in comp.cycle_trees
            }
            assert len(codes) <= k + 1, (g.name, t, len(codes), k)
            bound_checks += 1
    # petal stability and central structure, exhaustive on small groups
    small = [g for g in flower_corpus() if g.order <= 200]
    for g in small:
        dec = flower_decompose(g)
        assert dec.type == _expected_family_type(g), g.name
        assert dec.pistil <= center(g), f"pistil not central in {g.name}"
        pistil = np.zeros(g.order, dtype=bool)
        pistil[list(dec.pistil)] = True
        masks = np.zeros((len(dec.petals), g.order), dtype=bool)
        for i, petal in enumerate(dec.petals):
            masks[i, list(petal)] = True
        masks &= ~pistil  # petal minus pistil
        for t in range(1, 25):
            succ = successor_table(g, t)
            hit = masks[:, succ]  # x lands in petal i minus the pistil
            assert not np.any(hit & ~masks), (g.name, t)
    return (
        f"4 randomized suites x 1000 cases; tree bound on {bound_checks} "
        f"flower graphs; petal stability + central pistil on {len(small)} groups"
    )


# ---------------------------------------------------------------------------
# criterion 9: rewrite rules vs enumeration


def _criterion_rules_vs_enumeration() -> str:
    rng = random.Random(0x5EED)
    types: list[FlowerType] = []
    while len(types) < 1000:
        c0 = rng.randint(1, 8)
        k = rng.randint(1, 10)
        petals = tuple(c0 * rng.randint(1, 15) for _ in range(k))
        if sum(petals) <= 600:
            types.append(FlowerType(c0, petals))
    applied = 0
    for ft in types:
        t = rng.randint(1, 24)
        ruled = central_tree_rules(ft, t)
        if ruled is not None:
            tree, expr = ruled
            assert tree == central_tree(ft, t), (ft, t, expr)
            applied += 1
    assert applied >= 100, f"rules applied on only {applied}/1000 types"
    refused = 0
    for n in range(2, 16):
        for t in (2, 6, 10, 14, 18, 22):
            ft = quaternion_type(n)
            assert central_tree_rules(ft, t) is None, (n, t)
            res = quaternion_graph(n, t)
            assert res.central_tree == central_tree(ft, t), (n, t)
            refused += 1
    return (
        f"rules agreed with enumeration on {applied}/1000 random types; "
        f"correctly refused all {refused} quaternion t=2 mod 4 cases"
    )


# ---------------------------------------------------------------------------
# runner


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    ok: bool
    seconds: float
    detail: str


_CRITERIA: list[tuple[str, Callable[[], str]]] = [
    ("abelian golden value (6x12 / units 91, t=14)", _criterion_abelian_golden),
    ("quaternion order 24, t=3", _criterion_quaternion24),
    ("quaternion order 48, t=10 (j-sum case)", _criterion_quaternion48),
    ("semidirect C65 x| C4, t=10", _criterion_semidirect),
    ("PGL(2,5), t=2 with 3 distinct trees", _criterion_pgl5),
    ("PGL(2,11), t=2 with 4 distinct trees", _criterion_pgl11),
    ("corpus sweep: structural == brute force", _criterion_corpus_sweep),
    ("randomized property suites", _criterion_property_suites),
    ("central-tree rules vs enumeration", _criterion_rules_vs_enumeration),
]


def run_selftest(stream: TextIO | None = None) -> list[CriterionResult]:
    """Run criteria 1-9, append the time-budget criterion, return all ten."""
    results: list[CriterionResult] = []
    total = 0.0
    for number, (name, fn) in enumerate(_CRITERIA, start=1):
        start = time.perf_counter()
        try:
            detail = fn()
            ok = True
        except Exception as exc:  # a failing criterion must not stop the rest
            detail = f"{type(exc).__name__}: {str(exc)[:500]}"
            ok = False
        elapsed = time.perf_counter() - start
        total += elapsed
        results.append(CriterionResult(number, name, ok, elapsed, detail))
        if stream is not None:
            _print_result(stream, results[-1])
    budget = CriterionResult(
        10,
        f"criteria 1-9 complete within {TIME_BUDGET_SECONDS:.0f} s",
        total < TIME_BUDGET_SECONDS,
        total,
        f"criteria 1-9 took {total:.1f} s",
    )
    results.append(budget)
    if stream is not None:
        _print_result(stream, budget)
    return results


def _print_result(stream: TextIO, r: CriterionResult) -> None:
    status = "PASS" if r.ok else "FAIL"
    stream.write(f"[{r.number:2d}] {status}  {r.seconds:6.2f}s  {r.name}\n")
    stream.write(f"           {r.detail}\n")


def selftest_ok(results: list[CriterionResult]) -> bool:
    return all(r.ok for r in results)
