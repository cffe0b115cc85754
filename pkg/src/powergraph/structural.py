"""Closed-form functional graphs of power maps, without enumerating groups.

Each builder returns a StructuralResult: the graph, the hanging tree at
the identity (the "central" tree, since the identity is a fixed point of
every power map), and a readable expression recording how that tree was
assembled.

The flower builder covers noncyclic groups whose maximal cyclic
subgroups pairwise intersect in a common central subgroup (the pistil).
Its central tree is computed on a pseudo-flower: an explicit model on
c0 + sum(ci - c0) points that glues cyclic petals along a shared pistil
and provably has the same power-map graph as any group of the same type.
A rewrite-rule engine produces closed forms for the central tree when it
can; it is deliberately partial and returns None rather than guess.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from itertools import product as iproduct
from typing import Iterable

import numpy as np

from .arith import (
    Sequence,
    _check_positive,
    divisors,
    euler_phi,
    factorize,
    iterated_gcd,
    mult_order,
    nu_omega_split,
    sequence_product,
    two_adic_valuation,
)
from .fgraph import Component, FunctionalGraph, decompose_map
from .groups import (
    FiniteGroup,
    FlowerType,
    PGLGroup,
    QuaternionGroup,
    SemidirectGroup,
    _IRREDUCIBLE,
    _is_prime,
    flower_decompose,
)
from .tree import (
    RootedTree,
    elementary_tree,
    enclose,
    j_sum,
    leaf,
    render_tree,
    scalar_dot,
    tree_sum,
)


@dataclass(frozen=True)
class StructuralResult:
    """A graph computed by formula, with provenance for the central tree."""

    graph: FunctionalGraph
    method: str
    central_tree: RootedTree
    central_expression: str
    flower_type: FlowerType | None = None


def _seq_term(seq: Sequence) -> str:
    if seq.is_trivial():
        return "."
    return "T(" + ",".join(str(x) for x in seq.terms) + ")"


def _sum_expression(terms: Iterable[tuple[int, str]]) -> str:
    """Render k1.A + k2.B + ..., dropping leaf terms (the neutral element)."""
    parts = [f"{k}.{s}" if k > 1 else s for k, s in terms if s != "."]
    return " + ".join(parts) if parts else "."


# ---------------------------------------------------------------------------
# abelian groups


def cyclic_graph(n: int, t: int) -> StructuralResult:
    """Graph of g -> g^t on the cyclic group of order n.

    Write n = nu * omega with omega the largest divisor coprime to t.
    Every periodic component is a cycle of length ord_d(t) for some
    d | omega, carrying the layered tree of the gcd chain of n by t at
    every cycle vertex.
    """
    _check_positive(n, "n")
    _check_positive(t, "t")
    seq = iterated_gcd(n, t)
    tree = elementary_tree(seq)
    _, omega = nu_omega_split(n, t)
    parts = []
    for d in divisors(omega):
        m = mult_order(t, d)
        cnt = euler_phi(d)
        assert cnt % m == 0, (n, t, d)
        parts.append((Component([tree] * m), cnt // m))
    graph = FunctionalGraph(parts)
    assert graph.vertex_count == n
    return StructuralResult(graph, "cyclic", tree, _seq_term(seq))


def abelian_graph(orders: Iterable[int], t: int) -> StructuralResult:
    """Graph of the power map on a direct product of cyclic groups.

    The hanging tree is the layered tree of the coordinatewise product of
    the per-factor gcd chains; cycle lengths are lcms of per-factor
    multiplicative orders over divisor vectors d | omega.
    """
    rs = tuple(orders)
    if not rs:
        raise ValueError("need at least one cyclic factor")
    for r in rs:
        _check_positive(r, "factor order")
    _check_positive(t, "t")
    if len(rs) == 1:
        return cyclic_graph(rs[0], t)
    seq = Sequence((1,))
    for r in rs:
        seq = sequence_product(seq, iterated_gcd(r, t))
    tree = elementary_tree(seq)
    omegas = [nu_omega_split(r, t)[1] for r in rs]
    by_length: dict[int, int] = {}
    for dvec in iproduct(*(divisors(w) for w in omegas)):
        m = math.lcm(*(mult_order(t, d) for d in dvec))
        cnt = math.prod(euler_phi(d) for d in dvec)
        assert cnt % m == 0, (rs, t, dvec)
        by_length[m] = by_length.get(m, 0) + cnt // m
    parts = [(Component([tree] * m), k) for m, k in by_length.items()]
    graph = FunctionalGraph(parts)
    assert graph.vertex_count == math.prod(rs)
    return StructuralResult(graph, "abelian", tree, _seq_term(seq))


# ---------------------------------------------------------------------------
# pseudo-flowers: the explicit model used for central trees


class PseudoFlower:
    """The glued model F(c0; c1, ..., ck) on dense indices.

    Index layout: 0..c0-1 are the pistil residues; then one block per
    petal holding its fresh elements, i.e. the residues x in Z_ci that
    are not multiples of e_i = ci / c0 (multiples are identified with
    pistil residue x / e_i).  The power map acts as x -> t*x inside each
    petal, which is well defined on the gluing.
    """

    def __init__(self, ftype: FlowerType):
        self.ftype = ftype
        c0 = ftype.pistil
        offsets = []
        off = c0
        for ci in ftype.petals:
            offsets.append(off)
            off += ci - c0
        self.offsets = tuple(offsets)
        self.size = off
        assert self.size == ftype.size

    def element(self, idx: int) -> tuple[int, int]:
        """(petal number, residue); petal -1 means the pistil."""
        if not 0 <= idx < self.size:
            raise ValueError(f"index {idx} out of range")
        c0 = self.ftype.pistil
        if idx < c0:
            return (-1, idx)
        i = bisect_right(self.offsets, idx) - 1
        e = self.ftype.petals[i] // c0
        q, r = divmod(idx - self.offsets[i], e - 1)
        return (i, q * e + r + 1)

    def index(self, petal: int, residue: int) -> int:
        """Inverse of element(); petal -1 addresses the pistil."""
        c0 = self.ftype.pistil
        if petal == -1:
            if not 0 <= residue < c0:
                raise ValueError(f"pistil residue {residue} out of range")
            return residue
        ci = self.ftype.petals[petal]
        if not 0 <= residue < ci:
            raise ValueError(f"petal residue {residue} out of range")
        e = ci // c0
        q, r = divmod(residue, e)
        if r == 0:  # glued to the pistil
            return q
        return self.offsets[petal] + q * (e - 1) + r - 1

    def successor_table(self, t: int) -> np.ndarray:
        """Successor indices of x -> t*x, vectorized per petal block."""
        _check_positive(t, "t")
        c0 = self.ftype.pistil
        succ = np.empty(self.size, dtype=np.int64)
        succ[:c0] = np.arange(c0, dtype=np.int64) * (t % c0) % c0
        for i, ci in enumerate(self.ftype.petals):
            e = ci // c0
            if e == 1:
                continue
            j = np.arange(ci - c0, dtype=np.int64)
            q, r = np.divmod(j, e - 1)
            x = q * e + r + 1
            y = x * (t % ci) % ci
            glued = y % e == 0
            fresh = self.offsets[i] + (y // e) * (e - 1) + (y % e) - 1
            succ[self.offsets[i] : self.offsets[i] + ci - c0] = np.where(
                glued, y // e, fresh
            )
        return succ


def pseudo_flower_graph(ftype: FlowerType, t: int) -> FunctionalGraph:
    """The power-map graph of the pseudo-flower, by direct decomposition."""
    pf = PseudoFlower(ftype)
    return decompose_map(pf.size, pf.successor_table(t)).graph()


def central_tree(ftype: FlowerType, t: int) -> RootedTree:
    """The hanging tree at the identity, computed on the pseudo-flower.

    This is the reference construction: it always works, at the cost of
    touching all ftype.size points.
    """
    pf = PseudoFlower(ftype)
    dec = decompose_map(pf.size, pf.successor_table(t))
    return dec.tree_at(0)


def central_tree_rules(
    ftype: FlowerType, t: int
) -> tuple[RootedTree, str] | None:
    """Closed form for the central tree by rewrite rules, when they apply.

    Reductions on the type, with k = number of petals:
      - gcd(c0, t) = 1: the tree is the root-sum of the petals' layered
        trees (finishes immediately);
      - k = 1: the tree is the layered tree of the remaining petal;
      - a petal with gcd(t, ci/c0) = 1 can be dropped (k >= 2);
      - a petal with ci | t can be dropped after crediting ci - c0 extra
        leaf children to the root (k >= 2).
    Returns None when no reduction applies; callers fall back to the
    pseudo-flower construction.  Never guesses.
    """
    _check_positive(t, "t")
    c0 = ftype.pistil
    petals = list(ftype.petals)
    extra_leaves = 0
    while True:
        if len(petals) == 1:
            seq = iterated_gcd(petals[0], t)
            base = elementary_tree(seq)
            terms = [(1, _seq_term(seq))]
            break
        if math.gcd(c0, t) == 1:
            ordered: list[Sequence] = []
            counts: dict[Sequence, int] = {}
            for ci in reversed(petals):  # largest petal first in the output
                s = iterated_gcd(ci, t)
                if s in counts:
                    counts[s] += 1
                else:
                    counts[s] = 1
                    ordered.append(s)
            base = tree_sum(
                *(scalar_dot(counts[s], elementary_tree(s)) for s in ordered)
            )
            terms = [(counts[s], _seq_term(s)) for s in ordered]
            break
        progressed = False
        for i, ci in enumerate(petals):
            if math.gcd(t, ci // c0) == 1:
                petals.pop(i)
                progressed = True
                break
        if progressed:
            continue
        for i, ci in enumerate(petals):
            if t % ci == 0:
                extra_leaves += ci - c0
                petals.pop(i)
                progressed = True
                break
        if progressed:
            continue
        return None
    if extra_leaves:
        base = tree_sum(base, enclose([leaf()] * extra_leaves))
        terms = terms + [(1, f"<{extra_leaves}x.>")]
    return base, _sum_expression(terms)


# ---------------------------------------------------------------------------
# the flower theorem


def flower_graph(ftype: FlowerType, t: int) -> StructuralResult:
    """Graph of the power map on any group (or pseudo-flower) of this type.

    Petal i contributes cycles for each d | omega_i with d not dividing
    omega_0, carrying the petal's layered tree; divisors of omega_0
    contribute cycles through the pistil, all carrying the central tree.
    """
    _check_positive(t, "t")
    c0 = ftype.pistil
    nu0, omega0 = nu_omega_split(c0, t)
    parts = []
    expected_central = -(len(ftype.petals) - 1) * nu0
    for ci in ftype.petals:
        nui, omegai = nu_omega_split(ci, t)
        expected_central += nui
        tree = elementary_tree(iterated_gcd(ci, t))
        for d in divisors(omegai):
            if omega0 % d == 0:
                continue
            m = mult_order(t, d)
            cnt = euler_phi(d)
            assert cnt % m == 0, (ftype, t, d)
            parts.append((Component([tree] * m), cnt // m))
    ct = central_tree(ftype, t)
    assert ct.node_count == expected_central, (ftype, t)
    ruled = central_tree_rules(ftype, t)
    if ruled is None:
        expr = render_tree(ct)
    else:
        rule_tree, expr = ruled
        assert rule_tree == ct, (ftype, t, expr)
    for d in divisors(omega0):
        m = mult_order(t, d)
        cnt = euler_phi(d)
        assert cnt % m == 0, (ftype, t, d)
        parts.append((Component([ct] * m), cnt // m))
    graph = FunctionalGraph(parts)
    assert graph.vertex_count == ftype.size
    return StructuralResult(graph, "flower", ct, expr, ftype)


# ---------------------------------------------------------------------------
# family corollaries (pure arithmetic, no group or model construction)


def quaternion_type(n: int) -> FlowerType:
    """The flower type of the generalized quaternion group of order 4n."""
    if n < 2:
        raise ValueError(f"generalized quaternion needs n >= 2, got {n}")
    return FlowerType(2, (4,) * n + (2 * n,))


def quaternion_graph(n: int, t: int) -> StructuralResult:
    """Power-map graph of the order-4n generalized quaternion group.

    Specialization of the flower theorem to the type (2; 4, ..., 4, 2n).
    The central tree admits a closed form in every case, including the
    t = 2 (mod 4) case that the generic rewrite rules cannot reach: there
    the 2n extra leaves attach at depth alpha = v_2(n) instead of at the
    root.
    """
    if n < 2:
        raise ValueError(f"generalized quaternion needs n >= 2, got {n}")
    _check_positive(t, "t")
    two_n = 2 * n
    seq = iterated_gcd(two_n, t)
    base = elementary_tree(seq)
    _, omega = nu_omega_split(two_n, t)
    parts = []
    if t % 2 == 1:
        for d in divisors(omega):
            if d <= 2:
                continue
            m = mult_order(t, d)
            cnt = euler_phi(d)
            assert cnt % m == 0, (n, t, d)
            parts.append((Component([base] * m), cnt // m))
        k = 2 if t % 4 == 1 else 1
        parts.append((Component([leaf()] * (2 // k)), k * n))
        parts.append((Component([base]), 2))
        ct, expr = base, _seq_term(seq)
    else:
        for d in divisors(omega):
            if d == 1:
                continue
            m = mult_order(t, d)
            cnt = euler_phi(d)
            assert cnt % m == 0, (n, t, d)
            parts.append((Component([base] * m), cnt // m))
        extra = enclose([leaf()] * two_n)
        if t % 4 == 0:
            ct = tree_sum(base, extra)
            expr = _sum_expression([(1, _seq_term(seq)), (1, f"<{two_n}x.>")])
        else:
            alpha = two_adic_valuation(n)
            ct = j_sum(base, alpha, extra)
            expr = f"{_seq_term(seq)} +_{alpha} <{two_n}x.>"
        parts.append((Component([ct]), 1))
    graph = FunctionalGraph(parts)
    assert graph.vertex_count == 4 * n
    return StructuralResult(graph, "quaternion", ct, expr, quaternion_type(n))


def semidirect_type(n: int, m: int, s: int) -> FlowerType:
    """Flower type (1; m, ..., m, n) of C_n x| C_m when the criterion holds."""
    if not SemidirectGroup.flower_condition(n, m, s):
        raise ValueError(
            f"(n={n}, m={m}, s={s}) does not satisfy the flower criterion"
        )
    return FlowerType(1, (m,) * n + (n,))


def semidirect_graph(n: int, m: int, s: int, t: int) -> StructuralResult:
    """Power-map graph of C_n x| C_m when the flower criterion holds.

    Specialization of the flower theorem to the type (1; m, ..., m, n):
    one petal of order n and n petals of order m, trivial pistil.  The
    central tree is the layered tree of n plus n root-summed copies of
    the layered tree of m.
    """
    ftype = semidirect_type(n, m, s)
    _check_positive(t, "t")
    seq_n = iterated_gcd(n, t)
    seq_m = iterated_gcd(m, t)
    tree_n = elementary_tree(seq_n)
    tree_m = elementary_tree(seq_m)
    parts = []
    for weight, base, tree in ((1, n, tree_n), (n, m, tree_m)):
        _, omega = nu_omega_split(base, t)
        for d in divisors(omega):
            if d == 1:
                continue
            r = mult_order(t, d)
            cnt = weight * euler_phi(d)
            assert cnt % r == 0, (n, m, s, t, d)
            parts.append((Component([tree] * r), cnt // r))
    ct = tree_sum(tree_n, scalar_dot(n, tree_m))
    expr = _sum_expression([(1, _seq_term(seq_n)), (n, _seq_term(seq_m))])
    parts.append((Component([ct]), 1))
    graph = FunctionalGraph(parts)
    assert graph.vertex_count == n * m
    return StructuralResult(graph, "semidirect", ct, expr, ftype)


def pgl_type(q: int) -> FlowerType:
    """Flower type of PGL(2, q) for q >= 3.

    Petals: q(q+1)/2 of order q-1, q(q-1)/2 of order q+1, and
    (q^2-1)/(p-1) of order p, all meeting in the trivial pistil.
    """
    if not (_is_prime(q) or q in _IRREDUCIBLE):
        raise ValueError(f"unsupported field order {q}")
    if q < 3:
        raise ValueError(f"pgl type needs q >= 3, got {q}")
    p = min(factorize(q))
    petals = (
        (q - 1,) * (q * (q + 1) // 2)
        + (q + 1,) * (q * (q - 1) // 2)
        + (p,) * ((q * q - 1) // (p - 1))
    )
    return FlowerType(1, petals)


def pgl_graph(q: int, t: int) -> StructuralResult:
    """Power-map graph of PGL(2, q) for q >= 4.

    Split cycles come from the order-(q-1) petals, nonsplit cycles from
    the order-(q+1) petals.  The q^2 - 1 unipotent-petal elements outside
    the pistil form bare cycles of length ord_p(t) when p does not divide
    t, and otherwise fall into the central tree.  For q = 3 the petal
    orders q - 1 = 2 and p = 3 interact with the pistil differently; use
    the generic flower builder there.
    """
    if q < 4:
        raise ValueError(
            f"the PGL closed form needs q >= 4 (got {q}); "
            "use the generic flower builder for smaller q"
        )
    ftype = pgl_type(q)
    _check_positive(t, "t")
    p = min(factorize(q))
    m1 = q * (q + 1) // 2
    m2 = q * (q - 1) // 2
    m3 = (q * q - 1) // (p - 1)
    seq1 = iterated_gcd(q - 1, t)
    seq2 = iterated_gcd(q + 1, t)
    tree1 = elementary_tree(seq1)
    tree2 = elementary_tree(seq2)
    parts = []
    for weight, base, tree in ((m1, q - 1, tree1), (m2, q + 1, tree2)):
        _, omega = nu_omega_split(base, t)
        for d in divisors(omega):
            if d == 1:
                continue
            r = mult_order(t, d)
            cnt = weight * euler_phi(d)
            assert cnt % r == 0, (q, t, d)
            parts.append((Component([tree] * r), cnt // r))
    terms = [(m1, _seq_term(seq1)), (m2, _seq_term(seq2))]
    summands = [scalar_dot(m1, tree1), scalar_dot(m2, tree2)]
    if t % p == 0:
        seq3 = iterated_gcd(p, t)
        summands.append(scalar_dot(m3, elementary_tree(seq3)))
        terms.append((m3, _seq_term(seq3)))
    else:
        r = mult_order(t, p)
        cnt = q * q - 1
        assert cnt % r == 0, (q, t)
        parts.append((Component([leaf()] * r), cnt // r))
    ct = tree_sum(*summands)
    expr = _sum_expression(terms)
    parts.append((Component([ct]), 1))
    graph = FunctionalGraph(parts)
    assert graph.vertex_count == q**3 - q
    return StructuralResult(graph, "pgl2", ct, expr, ftype)


# ---------------------------------------------------------------------------
# dispatch


def structural_graph(g_obj: FiniteGroup, t: int) -> StructuralResult | None:
    """The most specific closed form available for this group, or None.

    Order: declared-abelian groups use the abelian formula; the named
    families use their corollaries; anything else goes through the
    generic flower decomposition.  None means no theorem applies (the
    group is neither abelian-declared, cyclic, nor a flower), and the
    caller should fall back to enumeration.
    """
    _check_positive(t, "t")
    if g_obj.abelian_orders is not None:
        return abelian_graph(g_obj.abelian_orders, t)
    if isinstance(g_obj, QuaternionGroup):
        return quaternion_graph(g_obj.n, t)
    if isinstance(g_obj, PGLGroup) and g_obj.q >= 4:
        return pgl_graph(g_obj.q, t)
    if isinstance(g_obj, SemidirectGroup) and SemidirectGroup.flower_condition(
        g_obj.n, g_obj.m, g_obj.s
    ):
        return semidirect_graph(g_obj.n, g_obj.m, g_obj.s, t)
    try:
        dec = flower_decompose(g_obj)
    except ValueError:  # cyclic group: single maximal cyclic subgroup
        return cyclic_graph(g_obj.order, t)
    if dec is None:
        return None
    return flower_graph(dec.type, t)
