"""Brute-force enumeration of power-map graphs, and structural-vs-brute checks.

This module never consults the structure theorems for its own answers:
successor tables come from batched square-and-multiply over the group
law, and graphs from direct decomposition of those tables.  verify()
runs both sides and compares up to isomorphism.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .arith import _check_positive
from .fgraph import (
    MAX_VERTICES,
    FunctionalGraph,
    MapDecomposition,
    decompose_map,
    hanging_tree_census,
    summary,
)
from .groups import FiniteGroup, parse_group, power
from .structural import StructuralResult, structural_graph


def successor_table(g_obj: FiniteGroup, t: int) -> np.ndarray:
    """The array succ with succ[g] = g^t, for all elements at once.

    Square-and-multiply on whole index arrays; the exponent is used as
    given, with no reduction by the group order or element orders.
    """
    _check_positive(t, "t")
    n = g_obj.order
    if n > MAX_VERTICES:
        raise ValueError(f"group order {n} exceeds the enumeration cap")
    base = np.arange(n, dtype=np.int64)
    acc = None
    while t:
        if t & 1:
            acc = base if acc is None else g_obj.mul_array(acc, base)
        t >>= 1
        if t:
            base = g_obj.mul_array(base, base)
    return acc


def brute_force_details(g_obj: FiniteGroup, t: int) -> MapDecomposition:
    """Full per-vertex decomposition of the power map."""
    return decompose_map(g_obj.order, successor_table(g_obj, t))


def brute_force_graph(g_obj: FiniteGroup, t: int) -> FunctionalGraph:
    """The graph of g -> g^t by enumeration (the reference answer)."""
    return brute_force_details(g_obj, t).graph()


def tree_census(g_obj: FiniteGroup, t: int) -> Counter[str]:
    """Multiset of hanging-tree codes over the periodic elements."""
    return hanging_tree_census(brute_force_graph(g_obj, t))


@dataclass(frozen=True)
class OrbitInfo:
    element: int
    label: str
    preperiod: int
    period: int


def orbit_info(g_obj: FiniteGroup, t: int, g: int) -> OrbitInfo:
    """Tail length and cycle length of g, g^t, (g^t)^t, ...

    Walks the single orbit with repeated powering; independent of the
    kernel decomposition, so it doubles as a cross-check in tests.
    """
    _check_positive(t, "t")
    g_obj.check_element(g)
    seen: dict[int, int] = {}
    x = g
    i = 0
    while x not in seen:
        seen[x] = i
        x = power(g_obj, x, t)
        i += 1
    pre = seen[x]
    return OrbitInfo(g, g_obj.label(g), pre, i - pre)


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one structural-vs-brute comparison."""

    group: str
    order: int
    t: int
    verdict: str  # "match", "mismatch", or "no-theorem"
    method: str | None
    vertex_count: int
    component_count: int
    periodic_count: int
    distinct_trees: int
    central_expression: str | None
    flower_type: str | None
    structural_seconds: float
    brute_seconds: float
    structural_summary: dict | None
    brute_summary: dict

    @property
    def ok(self) -> bool:
        return self.verdict == "match"

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "order": self.order,
            "t": self.t,
            "verdict": self.verdict,
            "method": self.method,
            "vertex_count": self.vertex_count,
            "component_count": self.component_count,
            "periodic_count": self.periodic_count,
            "distinct_trees": self.distinct_trees,
            "central_expression": self.central_expression,
            "flower_type": self.flower_type,
            "structural_seconds": self.structural_seconds,
            "brute_seconds": self.brute_seconds,
            "structural_summary": self.structural_summary,
            "brute_summary": self.brute_summary,
        }


def verify(group: FiniteGroup | str, t: int) -> VerifyReport:
    """Compute the graph by theorem and by enumeration and compare.

    Accepts a group object or a spec string.  A "no-theorem" verdict
    means no structural method covers the group; the brute-force side is
    still reported.
    """
    g_obj = parse_group(group) if isinstance(group, str) else group
    start = time.perf_counter()
    sres: StructuralResult | None = structural_graph(g_obj, t)
    mid = time.perf_counter()
    brute = brute_force_graph(g_obj, t)
    end = time.perf_counter()
    if sres is None:
        verdict = "no-theorem"
    elif sres.graph == brute:
        verdict = "match"
    else:
        verdict = "mismatch"
    census = hanging_tree_census(brute)
    return VerifyReport(
        group=g_obj.name,
        order=g_obj.order,
        t=t,
        verdict=verdict,
        method=sres.method if sres else None,
        vertex_count=brute.vertex_count,
        component_count=brute.component_count,
        periodic_count=brute.periodic_count,
        distinct_trees=len(set(census)),
        central_expression=sres.central_expression if sres else None,
        flower_type=str(sres.flower_type)
        if sres and sres.flower_type
        else None,
        structural_seconds=mid - start,
        brute_seconds=end - mid,
        structural_summary=summary(sres.graph) if sres else None,
        brute_summary=summary(brute),
    )
