"""Functional graphs (out-degree-1 digraphs) up to isomorphism.

A component is a directed cycle with a rooted tree hanging at each cycle
vertex (tree edges point toward the root).  A functional graph is a
multiset of components.  Equality, hashing and canonical forms are all
isomorphism-invariant: trees compare by canonical code and the trees along
a cycle compare up to rotation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence as TSequence

import numpy as np

from ._kernel import BACKEND, decompose  # noqa: F401  (BACKEND re-exported)
from .tree import RootedTree, from_code, leaf

#: hard cap for explicit enumeration (from_map, tensor, successor maps)
MAX_VERTICES = 1 << 24


def least_rotation(seq: TSequence) -> int:
    """Index of the lexicographically least rotation (Booth's algorithm).

    Works on any sequence of mutually comparable items in O(len) time.
    """
    n = len(seq)
    if n <= 1:
        return 0
    s = list(seq) + list(seq)
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n


class Component:
    """One connected component: a cycle of length m with m hanging trees.

    cycle_trees lists the trees in successor order around the cycle; two
    components are equal iff one tree list is a rotation of the other
    (after replacing trees by canonical codes).
    """

    __slots__ = ("cycle_trees", "vertex_count", "_key")

    cycle_trees: tuple[RootedTree, ...]
    vertex_count: int

    def __init__(self, cycle_trees: Iterable[RootedTree]):
        ct = tuple(cycle_trees)
        if not ct:
            raise ValueError("a component needs at least one cycle vertex")
        for t in ct:
            if not isinstance(t, RootedTree):
                raise ValueError(f"cycle entry is not a RootedTree: {t!r}")
        object.__setattr__(self, "cycle_trees", ct)
        object.__setattr__(self, "vertex_count", sum(t.node_count for t in ct))
        object.__setattr__(self, "_key", None)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Component is immutable")

    @property
    def cycle_length(self) -> int:
        return len(self.cycle_trees)

    def is_regular(self) -> bool:
        """True iff all hanging trees of the component are isomorphic."""
        first = self.cycle_trees[0].canonical_code()
        return all(t.canonical_code() == first for t in self.cycle_trees[1:])

    def canonical_key(self) -> tuple[int, tuple[str, ...]]:
        """(cycle length, tree codes rotated to the least rotation)."""
        if self._key is None:
            codes = [t.canonical_code() for t in self.cycle_trees]
            if all(c == codes[0] for c in codes):
                rot = 0
            else:
                rot = least_rotation(codes)
            key = (len(codes), tuple(codes[rot:] + codes[:rot]))
            object.__setattr__(self, "_key", key)
        return self._key

    def canonical_trees(self) -> tuple[RootedTree, ...]:
        """cycle_trees rotated into the canonical rotation."""
        codes = [t.canonical_code() for t in self.cycle_trees]
        if all(c == codes[0] for c in codes):
            return self.cycle_trees
        rot = least_rotation(codes)
        return self.cycle_trees[rot:] + self.cycle_trees[:rot]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Component):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        return hash(self.canonical_key())

    def __repr__(self) -> str:
        return f"Component(cycle={self.cycle_length}, vertices={self.vertex_count})"


class FunctionalGraph:
    """A multiset of components, normalized on construction.

    Stored as (component, multiplicity) pairs merged by canonical key and
    sorted, so structurally equal graphs are representation-identical.
    """

    __slots__ = ("parts", "vertex_count", "_form")

    parts: tuple[tuple[Component, int], ...]
    vertex_count: int

    def __init__(self, parts: Iterable[tuple[Component, int]] = ()):
        merged: dict[tuple, list] = {}
        for comp, mult in parts:
            if not isinstance(comp, Component):
                raise ValueError(f"not a Component: {comp!r}")
            if mult < 0:
                raise ValueError(f"negative multiplicity: {mult}")
            if mult == 0:
                continue
            key = comp.canonical_key()
            if key in merged:
                merged[key][1] += mult
            else:
                merged[key] = [comp, mult]
        ordered = tuple(
            (comp, mult)
            for _, (comp, mult) in sorted(merged.items(), key=lambda kv: kv[0])
        )
        object.__setattr__(self, "parts", ordered)
        object.__setattr__(
            self, "vertex_count", sum(c.vertex_count * m for c, m in ordered)
        )
        object.__setattr__(self, "_form", None)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("FunctionalGraph is immutable")

    def canonical_form(self) -> tuple:
        if self._form is None:
            form = tuple((c.canonical_key(), m) for c, m in self.parts)
            object.__setattr__(self, "_form", form)
        return self._form

    @property
    def component_count(self) -> int:
        return sum(m for _, m in self.parts)

    @property
    def periodic_count(self) -> int:
        """Number of periodic vertices (= total cycle length)."""
        return sum(c.cycle_length * m for c, m in self.parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FunctionalGraph):
            return NotImplemented
        return self.canonical_form() == other.canonical_form()

    def __hash__(self) -> int:
        return hash(self.canonical_form())

    def __repr__(self) -> str:
        return (
            f"FunctionalGraph(components={self.component_count}, "
            f"vertices={self.vertex_count})"
        )


def is_isomorphic(g1: FunctionalGraph, g2: FunctionalGraph) -> bool:
    """True iff the two graphs are isomorphic as digraphs."""
    return g1 == g2


def cyc(m: int, tree: RootedTree | None = None) -> FunctionalGraph:
    """A single cycle of length m with the same tree at every cycle vertex.

    cyc(m) is the bare m-cycle; cyc(1, T) is the tree T with a loop at its
    root.
    """
    if m < 1:
        raise ValueError(f"cycle length must be >= 1, got {m}")
    t = leaf() if tree is None else tree
    return FunctionalGraph([(Component([t] * m), 1)])


def disjoint_union(*graphs: FunctionalGraph) -> FunctionalGraph:
    parts: list[tuple[Component, int]] = []
    for g in graphs:
        parts.extend(g.parts)
    return FunctionalGraph(parts)


def replicate(k: int, g: FunctionalGraph) -> FunctionalGraph:
    """k disjoint copies of g (k = 0 gives the empty graph)."""
    if k < 0:
        raise ValueError(f"replication count must be >= 0, got {k}")
    return FunctionalGraph([(c, m * k) for c, m in g.parts])


def hanging_tree_census(g: FunctionalGraph) -> Counter[str]:
    """Multiset of hanging-tree canonical codes over all periodic vertices."""
    census: Counter[str] = Counter()
    for comp, mult in g.parts:
        for t in comp.cycle_trees:
            census[t.canonical_code()] += mult
    return census


# ---------------------------------------------------------------------------
# explicit maps


@dataclass
class MapDecomposition:
    """Raw decomposition of an explicit map i -> succ[i] (kernel output).

    Holds per-vertex data so callers can extract single hanging trees or
    orbit statistics without rebuilding the whole graph value.
    """

    succ: np.ndarray
    tid: np.ndarray
    shapes: list[tuple[int, ...]]
    cycles: list[list[int]]
    preperiod: np.ndarray
    root: np.ndarray
    _built: dict[int, RootedTree] = field(default_factory=dict, repr=False)
    _graph: FunctionalGraph | None = field(default=None, repr=False)
    _period: dict[int, int] = field(default_factory=dict, repr=False)

    @property
    def size(self) -> int:
        return len(self.succ)

    def tree_of_shape(self, shape_id: int) -> RootedTree:
        """Materialize the RootedTree of an interned shape id."""
        built = self._built
        if not built:
            built[0] = leaf()
        if shape_id not in built:
            shapes = self.shapes
            stack = [shape_id]
            while stack:
                j = stack[-1]
                if j in built:
                    stack.pop()
                    continue
                missing = [c for c in shapes[j] if c not in built]
                if missing:
                    stack.extend(missing)
                else:
                    built[j] = RootedTree(built[c] for c in shapes[j])
                    stack.pop()
        return built[shape_id]

    def tree_at(self, v: int) -> RootedTree:
        """The hanging subtree rooted at vertex v (v itself is the root)."""
        return self.tree_of_shape(int(self.tid[v]))

    def graph(self) -> FunctionalGraph:
        if self._graph is None:
            tid = self.tid
            parts: dict[tuple, list] = {}
            for cycle in self.cycles:
                comp = Component([self.tree_of_shape(int(tid[v])) for v in cycle])
                key = comp.canonical_key()
                if key in parts:
                    parts[key][1] += 1
                else:
                    parts[key] = [comp, 1]
            self._graph = FunctionalGraph(
                (comp, mult) for comp, mult in parts.values()
            )
        return self._graph

    def orbit(self, v: int) -> tuple[int, int]:
        """(preperiod, period) of vertex v under iteration of the map."""
        if not self._period:
            for cycle in self.cycles:
                m = len(cycle)
                for u in cycle:
                    self._period[u] = m
        return int(self.preperiod[v]), self._period[int(self.root[v])]


def _successor_array(n: int, f: Callable[[int], int] | TSequence | np.ndarray):
    if n < 0:
        raise ValueError(f"map size must be >= 0, got {n}")
    if n > MAX_VERTICES:
        raise ValueError(
            f"map size {n} exceeds the enumeration cap of {MAX_VERTICES}"
        )
    if callable(f):
        succ = np.fromiter((f(i) for i in range(n)), dtype=np.int64, count=n)
    else:
        succ = np.ascontiguousarray(f, dtype=np.int64)
        if succ.shape != (n,):
            raise ValueError(f"successor table has shape {succ.shape}, wanted ({n},)")
    if len(succ) and (succ.min() < 0 or succ.max() >= n):
        raise ValueError("successor values must lie in [0, n)")
    return succ


def decompose_map(
    n: int, f: Callable[[int], int] | TSequence | np.ndarray
) -> MapDecomposition:
    """Decompose the functional graph of f on {0, ..., n-1}.

    f may be a callable or an explicit successor table.  Cycle detection is
    iterative (no recursion) and runs through the selected kernel backend.
    """
    succ = _successor_array(n, f)
    tid, shapes, cycles, preperiod, root = decompose(succ)
    return MapDecomposition(succ, tid, shapes, cycles, preperiod, root)


def from_map(n: int, f: Callable[[int], int] | TSequence | np.ndarray) -> FunctionalGraph:
    """The isomorphism type of the functional graph of f on {0, ..., n-1}."""
    return decompose_map(n, f).graph()


def to_successor_map(g: FunctionalGraph) -> np.ndarray:
    """An explicit successor table whose functional graph is g.

    Layout is deterministic: components in canonical order, each cycle
    vertex followed by its tree in canonical child order.
    """
    n = g.vertex_count
    if n > MAX_VERTICES:
        raise ValueError(f"graph has {n} vertices, above the cap {MAX_VERTICES}")
    succ = np.empty(n, dtype=np.int64)
    idx = 0
    for comp, mult in g.parts:
        for _ in range(mult):
            roots = []
            for t in comp.cycle_trees:
                rid = idx
                idx += 1
                roots.append(rid)
                stack = [(t, rid)]
                while stack:
                    node, nid = stack.pop()
                    for c in sorted(node.children, key=RootedTree.canonical_code):
                        succ[idx] = nid
                        stack.append((c, idx))
                        idx += 1
            m = len(roots)
            for i, rid in enumerate(roots):
                succ[rid] = roots[(i + 1) % m]
    assert idx == n
    return succ


def tensor(g1: FunctionalGraph, g2: FunctionalGraph) -> FunctionalGraph:
    """Categorical product: vertex pairs, edge (u, v) -> (f(u), g(v)).

    Computed honestly on the explicit product map, then decomposed.
    """
    s1 = to_successor_map(g1)
    s2 = to_successor_map(g2)
    n1, n2 = len(s1), len(s2)
    if n1 * n2 > MAX_VERTICES:
        raise ValueError(
            f"product has {n1 * n2} vertices, above the cap {MAX_VERTICES}"
        )
    succ = (s1[:, None] * n2 + s2[None, :]).ravel()
    return from_map(n1 * n2, succ)


# ---------------------------------------------------------------------------
# serialization


def summary(g: FunctionalGraph) -> dict:
    """JSON-ready structural summary.

    One record per component isomorphism class.  For a component whose
    hanging trees are all isomorphic the tree fields are scalars; otherwise
    they are lists in canonical rotation order.
    """
    records = []
    for comp, mult in g.parts:
        if comp.is_regular():
            t = comp.cycle_trees[0]
            records.append(
                {
                    "multiplicity": mult,
                    "cycle_length": comp.cycle_length,
                    "tree_code": t.canonical_code(),
                    "tree_node_count": t.node_count,
                    "tree_depth": t.depth,
                }
            )
        else:
            trees = comp.canonical_trees()
            records.append(
                {
                    "multiplicity": mult,
                    "cycle_length": comp.cycle_length,
                    "tree_code": [t.canonical_code() for t in trees],
                    "tree_node_count": [t.node_count for t in trees],
                    "tree_depth": [t.depth for t in trees],
                }
            )
    return {"vertex_count": g.vertex_count, "components": records}


def graph_from_summary(data: dict) -> FunctionalGraph:
    """Rebuild a FunctionalGraph from summary() output (inverse up to iso)."""
    parts = []
    for rec in data["components"]:
        m = rec["cycle_length"]
        code = rec["tree_code"]
        if isinstance(code, str):
            trees = [from_code(code)] * m
        else:
            if len(code) != m:
                raise ValueError("tree_code list length must equal cycle_length")
            trees = [from_code(c) for c in code]
        parts.append((Component(trees), rec["multiplicity"]))
    g = FunctionalGraph(parts)
    if "vertex_count" in data and data["vertex_count"] != g.vertex_count:
        raise ValueError(
            f"vertex_count mismatch: recorded {data['vertex_count']}, "
            f"rebuilt {g.vertex_count}"
        )
    return g


def to_dot(g: FunctionalGraph, name: str = "G") -> str:
    """DOT digraph of an explicit representative of g (stable ordering)."""
    succ = to_successor_map(g)
    lines = [f"digraph {name} {{"]
    for v, w in enumerate(succ):
        lines.append(f"  v{v} -> v{int(w)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
