"""Rooted trees up to isomorphism, and the tree algebra of power maps.

Trees are immutable.  Children are stored in construction order but carry
no meaning as an ordered list: equality, hashing and the canonical code are
all isomorphism-invariant.  Subtree objects are shared freely (a scalar
multiple k.T holds k references to the same child), so node_count and depth
are cached per object and code computation walks the shared DAG once.

All traversals are iterative; deep trees never hit the recursion limit.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable

from .arith import Sequence

Forest = tuple["RootedTree", ...]


class RootedTree:
    """A finite rooted tree, compared and hashed up to isomorphism."""

    __slots__ = ("children", "node_count", "depth", "_code")

    children: Forest
    node_count: int
    depth: int

    def __init__(self, children: Iterable["RootedTree"] = ()):
        ch = tuple(children)
        for c in ch:
            if not isinstance(c, RootedTree):
                raise ValueError(f"child is not a RootedTree: {c!r}")
        object.__setattr__(self, "children", ch)
        object.__setattr__(self, "node_count", 1 + sum(c.node_count for c in ch))
        object.__setattr__(self, "depth", 1 + max(c.depth for c in ch) if ch else 0)
        object.__setattr__(self, "_code", None)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RootedTree is immutable")

    def canonical_code(self) -> str:
        """Balanced-paren code; two trees are isomorphic iff codes are equal.

        A node's code is "(" + the sorted concatenation of its child codes
        + ")".  Computed lazily with an explicit stack and cached.
        """
        if self._code is None:
            stack = [self]
            while stack:
                node = stack[-1]
                if node._code is not None:
                    stack.pop()
                    continue
                pending = [c for c in node.children if c._code is None]
                if pending:
                    stack.extend(pending)
                else:
                    code = "(" + "".join(sorted(c._code for c in node.children)) + ")"
                    object.__setattr__(node, "_code", code)
                    stack.pop()
        return self._code

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootedTree):
            return NotImplemented
        if self is other:
            return True
        if self.node_count != other.node_count or self.depth != other.depth:
            return False
        return self.canonical_code() == other.canonical_code()

    def __hash__(self) -> int:
        return hash(self.canonical_code())

    def __repr__(self) -> str:
        return f"RootedTree(nodes={self.node_count}, depth={self.depth})"


_LEAF = RootedTree(())


def leaf() -> RootedTree:
    """The single-vertex tree."""
    return _LEAF


def enclose(forest: Iterable[RootedTree]) -> RootedTree:
    """Hang every tree of the forest under a fresh common root.

    enclose of the empty forest is the single-vertex tree.
    """
    return RootedTree(forest)


def tree_sum(*trees: RootedTree) -> RootedTree:
    """Identify the roots of the given trees (their child forests merge).

    The single-vertex tree is the neutral element; the empty sum is a leaf.
    """
    children: list[RootedTree] = []
    for t in trees:
        children.extend(t.children)
    return RootedTree(children)


def scalar_dot(k: int, t: RootedTree) -> RootedTree:
    """The sum of k copies of t (so k.T has k*(|T| - 1) + 1 nodes).

    Distinct from k disjoint copies: the roots are identified.
    """
    if k < 1:
        raise ValueError(f"scalar multiplier must be >= 1, got {k}")
    if k == 1:
        return t
    return RootedTree(t.children * k)


def elementary_tree(v: Sequence | Iterable[int]) -> RootedTree:
    """The layered tree of a non-increasing sequence v = (nu_1, ..., nu_d).

    Built bottom-up: L^0 is a leaf and, for k < d, L^k hangs nu_k copies of
    L^{k-1} plus (nu_i - nu_{i+1}) copies of L^{i-1} for i < k under a root;
    the full tree replaces the nu_d multiplier with nu_d - 1.  It has
    nu_1 * ... * nu_d nodes, depth d, and is homogeneous.
    """
    if not isinstance(v, Sequence):
        v = Sequence(v)
    if v.is_trivial():
        return leaf()
    nu = v.terms
    d = len(nu)
    layers = [leaf()]
    for k in range(1, d):
        children = [layers[k - 1]] * nu[k - 1]
        for i in range(1, k):
            children.extend([layers[i - 1]] * (nu[i - 1] - nu[i]))
        layers.append(RootedTree(children))
    children = [layers[d - 1]] * (nu[d - 1] - 1)
    for i in range(1, d):
        children.extend([layers[i - 1]] * (nu[i - 1] - nu[i]))
    return RootedTree(children)


def homogeneous_layers(
    t: RootedTree,
) -> dict[int, tuple[RootedTree, int]] | None:
    """Group the root's children by depth as {depth: (representative, count)}.

    Returns None when two children of equal depth are not isomorphic, i.e.
    when t is not homogeneous.  The leaf is homogeneous with no layers.
    """
    layers: dict[int, tuple[RootedTree, int]] = {}
    for c in t.children:
        entry = layers.get(c.depth)
        if entry is None:
            layers[c.depth] = (c, 1)
        else:
            rep, count = entry
            if rep is not c and rep != c:
                return None
            layers[c.depth] = (rep, count + 1)
    return layers


def is_homogeneous(t: RootedTree) -> bool:
    """True iff the root's child subtrees of equal depth are pairwise isomorphic."""
    return homogeneous_layers(t) is not None


def j_sum(t: RootedTree, j: int, s: RootedTree) -> RootedTree:
    """Replace one depth-j child C of the homogeneous tree t with C + s.

    Defined only for homogeneous t with at least one depth-j child;
    anything else raises ValueError.
    """
    layers = homogeneous_layers(t)
    if layers is None:
        raise ValueError("j_sum requires a homogeneous tree")
    if j not in layers:
        raise ValueError(
            f"tree has no depth-{j} child (available depths: {sorted(layers)})"
        )
    children = list(t.children)
    for i, c in enumerate(children):
        if c.depth == j:
            children[i] = tree_sum(c, s)
            break
    return RootedTree(children)


# ---------------------------------------------------------------------------
# serialization


def to_nested(t: RootedTree) -> list:
    """Nested-list form: a node is the list of its children, in canonical order."""
    t.canonical_code()
    out: list = []
    stack: list[tuple[RootedTree, list]] = [(t, out)]
    while stack:
        node, acc = stack.pop()
        for c in sorted(node.children, key=RootedTree.canonical_code):
            sub: list = []
            acc.append(sub)
            stack.append((c, sub))
    return out


def from_nested(obj: Iterable) -> RootedTree:
    """Inverse of to_nested (accepts any nesting of lists/tuples)."""
    # iterative two-pass: explode to a parent-indexed arena, then build leaves-up
    nodes: list[list[int]] = [[]]
    stack: list[tuple[Iterable, int]] = [(obj, 0)]
    while stack:
        spec, idx = stack.pop()
        for child_spec in spec:
            if not isinstance(child_spec, (list, tuple)):
                raise ValueError(f"nested form must contain only lists: {child_spec!r}")
            nodes.append([])
            nodes[idx].append(len(nodes) - 1)
            stack.append((child_spec, len(nodes) - 1))
    built: list[RootedTree | None] = [None] * len(nodes)
    for idx in range(len(nodes) - 1, -1, -1):
        built[idx] = RootedTree(built[i] for i in nodes[idx])
    return built[0]


def from_code(code: str) -> RootedTree:
    """Rebuild a tree from its balanced-paren canonical code."""
    if not code or code[0] != "(":
        raise ValueError(f"invalid tree code: {code!r}")
    stack: list[list[RootedTree]] = []
    for i, ch in enumerate(code):
        if ch == "(":
            stack.append([])
        elif ch == ")":
            children = stack.pop()
            node = RootedTree(children)
            if not stack:
                if i != len(code) - 1:
                    raise ValueError(f"trailing data in tree code: {code!r}")
                return node
            stack[-1].append(node)
        else:
            raise ValueError(f"invalid character {ch!r} in tree code")
    raise ValueError(f"unbalanced tree code: {code!r}")


def to_dot(t: RootedTree, name: str = "tree") -> str:
    """DOT digraph with edges oriented from child to parent (leaf to root)."""
    lines = [f"digraph {name} {{"]
    counter = 0
    stack: list[tuple[RootedTree, int]] = [(t, 0)]
    lines.append("  n0;")
    while stack:
        node, idx = stack.pop()
        for c in sorted(node.children, key=RootedTree.canonical_code):
            counter += 1
            lines.append(f"  n{counter} -> n{idx};")
            stack.append((c, counter))
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_tree(t: RootedTree) -> str:
    """Human-oriented ASCII form.

    A leaf is ".", a layered tree prints as T(nu_1,...,nu_d), and anything
    else falls back to <k x subtree, ...> groups under the root.
    """
    seq = as_elementary_sequence(t)
    if seq is not None:
        if seq.is_trivial():
            return "."
        return "T(" + ",".join(str(x) for x in seq.terms) + ")"
    groups = Counter(c.canonical_code() for c in t.children)
    rep = {c.canonical_code(): c for c in t.children}
    parts = []
    for code in sorted(groups, key=lambda s: (rep[s].depth, s)):
        k = groups[code]
        inner = render_tree(rep[code])
        parts.append(f"{k}x{inner}" if k > 1 else inner)
    return "<" + ", ".join(parts) + ">"


def as_elementary_sequence(t: RootedTree) -> Sequence | None:
    """Recover v with elementary_tree(v) == t, or None.

    The candidate is read off the layer multiplicities (the deepest layer
    count is nu_d - 1, and each difference nu_i - nu_{i+1} is the count at
    depth i - 1) and then verified by rebuilding.
    """
    if t.node_count == 1:
        return Sequence((1,))
    layers = homogeneous_layers(t)
    if layers is None:
        return None
    d = t.depth
    counts = {depth: count for depth, (_, count) in layers.items()}
    nu = [0] * (d + 1)  # nu[i] for 1-based i, nu[d+1] treated as 1
    nu[d] = counts.get(d - 1, 0) + 1
    for i in range(d - 1, 0, -1):
        nu[i] = counts.get(i - 1, 0) + nu[i + 1]
    terms = nu[1:]
    if any(a < b for a, b in zip(terms, terms[1:])) or terms[-1] < 1:
        return None
    candidate = Sequence(terms)
    if elementary_tree(candidate) == t:
        return candidate
    return None
