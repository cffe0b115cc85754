"""Pure-Python functional-graph decomposition kernel.

Fallback for the compiled extension in _ckernel.pyx; both implement the
same algorithm step for step so their outputs are bit-identical and the
parity tests can compare them directly.
"""

from __future__ import annotations

import numpy as np

NAME = "pure"


def decompose(succ):
    """Decompose the functional graph of i -> succ[i] on {0, ..., n-1}.

    Returns (tid, shapes, cycles, preperiod, root) where

    - tid[v] is the shape id of the hanging subtree rooted at v (tree edges
      only; for a periodic v this is its full hanging tree),
    - shapes[i] is the sorted tuple of child shape ids of shape i (so two
      vertices have isomorphic hanging subtrees iff their tids are equal;
      shapes[0] = () is the leaf, and children ids always precede the
      parent id, so the table can be materialized iteratively),
    - cycles is the list of cycles, each as a vertex list in successor
      order, in discovery order,
    - preperiod[v] is the number of steps from v to its first periodic
      vertex, root[v].
    """
    succ = np.ascontiguousarray(succ, dtype=np.int64).tolist()
    n = len(succ)

    # pass 1: iterative cycle detection (colors: 0 new, 1 on path, 2 done)
    state = bytearray(n)
    pos = [0] * n
    periodic = bytearray(n)
    cycles: list[list[int]] = []
    for v0 in range(n):
        if state[v0]:
            continue
        path: list[int] = []
        v = v0
        while state[v] == 0:
            state[v] = 1
            pos[v] = len(path)
            path.append(v)
            v = succ[v]
        if state[v] == 1:
            cyc = path[pos[v] :]
            for u in cyc:
                periodic[u] = 1
            cycles.append(cyc)
        for u in path:
            state[u] = 2

    # pass 2: children of each vertex along tree edges (CSR layout)
    counts = [0] * n
    for u in range(n):
        if not periodic[u]:
            counts[succ[u]] += 1
    offsets = [0] * (n + 1)
    for i in range(n):
        offsets[i + 1] = offsets[i] + counts[i]
    fill = offsets[:n]
    child_data = [0] * offsets[n]
    for u in range(n):
        if not periodic[u]:
            p = succ[u]
            child_data[fill[p]] = u
            fill[p] += 1

    # pass 3: BFS from the cycles outward (parents before children)
    order: list[int] = []
    for cyc in cycles:
        order.extend(cyc)
    preperiod = [0] * n
    root = list(range(n))
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        pv = preperiod[v] + 1
        rv = root[v]
        for k in range(offsets[v], offsets[v + 1]):
            u = child_data[k]
            preperiod[u] = pv
            root[u] = rv
            order.append(u)

    # pass 4: canonical shape ids bottom-up (reverse BFS order)
    intern: dict[tuple[int, ...], int] = {(): 0}
    shapes: list[tuple[int, ...]] = [()]
    tid = [0] * n
    for idx in range(n - 1, -1, -1):
        v = order[idx]
        a = offsets[v]
        b = offsets[v + 1]
        if a == b:
            continue
        if b - a == 1:
            key = (tid[child_data[a]],)
        else:
            key = tuple(sorted(tid[child_data[k]] for k in range(a, b)))
        i = intern.get(key)
        if i is None:
            i = len(shapes)
            shapes.append(key)
            intern[key] = i
        tid[v] = i

    return (
        np.asarray(tid, dtype=np.int64),
        shapes,
        cycles,
        np.asarray(preperiod, dtype=np.int64),
        np.asarray(root, dtype=np.int64),
    )
