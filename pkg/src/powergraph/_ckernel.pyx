# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled functional-graph decomposition kernel.

Same algorithm as _pykernel.decompose, with the pointer-chasing passes in
typed loops.  Outputs are bit-identical to the pure version.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

NAME = "compiled"


def decompose(object succ_obj):
    """See _pykernel.decompose for the contract."""
    cdef cnp.ndarray[cnp.int64_t, ndim=1] succ_arr = np.ascontiguousarray(
        succ_obj, dtype=np.int64
    )
    cdef cnp.int64_t[::1] succ = succ_arr
    cdef Py_ssize_t n = succ_arr.shape[0]

    cdef cnp.ndarray[cnp.int8_t, ndim=1] state_arr = np.zeros(n, dtype=np.int8)
    cdef cnp.ndarray[cnp.int8_t, ndim=1] periodic_arr = np.zeros(n, dtype=np.int8)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] pos_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] path_arr = np.empty(n, dtype=np.int64)
    cdef cnp.int8_t[::1] state = state_arr
    cdef cnp.int8_t[::1] periodic = periodic_arr
    cdef cnp.int64_t[::1] pos = pos_arr
    cdef cnp.int64_t[::1] path = path_arr

    cycles = []
    cdef Py_ssize_t v0, plen, start, i, k
    cdef cnp.int64_t v, u

    # pass 1: iterative cycle detection
    for v0 in range(n):
        if state[v0]:
            continue
        plen = 0
        v = v0
        while state[v] == 0:
            state[v] = 1
            pos[v] = plen
            path[plen] = v
            plen += 1
            v = succ[v]
        if state[v] == 1:
            start = pos[v]
            cyc = [0] * (plen - start)
            for i in range(start, plen):
                u = path[i]
                periodic[u] = 1
                cyc[i - start] = u
            cycles.append(cyc)
        for i in range(plen):
            state[path[i]] = 2

    # pass 2: CSR children along tree edges
    cdef cnp.ndarray[cnp.int64_t, ndim=1] offsets_arr = np.zeros(n + 1, dtype=np.int64)
    cdef cnp.int64_t[::1] offsets = offsets_arr
    for u in range(n):
        if not periodic[u]:
            offsets[succ[u] + 1] += 1
    for i in range(n):
        offsets[i + 1] += offsets[i]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] fill_arr = offsets_arr[:n].copy()
    cdef cnp.ndarray[cnp.int64_t, ndim=1] child_arr = np.empty(
        offsets[n], dtype=np.int64
    )
    cdef cnp.int64_t[::1] fill = fill_arr
    cdef cnp.int64_t[::1] child_data = child_arr
    cdef cnp.int64_t p
    for u in range(n):
        if not periodic[u]:
            p = succ[u]
            child_data[fill[p]] = u
            fill[p] += 1

    # pass 3: BFS from the cycles outward
    cdef cnp.ndarray[cnp.int64_t, ndim=1] order_arr = np.empty(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] preperiod_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] root_arr = np.arange(n, dtype=np.int64)
    cdef cnp.int64_t[::1] order = order_arr
    cdef cnp.int64_t[::1] preperiod = preperiod_arr
    cdef cnp.int64_t[::1] root = root_arr
    cdef Py_ssize_t tail = 0, head = 0
    for cyc in cycles:
        for x in cyc:
            order[tail] = x
            tail += 1
    cdef cnp.int64_t pv, rv
    while head < tail:
        v = order[head]
        head += 1
        pv = preperiod[v] + 1
        rv = root[v]
        for k in range(offsets[v], offsets[v + 1]):
            u = child_data[k]
            preperiod[u] = pv
            root[u] = rv
            order[tail] = u
            tail += 1

    # pass 4: canonical shape ids bottom-up
    cdef cnp.ndarray[cnp.int64_t, ndim=1] tid_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] tid = tid_arr
    intern = {(): 0}
    shapes = [()]
    cdef Py_ssize_t a, b, idx
    for idx in range(n - 1, -1, -1):
        v = order[idx]
        a = offsets[v]
        b = offsets[v + 1]
        if a == b:
            continue
        if b - a == 1:
            key = (tid[child_data[a]],)
        else:
            key = tuple(sorted([tid[child_data[k]] for k in range(a, b)]))
        cached = intern.get(key)
        if cached is None:
            cached = len(shapes)
            shapes.append(key)
            intern[key] = cached
        tid[v] = cached

    return tid_arr, shapes, cycles, preperiod_arr, root_arr
