"""The compiled and pure decomposition kernels must agree bit for bit."""

from __future__ import annotations

import numpy as np
import pytest

from powergraph import _pykernel

_ckernel = pytest.importorskip(
    "powergraph._ckernel", reason="compiled kernel not built"
)


def _tables():
    rng = np.random.default_rng(20240817)
    yield np.zeros(1, dtype=np.int64)  # single fixed point
    yield np.arange(7, dtype=np.int64)  # identity
    yield np.full(9, 4, dtype=np.int64)  # constant map
    yield (np.arange(12, dtype=np.int64) + 1) % 12  # one big cycle
    yield np.array([1, 2, 0, 0, 0, 3, 3, 5], dtype=np.int64)  # cycle with bushes
    for n in (2, 3, 17, 100, 1000, 20_000):
        yield rng.integers(0, n, size=n, dtype=np.int64)
    # power maps: the actual workload shape
    for n, t in ((24, 10), (91, 14), (360, 6)):
        yield (np.arange(n, dtype=np.int64) * t) % n


def _normalize(result):
    tid, shapes, cycles, preperiod, root = result
    return (
        np.asarray(tid).tolist(),
        [tuple(s) for s in shapes],
        [list(c) for c in cycles],
        np.asarray(preperiod).tolist(),
        np.asarray(root).tolist(),
    )


@pytest.mark.parametrize("idx,succ", list(enumerate(_tables())))
def test_backends_agree(idx, succ):
    assert _normalize(_pykernel.decompose(succ)) == _normalize(
        _ckernel.decompose(succ)
    )


def test_backend_banner():
    from powergraph._kernel import BACKEND

    assert BACKEND in ("compiled", "pure")


def test_empty_map():
    tid, shapes, cycles, preperiod, root = _pykernel.decompose(
        np.zeros(0, dtype=np.int64)
    )
    assert len(tid) == 0 and cycles == [] and shapes == [()]
    c_tid, c_shapes, c_cycles, _, _ = _ckernel.decompose(
        np.zeros(0, dtype=np.int64)
    )
    assert len(c_tid) == 0 and list(c_cycles) == [] and [tuple(s) for s in c_shapes] == [()]
