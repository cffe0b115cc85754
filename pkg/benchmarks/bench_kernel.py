"""Compare the compiled and pure decomposition kernels on large maps.

Run as: python3 benchmarks/bench_kernel.py
"""

from __future__ import annotations

import time

import numpy as np

from powergraph import _pykernel
from powergraph.groups import parse_group
from powergraph.oracle import successor_table

try:
    from powergraph import _ckernel
except ImportError:
    _ckernel = None


def _workloads():
    rng = np.random.default_rng(7)
    n = 200_000
    yield "random map, n=200k", rng.integers(0, n, size=n, dtype=np.int64)
    n = 500_000
    yield "power map x -> 3x on C_500000", (np.arange(n, dtype=np.int64) * 3) % n
    g = parse_group("pgl2:9")
    yield "squaring on PGL(2,9), n=720", successor_table(g, 2)


def _time(fn, *args, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> None:
    header = f"{'workload':<34} {'pure':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, succ in _workloads():
        t_pure, r_pure = _time(_pykernel.decompose, succ)
        if _ckernel is None:
            print(f"{name:<34} {1000 * t_pure:>8.1f}ms {'n/a':>10} {'':>8}")
            continue
        t_c, r_c = _time(_ckernel.decompose, succ)
        assert np.array_equal(r_pure[0], r_c[0]), name  # same shape ids
        print(
            f"{name:<34} {1000 * t_pure:>8.1f}ms {1000 * t_c:>8.1f}ms "
            f"{t_pure / t_c:>7.1f}x"
        )


if __name__ == "__main__":
    main()
