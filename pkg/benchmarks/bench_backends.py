"""Benchmark the numba kernels against the pure-numpy fallback.

Two workloads dominated by the hot kernels:
  * pi0 grid: enumerate + classify directed paths between a 3x3 grid of
    sources and targets in the four-square complex at denominator 7;
  * category sweep: build the order pair category of the same complex and
    run the exhaustive associativity check.

Run: python3 benchmarks/bench_backends.py [--repeat N]
"""

from __future__ import annotations

import argparse
import itertools
import time

import dipair as dp
from dipair import _backend
from dipair import ordercomp as oc
from dipair import precubical as pc


def pi0_grid():
    d = dp.builtin("dubut")  # fresh complex: defeats the per-complex caches
    a, c = d.names["A"], d.names["C"]
    total = 0
    for x1, x2, y1, y2 in itertools.product((2, 4, 6), repeat=4):
        p = pc.GridPoint(a, 7, (x1, x2))
        q = pc.GridPoint(c, 7, (y1, y2))
        total += dp.trace_pi0(d, p, q).count
    assert total == 108  # 9 empty, 36 single-class, 36 two-class pairs
    return total


def category_sweep():
    d = dp.builtin("dubut")
    cat = oc.order_category(d)
    assert cat.check_axioms() == (0, 0)
    return cat.n_morphisms


WORKLOADS = [("pi0 grid (dubut, k=7)", pi0_grid),
             ("order category + axioms (dubut)", category_sweep)]


def run(backend: str, repeat: int):
    _backend.set_backend(backend)
    rows = []
    for name, fn in WORKLOADS:
        fn()  # warm-up: jit compilation, closure caches for this call only
        best = min(_timed(fn) for _ in range(repeat))
        rows.append((name, best))
    _backend.set_backend(None)
    return rows


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    results = {}
    for backend in ("numpy", "numba"):
        try:
            results[backend] = run(backend, args.repeat)
        except ImportError:
            print(f"{backend}: not available, skipped")
    width = max(len(n) for n, _ in WORKLOADS)
    header = f"{'workload':<{width}}  " + "".join(f"{b:>12}" for b in results)
    print(header)
    print("-" * len(header))
    for i, (name, _) in enumerate(WORKLOADS):
        cells = "".join(f"{results[b][i][1]:>11.3f}s" for b in results)
        print(f"{name:<{width}}  {cells}")
    if len(results) == 2:
        for i, (name, _) in enumerate(WORKLOADS):
            ratio = results["numpy"][i][1] / results["numba"][i][1]
            print(f"{name}: numba is {ratio:.1f}x faster")


if __name__ == "__main__":
    main()
