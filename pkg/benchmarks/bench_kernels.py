#!/usr/bin/env python3
"""Benchmark the jitted enumeration kernels against the numpy fallbacks.

Runs each kernel pair on identical inputs, checks they produce identical
value sets, and reports wall-clock times.  Usage:

    python benchmarks/bench_kernels.py [--n 5] [--family-n 22] [--repeats 3]

The numpy numbers are what you get with BINDET_NO_NUMBA=1.
"""

import argparse
import math
import time

import numpy as np

from bindet import _kernels, binary_rows, cofactor_vector, det_exact


def time_best(fn, repeats):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_exhaustive(n, repeats):
    offset = math.factorial(n)
    total = 1 << (n * (n - 1))

    def run(kernel):
        seen = np.zeros(2 * offset + 1, dtype=np.uint8)
        kernel(n, 0, total, seen)
        return frozenset(int(i) - offset for i in np.flatnonzero(seen))

    rows = []
    results = {}
    for name, kernel in (("numba", _kernels.exhaustive_chunk_jit),
                         ("numpy", _kernels.exhaustive_chunk_numpy)):
        if kernel is None:
            continue
        run(kernel)  # warm up (jit compile)
        results[name] = run(kernel)
        rows.append((f"exhaustive n={n}", name, time_best(lambda: run(kernel), repeats)))
    if len(results) == 2:
        assert results["numba"] == results["numpy"], "kernel paths disagree"
    return rows


def bench_family(n, repeats):
    k = max(2, min(5, n // 4))
    fixed = list(binary_rows(n, k))
    if det_exact(fixed) == -1:
        fixed[1], fixed[2] = fixed[2], fixed[1]
    cof = np.array(cofactor_vector(fixed[1:]), dtype=np.int64)
    lo = int(cof[cof < 0].sum())
    hi = int(cof[cof > 0].sum())

    def run(kernel):
        seen = np.zeros(hi - lo + 1, dtype=np.uint8)
        kernel(cof, lo, seen)
        return int(seen.sum())

    rows = []
    results = {}
    for name, kernel in (("numba", _kernels.family_bitmap_jit),
                         ("numpy", _kernels.family_bitmap_numpy)):
        if kernel is None:
            continue
        run(kernel)
        results[name] = run(kernel)
        rows.append((f"family n={n} k={k}", name, time_best(lambda: run(kernel), repeats)))
    if len(results) == 2:
        assert results["numba"] == results["numpy"], "kernel paths disagree"
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=5, help="exhaustive spectrum size")
    parser.add_argument("--family-n", type=int, default=22, help="family spectrum size")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if not _kernels.NUMBA_ENABLED:
        print("note: numba disabled or missing; timing the numpy path only")

    rows = bench_exhaustive(args.n, args.repeats)
    rows += bench_family(args.family_n, args.repeats)

    width = max(len(r[0]) for r in rows)
    print(f"{'case':<{width}}  path   best of {args.repeats}")
    baselines = {}
    for case, name, seconds in rows:
        note = ""
        if name == "numba":
            baselines[case] = seconds
        elif case in baselines:
            ratio = seconds / baselines[case]
            note = (f"  ({ratio:.1f}x slower than numba)" if ratio >= 1
                    else f"  ({1 / ratio:.1f}x faster than numba)")
        print(f"{case:<{width}}  {name:<5}  {seconds:8.3f}s{note}")


if __name__ == "__main__":
    main()
