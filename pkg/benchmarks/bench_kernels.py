#!/usr/bin/env python3
"""Benchmark the compiled coefficient-vector kernels against the pure-Python ones.

Times the raw kernels (convolution, exact division) and one composite
workload (product of two lower-triangular matrices of polynomial entries,
the shape of the triangle-inverse consistency checks).  Run from the
repository root after building the extension in place:

    python setup.py build_ext --inplace
    python benchmarks/bench_kernels.py
"""

import random
import sys
import time

from pathenum import _kernels_py

try:
    from pathenum import _speedups
except ImportError:
    _speedups = None


def make_vectors(rng, count, size, digits):
    lo, hi = 10 ** (digits - 1), 10**digits
    return [
        [rng.randint(lo, hi) * rng.choice((1, -1)) for _ in range(size)]
        for _ in range(count)
    ]


def time_call(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_vmul(mod, vectors):
    def run():
        for i in range(0, len(vectors) - 1, 2):
            mod.vmul(vectors[i], vectors[i + 1])

    return time_call(run)


def bench_vdivexact(mod, pairs):
    def run():
        for prod, b in pairs:
            mod.vdivexact(prod, b)

    return time_call(run)


def bench_tri_product(mod, n, rows_a, rows_b):
    def run():
        for i in range(n):
            for j in range(i + 1):
                acc = []
                for k in range(j, i + 1):
                    acc = mod.vadd(acc, mod.vmul(rows_a[i][k], rows_b[k][j]))

    return time_call(run)


def main():
    rng = random.Random(20110531)
    rows = []

    vectors = make_vectors(rng, 400, 40, 12)
    pairs = []
    for _ in range(200):
        a = [rng.randint(-999, 999) for _ in range(60)]
        b = [rng.randint(-99, 99) for _ in range(20)]
        b[-1] = b[-1] or 1
        pairs.append((_kernels_py.vmul(a, b), b))
    n = 24
    tri_a = [[[rng.randint(-9, 9) for _ in range(i + 2)] for _ in range(i + 1)] for i in range(n)]
    tri_b = [[[rng.randint(-9, 9) for _ in range(i + 2)] for _ in range(i + 1)] for i in range(n)]

    cases = [
        ("vmul 40x40 digits=12 (x200)", bench_vmul, (vectors,)),
        ("vdivexact deg 79/19 (x200)", bench_vdivexact, (pairs,)),
        (f"triangular product n={n}", bench_tri_product, (n, tri_a, tri_b)),
    ]

    print(f"{'case':<34} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for name, fn, args in cases:
        t_py = fn(_kernels_py, *args)
        if _speedups is None:
            rows.append((name, t_py, None))
            print(f"{name:<34} {t_py:>10.4f} {'n/a':>13} {'n/a':>8}")
        else:
            t_c = fn(_speedups, *args)
            rows.append((name, t_py, t_c))
            print(f"{name:<34} {t_py:>10.4f} {t_c:>13.4f} {t_py / t_c:>7.2f}x")

    if _speedups is None:
        print("\ncompiled kernels not built; run: python setup.py build_ext --inplace")
        return 1

    # sanity: both backends agree on a few random inputs
    for _ in range(50):
        a = [rng.randint(-99, 99) for _ in range(17)]
        b = [rng.randint(-99, 99) for _ in range(9)]
        assert _kernels_py.vmul(a, b) == _speedups.vmul(a, b)
        assert _kernels_py.vadd(a, b) == _speedups.vadd(a, b)
    print("\nbackends agree on random inputs")
    return 0


if __name__ == "__main__":
    sys.exit(main())
