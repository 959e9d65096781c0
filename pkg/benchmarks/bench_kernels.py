#!/usr/bin/env python3
"""Benchmark the hot kernels: compiled extension vs pure-Python mirror.

Runs each kernel with representative arguments under both backends and
prints per-call times plus the speedup ratio.  Usage:

    python benchmarks/bench_kernels.py [--repeats N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from dilogkit import _kernels_py

try:
    from dilogkit import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

COEFFS = np.ascontiguousarray(np.geomspace(1.0, 1e-9, 1801))
COEFFS.setflags(write=False)

CASES = [
    ("power_series_sum s=2 t=0.9", lambda k: k.power_series_sum(0.9, 2, 1e-14, 10**6), 200),
    ("power_series_sum s=3 t=0.999", lambda k: k.power_series_sum(0.999, 3, 1e-14, 10**6), 20),
    ("odd_series_sum s=3 alt t=0.99", lambda k: k.odd_series_sum(0.99, 3, True, 1e-14, 10**5), 200),
    ("zeta_partial_sum s=3 n=1e5", lambda k: k.zeta_partial_sum(3, 10**5), 20),
    ("odd_zeta_partial_sum s=2 n=1e5", lambda k: k.odd_zeta_partial_sum(2, 10**5), 20),
    ("euler_sum_odd2_weighted n=1e6", lambda k: k.euler_sum_odd2_weighted(10**6), 3),
    ("euler_sum_h2_over_n2 n=1e6", lambda k: k.euler_sum_h2_over_n2(10**6), 3),
    ("euler_sum_odd1sq_over_n2 n=1e6", lambda k: k.euler_sum_odd1sq_over_n2(10**6), 3),
    ("horner_eval order=1800", lambda k: k.horner_eval(COEFFS, 0.97), 2000),
]


def best_of(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=None, help="override per-case repeats")
    args = parser.parse_args()

    if _kernels_c is None:
        print("compiled extension not available; benchmarking pure Python only\n")

    name_w = max(len(name) for name, _, _ in CASES)
    header = f"{'kernel':<{name_w}}  {'python':>12}  {'compiled':>12}  {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for name, call, default_repeats in CASES:
        repeats = args.repeats or default_repeats
        t_py = best_of(lambda: call(_kernels_py), repeats)
        if _kernels_c is not None:
            t_c = best_of(lambda: call(_kernels_c), repeats)
            ratio = t_py / t_c if t_c > 0 else float("inf")
            print(f"{name:<{name_w}}  {t_py * 1e3:>10.3f}ms  {t_c * 1e3:>10.3f}ms  {ratio:>7.1f}x")
        else:
            print(f"{name:<{name_w}}  {t_py * 1e3:>10.3f}ms  {'-':>12}  {'-':>8}")

    # sanity: identical results on a shared spot check
    if _kernels_c is not None:
        a = _kernels_py.zeta_partial_sum(3, 10**5)
        b = _kernels_c.zeta_partial_sum(3, 10**5)
        print(f"\nspot check zeta_partial_sum(3, 1e5): python={a!r} compiled={b!r} equal={a == b}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
