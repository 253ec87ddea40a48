"""Timing comparison of the compiled and pure-Python kernels.

Run with ``python3 benchmarks/bench_kernels.py [--repeat N]``.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from localfrac._backend import available_kernels


def workloads(k):
    rng = np.random.default_rng(0)
    coeffs = rng.uniform(-1, 1, 64)
    h = rng.uniform(0, 2, 20_000)
    xs = rng.uniform(0.5, 170, 2_000)
    return {
        "gamma x2000": lambda: [k.gamma_lanczos(x) for x in xs],
        "eval_offsets 64x20000": lambda: k.eval_offsets(coeffs, 0.6, h),
        "ml_series a=0.3 x=20": lambda: k.ml_series(0.3, 20.0, 1e-14, 100_000),
        "coefficient maps deg 63": lambda: k.derivative_coeffs(k.integral_coeffs(coeffs, 0.4), 0.4),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    kernels = available_kernels()
    names = sorted(kernels)
    results = {n: {} for n in names}
    for name in names:
        for label, fn in workloads(kernels[name]).items():
            results[name][label] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
    labels = list(results[names[0]])
    print(f"{'workload':<26}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label in labels:
        row = f"{label:<26}" + "".join(f"{results[n][label] * 1e3:>10.3f}ms" for n in names)
        if "cython" in results and "python" in results:
            row += f"{results['python'][label] / results['cython'][label]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
