"""Compare the compiled and pure-Python quadrature kernels.

Workloads mirror the heavy parts of the test suite: normalization and
second moments for random (gamma, a) pairs, and a desk-scale survival
curve.  Run with ``python benchmarks/bench_quadrature.py [--repeat N]``.
"""

import argparse
import math
import time

import numpy as np

from protonspread import _quad_py, quadrature

try:
    from protonspread import _quadext
except ImportError:
    _quadext = None


def moments_workload(kernel, uppers):
    out = []
    for U in uppers:
        b = quadrature.symmetric_breaks(U)
        for power in (0, 1, 2):
            out.append(kernel.adaptive(quadrature.KIND_POWER, power, 0.0, b,
                                       quadrature.ABS_TOL, quadrature.REL_TOL, quadrature.MAX_PANELS)[0])
    return out


def survival_workload(kernel, times, U=100.0):
    out = []
    for t in times:
        freq = 0.5 * t
        b = quadrature.peak_breaks(U)
        if freq > 0:
            b = quadrature.cap_panel_width(b, math.pi / freq)
        out.append(kernel.adaptive(quadrature.KIND_COS, 0, freq, b,
                                   quadrature.ABS_TOL, quadrature.REL_TOL, quadrature.MAX_PANELS)[0])
    return out


def bench(fn, *args, repeat=3):
    best = math.inf
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--pairs", type=int, default=100)
    args = ap.parse_args()

    rng = np.random.default_rng(20261019)
    uppers = list(2.0 * 10.0 ** rng.uniform(-2, 12, args.pairs))
    times = list(np.linspace(0.0, 50.0, 101))

    kernels = [("python", _quad_py)]
    if _quadext is not None:
        kernels.append(("cython", _quadext))
    else:
        print("compiled kernel not built; timing the fallback only")

    results = {}
    for name, kernel in kernels:
        tm, rm = bench(moments_workload, kernel, uppers, repeat=args.repeat)
        ts, rs = bench(survival_workload, kernel, times, repeat=args.repeat)
        results[name] = (tm, ts, rm, rs)
        print(f"{name:>7}: moments {tm * 1e3:9.2f} ms   survival {ts * 1e3:9.2f} ms")

    if len(results) == 2:
        py, cy = results["python"], results["cython"]
        print(f"speedup: moments x{py[0] / cy[0]:.1f}   survival x{py[1] / cy[1]:.1f}")
        worst = max(abs(a - b) / max(abs(a), 1e-300) for a, b in zip(py[2] + py[3], cy[2] + cy[3]))
        print(f"max relative difference between backends: {worst:.2e}")


if __name__ == "__main__":
    main()
