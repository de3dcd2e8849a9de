"""Compiled vs pure-Python kernels on the hot paths.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload is timed with ``timeit`` on both backends; results are checked
to agree before the timings are reported.
"""
import argparse
import math
import timeit

import numpy as np

from bessel_convexity import _pykernels
from bessel_convexity.bessel_core import rgamma

try:
    from bessel_convexity import _ckernels
except ImportError:
    _ckernels = None


def workloads(k):
    nu = 1.5
    rg0, rg1 = rgamma(nu + 1), rgamma(nu + 2)
    zeros = np.ascontiguousarray(np.arange(1.0, 201.0) * math.pi)
    points = [complex(0.9 * math.cos(t), 0.9 * math.sin(t)) for t in np.linspace(0, 2 * math.pi, 720)]

    def table():
        return k.family_zeros(0, nu, 0.0, 400, rg0, rg1, 1e-13, 200, math.pi / 8, 410 * math.pi)[0]

    def series():
        return [k.series_a(nu, 0.25 * x * x, 0.0, rg0, 1e-13, 200)[0] for x in np.linspace(0.1, 20, 2000)]

    def mittag_leffler():
        return [k.ml_even(zeros, z.real, z.imag)[0] for z in points]

    return {"zero table (400 zeros)": table, "series A_nu (2000 args)": series,
            "partial fractions (720 pts x 200)": mittag_leffler}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; nothing to compare")
        return
    py, cy = workloads(_pykernels), workloads(_ckernels)
    print(f"{'workload':36s} {'python s':>10s} {'compiled s':>11s} {'speedup':>8s}")
    for name in py:
        a, b = np.asarray(py[name]()), np.asarray(cy[name]())
        assert np.allclose(a, b, rtol=1e-13, atol=1e-300), name
        tp = min(timeit.repeat(py[name], number=1, repeat=args.repeat))
        tc = min(timeit.repeat(cy[name], number=1, repeat=args.repeat))
        print(f"{name:36s} {tp:10.4f} {tc:11.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
