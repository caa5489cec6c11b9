"""Time the compiled kernels against the numpy fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import math
import timeit

import numpy as np

from lenscut._backend import get_kernels
from lenscut.algebra import SpherePoint, orbit_array
from lenscut.geodesic import exp_su2_array
from lenscut.metric import MetricParams, tau_of_t
from lenscut.roots import DEFAULT_STEP, DEFAULT_TOL, ell_tau_cap


def roots_job(k):
    h3 = np.linspace(-1.0, 1.0, 2001)
    eta, p = -0.8, 3
    return lambda: k.ell_first_roots(h3, eta, p, -1, DEFAULT_STEP, DEFAULT_TOL, ell_tau_cap(eta))


def scan_job(k):
    pr = MetricParams.from_eta(3, 1, 1.0, -0.5)
    h3 = np.linspace(-1.0, 1.0, 91)
    phis = 2 * math.pi * np.arange(128) / 128
    step = math.pi / 256
    m_max = np.array([int(tau_of_t(2.5, float(h), pr) / step) + 1 for h in h3], dtype=np.int64)
    target = SpherePoint.from_array(exp_su2_array(0.4, 0.5, 1.7, pr.eta))
    orbit = orbit_array(target, pr.p, pr.q)
    return lambda: k.shoot_scan(h3, phis, step, m_max, pr.eta, orbit, 0.05)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = {"python": get_kernels("python")}
    try:
        backends["cython"] = get_kernels("cython")
    except ImportError:
        print("compiled kernels not built; timing the fallback only")
    print(f"{'kernel':<16}{'backend':<10}{'best [ms]':>12}")
    for name, job in [("ell_first_roots", roots_job), ("shoot_scan", scan_job)]:
        times = {}
        for bname, k in backends.items():
            times[bname] = min(timeit.repeat(job(k), number=1, repeat=args.repeat)) * 1e3
            print(f"{name:<16}{bname:<10}{times[bname]:>12.2f}")
        if len(times) == 2:
            print(f"{'':<16}{'speedup':<10}{times['python'] / times['cython']:>11.1f}x")


if __name__ == "__main__":
    main()
