#!/usr/bin/env python3
"""Benchmark the compiled Monte Carlo kernel against the NumPy fallback.

Usage: python benchmarks/bench_kernels.py [--repeats 5]

Times the per-cell sampling kernel on shapes representative of the shipped
experiments (element counts 16..1024) and prints the speedup.  The compiled
backend must be importable for a comparison; otherwise only the fallback is
timed.
"""

import argparse
import time

import numpy as np

from fda_secrecy.kernels import numpy_backend

try:
    from fda_secrecy.kernels import _cykernel
except ImportError:
    _cykernel = None


def make_inputs(trials, n, seed=0):
    rng = np.random.default_rng(seed)
    phi_b0 = rng.uniform(-np.pi, np.pi, n)
    phi_e0 = rng.uniform(-np.pi, np.pi, n)
    k = rng.uniform(-5.0, 5.0, (trials, n))
    z = rng.standard_normal((trials, 2 * n))
    return phi_b0, phi_e0, 7.5442, 15.0221, k, z


def best_time(fn, args, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    shapes = [(2000, 16), (2000, 64), (2000, 256), (10_000, 32), (10_000, 1024)]
    print(f"{'trials':>8} {'N':>6} {'numpy [ms]':>12} {'cython [ms]':>12} {'speedup':>8}")
    for trials, n in shapes:
        inputs = make_inputs(trials, n)
        t_np = best_time(numpy_backend.rho_an_samples, inputs, args.repeats)
        if _cykernel is not None:
            a_np, u_np = numpy_backend.rho_an_samples(*inputs)
            a_cy, u_cy = _cykernel.rho_an_samples(*inputs)
            assert np.allclose(a_np, a_cy, rtol=1e-12, atol=1e-14)
            assert np.allclose(u_np, u_cy, rtol=1e-12, atol=1e-14)
            t_cy = best_time(_cykernel.rho_an_samples, inputs, args.repeats)
            print(f"{trials:>8} {n:>6} {t_np * 1e3:>12.2f} {t_cy * 1e3:>12.2f} {t_np / t_cy:>8.2f}x")
        else:
            print(f"{trials:>8} {n:>6} {t_np * 1e3:>12.2f} {'n/a':>12} {'n/a':>8}")


if __name__ == "__main__":
    main()
