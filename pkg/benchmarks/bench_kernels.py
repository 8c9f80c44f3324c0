#!/usr/bin/env python3
"""Benchmark the hot kernels against their pure-numpy alternates.

The loop kernels are compiled (or not) according to OMEGAORTH_BACKEND, so
running this script under each backend shows both sides:

    python3 benchmarks/bench_kernels.py
    OMEGAORTH_BACKEND=numpy python3 benchmarks/bench_kernels.py

Within one run the table compares the active kernel path against the
vectorized numpy alternates that the fallback backend dispatches to.
"""

import time

import numpy as np

from omegaorth import backend, kernels, optimize
from omegaorth.config import DEFAULTS


def timeit(fn, *args, repeat=5, number=1):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for _ in range(number):
            out = fn(*args)
        best = min(best, (time.perf_counter() - t0) / number)
    return best, out


def row(label, t_kernel, t_numpy):
    ratio = t_numpy / t_kernel if t_kernel > 0 else float("inf")
    print(f"{label:44s} {t_kernel * 1e3:10.3f} {t_numpy * 1e3:10.3f} {ratio:8.2f}x")


def main():
    rng = np.random.default_rng(7)
    print(f"active kernel backend: {backend.backend_name()}")
    print(f"{'benchmark':44s} {'kernel ms':>10s} {'numpy ms':>10s} {'ratio':>9s}")

    sweeps = DEFAULTS.jacobi_max_sweeps
    rtol = DEFAULTS.jacobi_rel_tol

    for n in (2, 4, 8):
        A = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
        H = 0.5 * (A + A.conj().T)
        kernels.jacobi_eigh(H, True, sweeps, rtol)  # warm
        t_k, _ = timeit(lambda: kernels.jacobi_eigh(H, True, sweeps, rtol),
                        number=200)
        t_n, _ = timeit(lambda: np.linalg.eigh(H), number=200)
        row(f"hermitian eigensolve (n={n})", t_k, t_n)

    thetas = np.arange(DEFAULTS.theta_grid) * (2 * np.pi / DEFAULTS.theta_grid)
    for n in (2, 4):
        T = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
        kernels.sweep_max_eigs(T, thetas, sweeps, rtol)  # warm
        t_k, _ = timeit(lambda: kernels.sweep_max_eigs(T, thetas, sweeps, rtol))
        t_n, _ = timeit(lambda: kernels.sweep_max_eigs_numpy(T, thetas))
        row(f"direction sweep, {DEFAULTS.theta_grid} angles (n={n})", t_k, t_n)

    T2 = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)))
    g = DEFAULTS.oracle_grid
    kernels.oracle_2x2(T2, 64, 64)  # warm
    t_k, _ = timeit(lambda: kernels.oracle_2x2(T2, g, g), repeat=3)
    t_n, _ = timeit(lambda: kernels.oracle_2x2_numpy(T2, g, g), repeat=3)
    row(f"grid oracle {g}x{g} (n=2)", t_k, t_n)

    S2 = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)))
    starts = np.array([[0.0, 0.0], [1.0, 0.0], [-1.0, 0.0], [0.0, 1.0],
                       [0.0, -1.0]])
    args = (T2, S2, 0, starts, 0.5, DEFAULTS.nm_xatol, DEFAULTS.nm_fatol,
            DEFAULTS.nm_maxiter, DEFAULTS.inner_theta_grid,
            DEFAULTS.theta_refine_tol, sweeps, rtol)
    kernels.nm_min_lambda(*args)  # warm

    def python_nm():
        def f(x, y):
            return kernels.omega_2x2(T2 + complex(x, y) * S2)
        return optimize.nelder_mead_2d(f, [tuple(s) for s in starts], 0.5,
                                       DEFAULTS.nm_xatol, DEFAULTS.nm_fatol,
                                       DEFAULTS.nm_maxiter)

    t_k, _ = timeit(lambda: kernels.nm_min_lambda(*args), number=10)
    t_n, _ = timeit(python_nm, number=2)
    row("lambda-plane simplex search (n=2)", t_k, t_n)

    X0 = (rng.standard_normal((32, 3)) + 1j * rng.standard_normal((32, 3)))
    T3 = (rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)))
    S3 = (rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)))
    kernels.ascent_product(T3, S3, X0, 0, 50, 1e-13)  # warm
    t_k, _ = timeit(lambda: kernels.ascent_product(
        T3, S3, X0, 0, DEFAULTS.ascent_maxiter, DEFAULTS.ascent_step_tol))
    t_n, _ = timeit(lambda: kernels.ascent_product_numpy(
        T3, S3, X0, 0, DEFAULTS.ascent_maxiter, DEFAULTS.ascent_step_tol))
    row("sphere ascent, 32 restarts (n=3)", t_k, t_n)


if __name__ == "__main__":
    main()
