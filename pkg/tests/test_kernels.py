"""Cross-validation of the loop kernels against independent implementations."""

import numpy as np
import pytest
import scipy.optimize

from omegaorth import kernels, optimize
from omegaorth.config import DEFAULTS
from conftest import complex_gaussian

SWEEPS = DEFAULTS.jacobi_max_sweeps
RTOL = DEFAULTS.jacobi_rel_tol


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_jacobi_matches_lapack(rng, n):
    A = complex_gaussian(rng, n)
    H = 0.5 * (A + A.conj().T)
    w, V, ok = kernels.jacobi_eigh(H, True, SWEEPS, RTOL)
    assert ok
    ref = np.linalg.eigvalsh(H)[::-1]
    scale = max(1.0, abs(ref).max())
    assert np.abs(w - ref).max() <= 1e-10 * scale
    for k in range(n):
        assert np.abs(H @ V[:, k] - w[k] * V[:, k]).max() <= 1e-9 * scale


def test_sweep_paths_agree(rng):
    thetas = np.arange(64) * (2 * np.pi / 64)
    for n in (2, 3, 4):
        T = complex_gaussian(rng, n)
        a = kernels.sweep_max_eigs(T, thetas, SWEEPS, RTOL)
        b = kernels.sweep_max_eigs_numpy(T, thetas)
        assert np.abs(a - b).max() <= 1e-10


def test_omega_2x2_matches_reference_sweep(rng):
    for _ in range(50):
        T = complex_gaussian(rng, 2)
        fast = kernels.omega_2x2(T)
        thetas = np.linspace(0, 2 * np.pi, 3000)
        grid = kernels.sweep_max_eigs_numpy(T, thetas).max()
        assert fast >= grid - 1e-9
        assert fast <= grid + 1e-5


def test_omega_2x2_normal_matrix():
    # spectral radius for normal input; the diagonal phases matter
    assert abs(kernels.omega_2x2(np.diag([1.0, 1j])) - 1.0) < 1e-12


def test_sigma_max_2x2_vs_svd(rng):
    for _ in range(50):
        T = complex_gaussian(rng, 2)
        assert abs(kernels.sigma_max_2x2(T) - np.linalg.norm(T, 2)) < 1e-12


def test_oracle_kernel_matches_broadcast(rng):
    for _ in range(5):
        T = complex_gaussian(rng, 2)
        a = kernels.oracle_2x2(T, 400, 400)
        b = kernels.oracle_2x2_numpy(T, 400, 400)
        assert abs(a - b) < 1e-12


def test_simplex_search_matches_scipy(rng):
    starts = np.array([[0.0, 0.0], [1.0, 0.0], [-1.0, 0.0], [0.0, 1.0],
                       [0.0, -1.0]])
    for _ in range(10):
        T = complex_gaussian(rng, 2)
        S = complex_gaussian(rng, 2)

        def f(x, y):
            return kernels.omega_2x2(T + complex(x, y) * S)

        a, b, val_kernel = kernels.nm_min_lambda(
            T, S, 0, starts, 0.5, DEFAULTS.nm_xatol, DEFAULTS.nm_fatol,
            DEFAULTS.nm_maxiter, DEFAULTS.inner_theta_grid,
            DEFAULTS.theta_refine_tol, SWEEPS, RTOL)
        _, _, val_py = optimize.nelder_mead_2d(
            f, [tuple(s) for s in starts], 0.5, DEFAULTS.nm_xatol,
            DEFAULTS.nm_fatol, DEFAULTS.nm_maxiter)
        ref = min(
            scipy.optimize.minimize(
                lambda z: f(z[0], z[1]), s, method="Nelder-Mead",
                options={"xatol": 1e-10, "fatol": 1e-12, "maxiter": 600}).fun
            for s in starts)
        assert abs(val_kernel - ref) < 1e-6
        assert abs(val_py - ref) < 1e-6


def test_norm_objective_search(rng):
    starts = np.array([[0.0, 0.0], [1.0, 0.0], [-1.0, 0.0], [0.0, 1.0],
                       [0.0, -1.0]])
    T = np.eye(2, dtype=complex)
    _, _, val = kernels.nm_min_lambda(
        T, T, 1, starts, 0.5, DEFAULTS.nm_xatol, DEFAULTS.nm_fatol,
        DEFAULTS.nm_maxiter, DEFAULTS.inner_theta_grid,
        DEFAULTS.theta_refine_tol, SWEEPS, RTOL)
    assert val < 1e-8  # ||I - I|| = 0 at lambda = -1


def test_golden_section_against_scipy():
    f = np.sin
    t_star, val = optimize.golden_section_max(f, 0.5, 2.5, 1e-12)
    ref = scipy.optimize.minimize_scalar(
        lambda t: -f(t), bracket=(0.5, 1.5, 2.5), method="golden",
        options={"xtol": 1e-13})
    assert abs(val - (-ref.fun)) < 1e-12
    assert abs(t_star - ref.x) < 1e-6


def test_ascent_paths_agree(rng):
    T = np.diag([1.0, 0.0]).astype(complex)
    X0 = (rng.standard_normal((16, 2)) + 1j * rng.standard_normal((16, 2)))
    best_loop, x_loop = kernels.ascent_product(T, T, X0, 0, 300, 1e-13)
    best_vec, x_vec = kernels.ascent_product_numpy(T, T, X0, 0, 300, 1e-13)
    assert abs(best_loop - 1.0) < 1e-8
    assert abs(best_vec - 1.0) < 1e-8
    assert abs(abs(x_loop[0]) - 1.0) < 1e-4
    assert abs(abs(x_vec[0]) - 1.0) < 1e-4


def test_ascent_real_part_objective(rng):
    # Re{<Tx,x> conj(<Sx,x>)} for S = T peaks at omega(T)^2
    T = np.diag([2.0, -1.0]).astype(complex)
    X0 = (rng.standard_normal((8, 2)) + 1j * rng.standard_normal((8, 2)))
    best, _ = kernels.ascent_product(T, T, X0, 1, 300, 1e-13)
    assert abs(best - 4.0) < 1e-8
