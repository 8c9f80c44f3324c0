"""Numerical radius and numerical range with attainment certificates.

The radius is computed as the maximum over directions theta of the top
eigenvalue of the rotated Hermitian part H_theta = (e^{i theta} T +
e^{-i theta} T^H)/2: a coarse circular grid brackets the global maximizer
and golden-section refinement polishes the leading peaks.  ``omega_value``
is the value-only fast path used inside optimizers; it reduces any 2x2
input to the triangular closed form through a Schur argument and is
cross-checked against the sweep and the brute-force grid oracle in the
test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import config, kernels, optimize
from .backend import numba_active
from .linalg import DimensionMismatchError, as_matrix, quad_form

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class RadiusCertificate:
    """A radius value with the direction and unit vector attaining it."""

    omega: float
    theta_star: float
    x_star: np.ndarray
    residual: float


@dataclass(frozen=True)
class AttainmentSample:
    """Unit vectors whose quadratic forms come within ``slack`` of the radius.

    ``vectors`` has one unit vector per row; ``values`` holds the matching
    quadratic forms.  Vectors are deduplicated modulo global phase.
    """

    vectors: np.ndarray
    values: np.ndarray
    slack: float

    def __len__(self) -> int:
        return self.vectors.shape[0]


def rotated_hermitian_part(T, theta: float) -> np.ndarray:
    """(e^{i theta} T + e^{-i theta} T^H) / 2; Hermitian by construction."""
    A = as_matrix(T)
    z = np.exp(1j * float(theta))
    return 0.5 * (z * A + np.conj(z * A).T)


def radius_2x2_triangular(a, b, d) -> float:
    """Closed-form numerical radius of [[a, b], [0, d]]."""
    a = complex(a)
    b = complex(b)
    d = complex(d)
    return 0.5 * abs(a + d) + 0.5 * math.sqrt(abs(a - d) ** 2 + abs(b) ** 2)


def _theta_grid(n_grid: int) -> np.ndarray:
    return np.arange(n_grid, dtype=np.float64) * (_TWO_PI / n_grid)


def _grid_max_eigs(A: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    if numba_active():
        cfg = config.active()
        return kernels.sweep_max_eigs(A, thetas, cfg.jacobi_max_sweeps,
                                      cfg.jacobi_rel_tol)
    return kernels.sweep_max_eigs_numpy(A, thetas)


def _max_eig_at(A: np.ndarray, theta: float) -> float:
    if numba_active():
        cfg = config.active()
        return kernels.max_eig_at_theta(A, theta, cfg.jacobi_max_sweeps,
                                        cfg.jacobi_rel_tol)
    H = rotated_hermitian_part(A, theta)
    return float(np.linalg.eigvalsh(H)[-1])


def _top_peak_indices(vals: np.ndarray, k: int) -> list[int]:
    left = np.roll(vals, 1)
    right = np.roll(vals, -1)
    idx = np.flatnonzero((vals >= left) & (vals >= right))
    if idx.size == 0:
        return []
    order = np.argsort(-vals[idx], kind="stable")
    return [int(i) for i in idx[order][:k]]


def _omega_sweep(A: np.ndarray, n_grid: int, refine_tol: float,
                 n_peaks: int) -> tuple[float, float]:
    if numba_active():
        cfg = config.active()
        om, th = kernels.omega_theta_kernel(A, n_grid, refine_tol, n_peaks,
                                            cfg.jacobi_max_sweeps,
                                            cfg.jacobi_rel_tol)
        return float(om), float(th)
    thetas = _theta_grid(n_grid)
    vals = _grid_max_eigs(A, thetas)
    k = int(np.argmax(vals))
    best, best_theta = float(vals[k]), float(thetas[k])
    dtheta = _TWO_PI / n_grid
    for i in _top_peak_indices(vals, n_peaks):
        th, v = optimize.golden_section_max(
            lambda t: _max_eig_at(A, t), (i - 1) * dtheta, (i + 1) * dtheta,
            refine_tol)
        if v > best:
            best, best_theta = float(v), float(th % _TWO_PI)
    return best, best_theta


def omega_value(T, *, grid: int | None = None,
                refine_tol: float | None = None) -> float:
    """Value-only numerical radius (exact closed form at n=2, sweep otherwise)."""
    A = as_matrix(T)
    if A.shape[0] == 2:
        return float(kernels.omega_2x2(A))
    cfg = config.active()
    n_grid = cfg.theta_grid if grid is None else int(grid)
    rtol = cfg.theta_refine_tol if refine_tol is None else float(refine_tol)
    return _omega_sweep(A, n_grid, rtol, cfg.refine_peaks)[0]


def numerical_radius(T, *, theta_grid: int | None = None,
                     refine_tol: float | None = None) -> RadiusCertificate:
    """Numerical radius with a maximizing direction and unit vector.

    The zero matrix gets the canonical certificate (0, theta=0, e_1).
    """
    A = as_matrix(T)
    n = A.shape[0]
    if not A.any():
        e1 = np.zeros(n, dtype=np.complex128)
        e1[0] = 1.0
        return RadiusCertificate(omega=0.0, theta_star=0.0, x_star=e1,
                                 residual=0.0)
    cfg = config.active()
    n_grid = cfg.theta_grid if theta_grid is None else int(theta_grid)
    rtol = cfg.theta_refine_tol if refine_tol is None else float(refine_tol)
    omega, theta_star = _omega_sweep(A, n_grid, rtol, cfg.refine_peaks)
    H = rotated_hermitian_part(A, theta_star)
    if numba_active():
        _, V, _ = kernels.jacobi_eigh(H, True, cfg.jacobi_max_sweeps,
                                      cfg.jacobi_rel_tol)
        x_star = V[:, 0].copy()
    else:
        _, V = np.linalg.eigh(H)
        x_star = V[:, -1].copy()
    residual = abs(omega - abs(quad_form(A, x_star)))
    return RadiusCertificate(omega=float(omega), theta_star=float(theta_star),
                             x_star=x_star, residual=float(residual))


def numerical_range_boundary(T, n_theta: int) -> np.ndarray:
    """Support points of the numerical range, one per direction.

    Returns the complex quadratic forms <T x_theta, x_theta> where x_theta
    is a top eigenvector of the rotated Hermitian part; these lie on the
    boundary of the (convex) numerical range.
    """
    A = as_matrix(T)
    if n_theta < 3:
        raise ValueError("n_theta must be at least 3")
    thetas = _theta_grid(n_theta)
    points = np.empty(n_theta, dtype=np.complex128)
    if numba_active():
        cfg = config.active()
        for k, th in enumerate(thetas):
            H = kernels.rotated_part(A, th)
            _, V, _ = kernels.jacobi_eigh(H, True, cfg.jacobi_max_sweeps,
                                          cfg.jacobi_rel_tol)
            x = V[:, 0]
            points[k] = np.vdot(x, A @ x)
    else:
        _, V = kernels.sweep_eigh_numpy(A, thetas)
        X = V[:, :, -1]
        points[:] = np.einsum("ki,ij,kj->k", X.conj(), A, X)
    return points


def radius_oracle_2x2(T, n_t: int | None = None, n_s: int | None = None,
                      n_p: int = 1) -> float:
    """Brute-force grid maximization of |<Tx, x>| for 2x2 matrices.

    Independent of the sweep machinery.  ``n_p`` is accepted for interface
    stability but fixed to 1: the modulus of the quadratic form is invariant
    under a global phase of x.
    """
    A = as_matrix(T)
    if A.shape[0] != 2:
        raise DimensionMismatchError("the grid oracle is defined for 2x2 input")
    cfg = config.active()
    nt = cfg.oracle_grid if n_t is None else int(n_t)
    ns = cfg.oracle_grid if n_s is None else int(n_s)
    if nt < 2 or ns < 1:
        raise ValueError("oracle grid too small")
    if numba_active():
        return float(kernels.oracle_2x2(A, nt, ns))
    return float(kernels.oracle_2x2_numpy(A, nt, ns))


def attainment_sample(T, slack: float | None = None,
                      budget: int | None = None, *,
                      theta_grid: int | None = None) -> AttainmentSample:
    """Unit vectors whose quadratic-form modulus is within ``slack`` of the radius.

    Collects, over the direction grid, every rotated-part eigenvector whose
    eigenvalue reaches omega - slack (such vectors are guaranteed
    near-maximizers), plus the certificate maximizer, deduplicates modulo
    global phase, and keeps at most ``budget`` vectors, best first.
    """
    cfg = config.active()
    slack = cfg.attainment_slack if slack is None else float(slack)
    budget = cfg.attainment_budget if budget is None else int(budget)
    if slack <= 0.0:
        raise ValueError("slack must be positive")
    A = as_matrix(T)
    n = A.shape[0]
    n_grid = cfg.theta_grid if theta_grid is None else int(theta_grid)
    cert = numerical_radius(A, theta_grid=n_grid)
    omega = cert.omega
    cutoff = omega - slack

    thetas = _theta_grid(n_grid)
    vals = _grid_max_eigs(A, thetas)
    # sharp peaks rarely coincide with grid points: refine every circular
    # local maximum and sample there as well, so no attainment direction
    # is lost to grid resolution
    sample_thetas = [float(t) for t, v in zip(thetas, vals) if v >= cutoff]
    dtheta = _TWO_PI / n_grid
    for i in _top_peak_indices(vals, max(cfg.refine_peaks, 8)):
        th, v = optimize.golden_section_max(
            lambda t: _max_eig_at(A, t), (i - 1) * dtheta, (i + 1) * dtheta,
            cfg.theta_refine_tol)
        if v >= cutoff:
            sample_thetas.append(float(th % _TWO_PI))

    candidates: list[np.ndarray] = [cert.x_star]
    if numba_active():
        for th in sample_thetas:
            H = kernels.rotated_part(A, th)
            w, V, _ = kernels.jacobi_eigh(H, True, cfg.jacobi_max_sweeps,
                                          cfg.jacobi_rel_tol)
            for k in range(n):
                if w[k] < cutoff:
                    break
                candidates.append(V[:, k].copy())
    elif sample_thetas:
        w, V = kernels.sweep_eigh_numpy(A, np.asarray(sample_thetas))
        hit_t, hit_k = np.nonzero(w >= cutoff)
        for t, k in zip(hit_t, hit_k):
            candidates.append(V[t, :, k].copy())

    X = np.asarray(candidates)
    vals = np.einsum("ki,ij,kj->k", X.conj(), A, X)
    order = np.argsort(-np.abs(vals), kind="stable")

    kept_rows: list[np.ndarray] = []
    kept_vals: list[complex] = []
    overlap = cfg.dedup_overlap
    for idx in order:
        if np.abs(vals[idx]) < cutoff:
            continue
        x = X[idx]
        dup = False
        for y in kept_rows:
            if abs(np.vdot(y, x)) > overlap:
                dup = True
                break
        if dup:
            continue
        kept_rows.append(x)
        kept_vals.append(complex(vals[idx]))
        if len(kept_rows) >= budget:
            break
    if not kept_rows:
        # occurs only when every grid value just misses the refined optimum;
        # the certificate vector is always a valid member
        kept_rows.append(cert.x_star)
        kept_vals.append(complex(quad_form(A, cert.x_star)))
    return AttainmentSample(vectors=np.asarray(kept_rows),
                            values=np.asarray(kept_vals, dtype=np.complex128),
                            slack=float(slack))
