"""Deciders for radius parallelism and triangle equality.

T is radius-parallel to S when omega(T + lambda S) = omega(T) + omega(S)
for some unimodular lambda.  Since omega(T + lambda S) never exceeds
omega(T) + omega(S), a maximizing phase scan detects equality.  The
witness-vector route maximizes |<Tx,x><Sx,x>| on the unit sphere instead;
both must agree and are tested against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import config, kernels, optimize
from .backend import numba_active
from .config import DEFAULTS
from .linalg import as_matrix, quad_form, require_same_dim
from .orthogonality import INCONCLUSIVE, Verdict, decide
from .radius import _top_peak_indices, numerical_radius, omega_value

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ParallelWitness:
    """A unimodular phase and unit vector certifying parallelism.

    ``lambda_phase`` stores the witness lambda = e^{i phase};
    ``product_value`` is <Tx,x> * conj(<Sx,x>) at the witness vector.
    """

    lambda_phase: float
    x: np.ndarray
    product_value: complex


def _phase_scan(A: np.ndarray, B: np.ndarray, n_phi: int) -> tuple[float, float]:
    cfg = config.active()
    if numba_active():
        phi, best = kernels.phase_scan(
            A, B, n_phi, cfg.inner_theta_grid, cfg.theta_refine_tol,
            cfg.phase_refine_tol, cfg.refine_peaks,
            cfg.jacobi_max_sweeps, cfg.jacobi_rel_tol)
        return float(phi), float(best)

    def q(phi: float) -> float:
        return omega_value(A + np.exp(1j * phi) * B,
                           grid=cfg.inner_theta_grid)

    phis = np.arange(n_phi) * (_TWO_PI / n_phi)
    vals = np.array([q(p) for p in phis])
    k = int(np.argmax(vals))
    best_phi, best = float(phis[k]), float(vals[k])
    dphi = _TWO_PI / n_phi
    for i in _top_peak_indices(vals, cfg.refine_peaks):
        phi, v = optimize.golden_section_max(
            q, (i - 1) * dphi, (i + 1) * dphi, cfg.phase_refine_tol)
        if v > best:
            best_phi, best = float(phi % _TWO_PI), float(v)
    return best_phi, best


def radius_parallel(T, S, tol: float = DEFAULTS.tol_opt, *,
                    phase_grid: int | None = None) -> Verdict:
    """T parallel to S: some unimodular lambda gives omega(T + lambda S) = omega(T) + omega(S).

    A zero operand is parallel to anything (equality at any phase).
    The witness carries the maximizing phase and the attaining vector.
    """
    A = as_matrix(T)
    B = as_matrix(S)
    require_same_dim(A, B)
    omega_t = omega_value(A)
    omega_s = omega_value(B)
    n_phi = config.active().phase_grid if phase_grid is None else int(phase_grid)
    if omega_t <= tol or omega_s <= tol:
        cert = numerical_radius(A if omega_s <= tol else B)
        witness = ParallelWitness(lambda_phase=0.0, x=cert.x_star,
                                  product_value=complex(
                                      quad_form(A, cert.x_star)
                                      * np.conj(quad_form(B, cert.x_star))))
        return decide(0.0, tol, {"witness": witness, "best": omega_t + omega_s,
                                 "target": omega_t + omega_s})
    phi, _ = _phase_scan(A, B, n_phi)
    best = omega_value(A + np.exp(1j * phi) * B)
    defect = (omega_t + omega_s) - best
    cert = numerical_radius(A + np.exp(1j * phi) * B)
    product = complex(quad_form(A, cert.x_star) * np.conj(quad_form(B, cert.x_star)))
    witness = ParallelWitness(lambda_phase=float(phi), x=cert.x_star,
                              product_value=product)
    return decide(defect, tol, {"witness": witness, "best": float(best),
                                "target": float(omega_t + omega_s)})


def _ascent(A: np.ndarray, B: np.ndarray, objective: int, restarts: int,
            seed: int | None, extra_starts: list[np.ndarray] | None = None
            ) -> tuple[float, np.ndarray]:
    n = A.shape[0]
    rng = np.random.default_rng(config.active().seed if seed is None else seed)
    X0 = (rng.standard_normal((restarts, n))
          + 1j * rng.standard_normal((restarts, n))) / math.sqrt(2.0)
    if extra_starts:
        X0 = np.vstack([np.asarray(extra_starts, dtype=np.complex128), X0])
    cfg = config.active()
    if numba_active():
        best, x = kernels.ascent_product(A, B, X0, objective,
                                         cfg.ascent_maxiter,
                                         cfg.ascent_step_tol)
    else:
        best, x = kernels.ascent_product_numpy(A, B, X0, objective,
                                               cfg.ascent_maxiter,
                                               cfg.ascent_step_tol)
    return float(best), np.asarray(x)


def parallel_witness_search(T, S, restarts: int = DEFAULTS.ascent_restarts, *,
                            seed: int | None = None
                            ) -> tuple[float, ParallelWitness]:
    """Maximize |<Tx,x><Sx,x>| over unit vectors by seeded projected ascent.

    Returns the best product modulus and a witness whose phase aligns
    lambda S with T at the witness vector.  T is parallel to S exactly when
    the best value reaches omega(T) * omega(S).
    """
    A = as_matrix(T)
    B = as_matrix(S)
    require_same_dim(A, B)
    # deterministic warm starts: radius maximizers of T, S and T +/- S
    extras = [numerical_radius(M).x_star
              for M in (A, B, A + B, A - 1j * B)]
    best, x = _ascent(A, B, 0, restarts, seed, extras)
    f_t = quad_form(A, x)
    f_s = quad_form(B, x)
    phase = (math.atan2(f_t.imag, f_t.real)
             - math.atan2(f_s.imag, f_s.real)) % _TWO_PI
    witness = ParallelWitness(lambda_phase=float(phase), x=x,
                              product_value=complex(f_t * np.conj(f_s)))
    return best, witness


def triangle_equality(T, S, tol: float = DEFAULTS.tol_opt, *,
                      restarts: int = DEFAULTS.ascent_restarts,
                      seed: int | None = None) -> Verdict:
    """Decide omega(T + S) = omega(T) + omega(S), with a witness-vector cross-check.

    Check (a) compares the radii directly.  Check (b) maximizes
    Re{<Tx,x> conj(<Sx,x>)} over the sphere: equality requires the maximum
    to reach omega(T) * omega(S) with a negligible imaginary part at the
    maximizer.  The verdict follows (a); disagreement between the two
    checks yields inconclusive.
    """
    A = as_matrix(T)
    B = as_matrix(S)
    require_same_dim(A, B)
    omega_t = omega_value(A)
    omega_s = omega_value(B)
    omega_ts = omega_value(A + B)
    delta = omega_ts - omega_t - omega_s
    verdict_a = decide(abs(delta), tol)

    extras = [numerical_radius(A + B).x_star]
    best_re, x = _ascent(A, B, 1, restarts, seed, extras)
    f_t = quad_form(A, x)
    f_s = quad_form(B, x)
    product = f_t * np.conj(f_s)
    target = omega_t * omega_s
    # |Im p| <= sqrt(target^2 - Re(p)^2) once Re(p) is within tol of target
    im_cap = 2.0 * math.sqrt(2.0 * max(target, tol) * tol) + tol
    witness_ok = (best_re >= target - tol) and (abs(product.imag) <= im_cap)
    witness = {
        "delta": float(delta),
        "witness_value": complex(product),
        "witness_max_re": float(best_re),
        "witness_target": float(target),
        "witness_ok": bool(witness_ok),
        "x": x,
    }
    if not verdict_a.inconclusive and witness_ok != verdict_a.holds:
        return Verdict(status=INCONCLUSIVE, margin=verdict_a.margin,
                       tolerance=verdict_a.tolerance, witness=witness)
    return Verdict(status=verdict_a.status, margin=verdict_a.margin,
                   tolerance=verdict_a.tolerance, witness=witness)
