"""Deciders for the orthogonality relations between matrices.

Four relations are decided: usual orthogonality (S^H T = 0), Birkhoff
orthogonality in the operator norm, Birkhoff orthogonality in the numerical
radius, and the Pythagorean relation for the numerical radius.  A fifth
decider certifies radius-Birkhoff orthogonality through per-direction
attainment vectors and cross-checks itself against the direct decider.

Every decider returns a three-state :class:`Verdict`.  The raw computation
produces a *defect* (how far the defining relation is from holding; zero or
negative means it holds); the verdict compares the defect against the
caller's tolerance with an inconclusive band around the threshold so that
equality-at-tolerance cases never silently flip:

    margin = tol - defect          (> 0 on the holds side)
    holds        iff margin >  band
    fails        iff margin < -band
    inconclusive otherwise,        band = band_factor * tol

``fails`` verdicts always carry a witness that re-violates the defining
inequality by more than the stored tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from . import config, kernels, optimize
from .backend import numba_active
from .config import DEFAULTS
from .linalg import as_matrix, operator_norm, require_same_dim
from .radius import attainment_sample, omega_value

HOLDS = "holds"
FAILS = "fails"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Verdict:
    """Three-state decision with margin bookkeeping.

    ``margin`` is the signed distance from the decision threshold (positive
    on the holds side); ``tolerance`` is the half-width of the inconclusive
    band: |margin| <= tolerance always yields ``inconclusive``.
    """

    status: str
    margin: float
    tolerance: float
    witness: dict[str, Any] | None = None

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    @property
    def fails(self) -> bool:
        return self.status == FAILS

    @property
    def inconclusive(self) -> bool:
        return self.status == INCONCLUSIVE


def decide(defect: float, tol: float, witness: dict[str, Any] | None = None,
           band_factor: float = DEFAULTS.band_factor) -> Verdict:
    """Map a defect value to a Verdict with an inconclusive band."""
    band = band_factor * tol
    margin = tol - defect
    if margin > band:
        status = HOLDS
    elif margin < -band:
        status = FAILS
    else:
        status = INCONCLUSIVE
    return Verdict(status=status, margin=float(margin), tolerance=float(band),
                   witness=witness)


# ---------------------------------------------------------------------------
# usual orthogonality: S^H T = 0
# ---------------------------------------------------------------------------

def usual_orthogonal(S, T, tol: float = DEFAULTS.tol_algebraic) -> Verdict:
    """S perp T in the usual sense: every entry of S^H T vanishes."""
    A = as_matrix(S)
    B = as_matrix(T)
    require_same_dim(A, B)
    P = A.conj().T @ B
    flat = int(np.argmax(np.abs(P)))
    i, j = divmod(flat, P.shape[1])
    defect = float(np.abs(P).max())
    witness = {"max_entry": complex(P[i, j]), "index": (int(i), int(j))}
    return decide(defect, tol, witness)


# ---------------------------------------------------------------------------
# lambda-plane minimization shared by the two Birkhoff deciders
# ---------------------------------------------------------------------------

def _minimize_over_lambda(A: np.ndarray, B: np.ndarray, objective: int,
                          scale: float) -> tuple[complex, float]:
    """min over complex lambda of f(A + lambda B); f is radius (0) or norm (1).

    The objective is convex and coercive, with the minimizer inside
    |lambda| <= 2 * scale; the five deterministic starts bracket that disk.
    Returns the minimizing lambda and the searched minimum (the caller
    re-evaluates at full precision).
    """
    cfg = config.active()
    r = max(scale, 1e-3)
    starts = np.array([[0.0, 0.0], [r, 0.0], [-r, 0.0], [0.0, r], [0.0, -r]])
    step0 = 0.5 * r
    fatol = cfg.nm_fatol
    if numba_active():
        a, b, val = kernels.nm_min_lambda(
            A, B, objective, starts, step0, cfg.nm_xatol, fatol,
            cfg.nm_maxiter, cfg.inner_theta_grid,
            cfg.theta_refine_tol, cfg.jacobi_max_sweeps,
            cfg.jacobi_rel_tol)
        return complex(a, b), float(val)

    if objective == 0:
        def f(x: float, y: float) -> float:
            return omega_value(A + complex(x, y) * B,
                               grid=cfg.inner_theta_grid)
    else:
        def f(x: float, y: float) -> float:
            return operator_norm(A + complex(x, y) * B)

    a, b, val = optimize.nelder_mead_2d(
        f, [tuple(s) for s in starts], step0, cfg.nm_xatol, fatol,
        cfg.nm_maxiter)
    return complex(a, b), float(val)


def birkhoff_radius_orth(T, S, tol: float = DEFAULTS.tol_opt) -> Verdict:
    """T perp S for the numerical radius: omega(T + lambda S) >= omega(T) for all lambda.

    Decided by minimizing the convex map lambda -> omega(T + lambda S);
    the witness carries the minimizing lambda and the minimum.
    """
    A = as_matrix(T)
    B = as_matrix(S)
    require_same_dim(A, B)
    omega_t = omega_value(A)
    omega_s = omega_value(B)
    if omega_s <= tol:
        # lambda S never moves the objective: vacuously orthogonal
        return decide(0.0, tol, {"lambda": 0j, "minimum": omega_t,
                                 "omega_t": omega_t, "vacuous": True})
    lam, _ = _minimize_over_lambda(A, B, 0, omega_t / omega_s)
    minimum = omega_value(A + lam * B)
    if minimum > omega_t:  # lambda = 0 is always admissible
        lam, minimum = 0j, omega_t
    defect = omega_t - minimum
    witness = {"lambda": lam, "minimum": float(minimum), "omega_t": float(omega_t)}
    return decide(defect, tol, witness)


def birkhoff_norm_orth(T, S, tol: float = DEFAULTS.tol_opt) -> Verdict:
    """T perp S for the operator norm: ||T + lambda S|| >= ||T|| for all lambda."""
    A = as_matrix(T)
    B = as_matrix(S)
    require_same_dim(A, B)
    norm_t = operator_norm(A)
    norm_s = operator_norm(B)
    if norm_s <= tol:
        return decide(0.0, tol, {"lambda": 0j, "minimum": norm_t,
                                 "norm_t": norm_t, "vacuous": True})
    lam, _ = _minimize_over_lambda(A, B, 1, norm_t / norm_s)
    minimum = operator_norm(A + lam * B)
    if minimum > norm_t:
        lam, minimum = 0j, norm_t
    defect = norm_t - minimum
    witness = {"lambda": lam, "minimum": float(minimum), "norm_t": float(norm_t)}
    return decide(defect, tol, witness)


# ---------------------------------------------------------------------------
# Pythagorean relation for the radius
# ---------------------------------------------------------------------------

def pythagorean_radius_orth(T, S, tol: float = DEFAULTS.tol_opt) -> Verdict:
    """omega^2(T + S) = omega^2(T) + omega^2(S) within tol.

    The witness records the signed difference
    omega^2(T+S) - omega^2(T) - omega^2(S); the verdict margin measures the
    distance of its modulus from the tolerance threshold.
    """
    A = as_matrix(T)
    B = as_matrix(S)
    require_same_dim(A, B)
    omega_t = omega_value(A)
    omega_s = omega_value(B)
    omega_ts = omega_value(A + B)
    delta = omega_ts ** 2 - omega_t ** 2 - omega_s ** 2
    witness = {"delta": float(delta), "omega_sum": float(omega_ts),
               "omega_t": float(omega_t), "omega_s": float(omega_s)}
    return decide(abs(delta), tol, witness)


# ---------------------------------------------------------------------------
# Attainment-based certification of radius-Birkhoff orthogonality
# ---------------------------------------------------------------------------

def certify_orth_directional(T, S, n_theta: int = 256,
                             slack: float = DEFAULTS.tol_opt, *,
                             budget: int | None = None,
                             cross_check: bool = True) -> Verdict:
    """Certify T perp S (radius sense) from near-maximizers of T.

    For each direction theta on the grid there must be a sampled
    near-maximizer x of T with

        Re{ e^{-i theta} <Tx,x> conj(<Sx,x>) } >= -slack.

    The sample is finite, so the certificate is approximate: the verdict is
    cross-checked against :func:`birkhoff_radius_orth` and demoted to
    inconclusive when the two disagree (flat attainment manifolds can be
    undersampled).
    """
    A = as_matrix(T)
    B = as_matrix(S)
    require_same_dim(A, B)
    sample = attainment_sample(A, max(slack, 1e-12), budget)
    X = sample.vectors
    f_t = sample.values
    f_s = np.einsum("ki,ij,kj->k", X.conj(), B, X)
    products = f_t * np.conj(f_s)
    thetas = np.arange(n_theta) * (2.0 * math.pi / n_theta)
    table = (np.exp(-1j * thetas)[:, None] * products[None, :]).real
    best_per_theta = table.max(axis=1)
    k_bad = int(np.argmin(best_per_theta))
    c_min = float(best_per_theta[k_bad])
    j_best = int(np.argmax(table[k_bad]))
    witness = {
        "theta": float(thetas[k_bad]),
        "x": X[j_best].copy(),
        "product": complex(products[j_best]),
        "n_sample": int(len(sample)),
    }
    verdict = decide(-c_min, slack, witness)
    if cross_check:
        direct = birkhoff_radius_orth(A, B, slack)
        witness["direct_status"] = direct.status
        if (not direct.inconclusive and not verdict.inconclusive
                and direct.status != verdict.status):
            return Verdict(status=INCONCLUSIVE, margin=verdict.margin,
                           tolerance=verdict.tolerance, witness=witness)
    return verdict


def attainment_sets_equal(T, S, slack: float | None = None) -> Verdict:
    """Compare the near-maximizer sets of T and S modulo global phase.

    Uses the symmetric Hausdorff distance under
    d(x, y) = sqrt(1 - |<x,y>|^2): holds at or below the threshold
    sqrt(2 * slack), fails beyond twice the threshold, inconclusive in the
    factor-two zone between (the sampled sets are finite stand-ins, so the
    comparison is explicitly approximate and its gray zone is one-sided).
    """
    A = as_matrix(T)
    B = as_matrix(S)
    require_same_dim(A, B)
    slack = config.active().attainment_slack if slack is None else float(slack)
    sa = attainment_sample(A, slack)
    sb = attainment_sample(B, slack)
    G = np.abs(sa.vectors.conj() @ sb.vectors.T) ** 2
    D = np.sqrt(np.clip(1.0 - G, 0.0, 1.0))
    h = float(max(D.min(axis=1).max(), D.min(axis=0).max()))
    threshold = math.sqrt(2.0 * slack)
    witness = {"hausdorff": h, "threshold": threshold,
               "n_t": len(sa), "n_s": len(sb)}
    if h <= threshold:
        status = HOLDS
    elif h > 2.0 * threshold:
        status = FAILS
    else:
        status = INCONCLUSIVE
    return Verdict(status=status, margin=float(threshold - h),
                   tolerance=float(0.5 * threshold), witness=witness)
