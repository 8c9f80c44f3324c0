"""Claim verification and counterexample search.

The harness replays the worked fixtures, property-tests each implication on
seeded random ensembles, and hunts counterexamples for the flagged claims.
Claims are never hard-coded as true: a would-be violation is re-checked
against the deciders at ten-fold tighter tolerance before it is recorded,
and premise-free trials are accounted as vacuous rather than supported.

Conditional claims get their premises by targeted construction (metric
projection onto the orthogonality set, quadratic-form deflation at a radius
maximizer, structured spectral families) followed by decider gating, since
uniform sampling essentially never satisfies equality premises.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from .config import DEFAULTS
from .ensembles import Ensemble, draw, standard_complex
from .linalg import as_matrix, operator_norm, quad_form
from .orthogonality import (
    _minimize_over_lambda,
    attainment_sets_equal,
    birkhoff_norm_orth,
    birkhoff_radius_orth,
    certify_orth_directional,
    pythagorean_radius_orth,
    usual_orthogonal,
)
from .parallelism import radius_parallel, triangle_equality
from .radius import (
    attainment_sample,
    numerical_radius,
    omega_value,
    radius_2x2_triangular,
    radius_oracle_2x2,
)

SUPPORTED = "supported"
VIOLATED = "violated"
INCONCLUSIVE_TRIAL = "inconclusive"
VACUOUS = "vacuous"


@dataclass(frozen=True)
class ClaimReport:
    """Tally of one claim over a batch of trials.

    ``vacuous`` counts premise-failed trials; they are a subset of
    ``inconclusive`` so that supported + violated + inconclusive = trials.
    """

    claim_id: str
    trials: int
    supported: int
    violated: int
    inconclusive: int
    vacuous: int
    worst_witness: dict[str, Any] | None = None
    note: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "trials": self.trials,
            "supported": self.supported,
            "violated": self.violated,
            "inconclusive": self.inconclusive,
            "vacuous": self.vacuous,
            "worst_witness": self.worst_witness,
            "note": self.note,
        }


def _ser_complex(z: complex) -> list[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def _ser_matrix(M) -> list[list[list[float]]]:
    return [[_ser_complex(z) for z in row] for row in np.asarray(M)]


# ---------------------------------------------------------------------------
# premise constructions
# ---------------------------------------------------------------------------

def project_left_orthogonal(T, S) -> np.ndarray:
    """Shift T along S so that the result is radius-orthogonal to S.

    T' = T + lambda* S with lambda* minimizing omega(T + lambda S); then the
    minimum over further shifts of T' is attained at zero.
    """
    A = as_matrix(T)
    B = as_matrix(S)
    w_t = omega_value(A)
    w_s = omega_value(B)
    if w_s <= 1e-12:
        return A
    lam, _ = _minimize_over_lambda(A, B, 0, max(w_t / w_s, 1e-3))
    return A + lam * B


def deflate_at_maximizer(T, S0) -> np.ndarray:
    """Remove the quadratic form of S0 at a radius maximizer of T.

    With x* attaining omega(T), the result S satisfies <S x*, x*> = 0, so
    omega(T + lambda S) >= |<(T + lambda S) x*, x*>| = omega(T): a
    right-argument orthogonality construction (exact when T attains at x*).
    """
    x = numerical_radius(T).x_star
    c = quad_form(S0, x)
    return as_matrix(S0) - c * np.outer(x, x.conj())


def _balanced_hermitian_pair(rng: np.random.Generator, dim: int
                             ) -> tuple[np.ndarray, np.ndarray]:
    """Hermitian T with symmetric extreme spectrum, and S orthogonal to it.

    T = U diag(a, -a, ...) U^H attains its radius at both extreme
    eigenvectors with opposite signs; giving S quadratic forms w and c w
    (same phase, c > 0) at those two vectors forces
    c|a + lam w| + |-a + lam c w| >= (1 + c) a, hence omega(T + lam S) >= a.
    """
    U = draw("unitary", dim, rng)
    a = 0.5 + rng.random()
    diag_t = np.zeros(dim)
    diag_t[0] = a
    diag_t[1] = -a
    if dim > 2:
        diag_t[2:] = (2.0 * rng.random(dim - 2) - 1.0) * 0.7 * a
    T = (U * diag_t) @ U.conj().T
    w = standard_complex(rng, ())
    if abs(w) < 0.2:
        w = 0.2 + 0.1j
    c = 0.3 + 2.0 * rng.random()
    B = 0.5 * standard_complex(rng, (dim, dim))
    B[0, 0] = w
    B[1, 1] = c * w
    S = U @ B @ U.conj().T
    return T, S


def _shift_coshift_pair(rng: np.random.Generator, dim: int
                        ) -> tuple[np.ndarray, np.ndarray]:
    """Pair with omega(e^{-i theta} T + S) = omega(T) + omega(S) for every theta.

    T and S act as a weighted shift and its reversal on a common 2-plane:
    quadratic forms cover full circles of phases, so the triangle equality
    is attained in every direction.
    """
    a = 0.3 + 2.0 * rng.random()
    b = 0.3 + 2.0 * rng.random()
    T0 = np.zeros((dim, dim), dtype=np.complex128)
    S0 = np.zeros((dim, dim), dtype=np.complex128)
    T0[0, 1] = 2.0 * a
    S0[1, 0] = 2.0 * b
    U = draw("unitary", dim, rng)
    return U @ T0 @ U.conj().T, U @ S0 @ U.conj().T


def _positive_pair(rng: np.random.Generator, dim: int, mode: int
                   ) -> tuple[np.ndarray, np.ndarray]:
    """Positive semidefinite pairs; structured modes have singular overlap."""
    if mode == 0:
        return (draw("positive_semidefinite", dim, rng),
                draw("positive_semidefinite", dim, rng))
    U = draw("unitary", dim, rng)
    u1 = U[:, 0]
    u2 = U[:, 1]
    s = 0.3 + 2.0 * rng.random()
    t = 0.3 + 2.0 * rng.random()
    if mode == 1:
        # rank-deficient T against a full-rank S
        return t * np.outer(u1, u1.conj()), draw("positive_semidefinite", dim, rng)
    # orthogonal rank-one supports: T attains where S vanishes
    return t * np.outer(u1, u1.conj()), s * np.outer(u2, u2.conj())


# ---------------------------------------------------------------------------
# trial helpers
# ---------------------------------------------------------------------------

def _pair_witness(T, S, extra: dict[str, Any] | None = None) -> dict[str, Any]:
    w: dict[str, Any] = {"T": _ser_matrix(T), "S": _ser_matrix(S)}
    if extra:
        w.update(extra)
    return w


def _confirmed_fails(T, S, tol_opt: float) -> bool:
    return birkhoff_radius_orth(T, S, tol_opt / 10.0).fails


def _confirmed_holds(T, S, tol_opt: float) -> bool:
    return birkhoff_radius_orth(T, S, tol_opt / 10.0).holds


# ---------------------------------------------------------------------------
# registered claims; each returns (status, margin, witness-or-None)
# ---------------------------------------------------------------------------

Trial = tuple[str, float, dict[str, Any] | None]


def _claim_radius_norm_sandwich(rng, ens: Ensemble, tol_alg, tol_opt) -> Trial:
    T = draw(ens.kind, ens.dim, rng)
    w = omega_value(T)
    nm = operator_norm(T)
    tol = 1e-8
    slack_upper = nm + tol - w
    slack_lower = 2.0 * w + tol - nm
    margin = min(slack_upper, slack_lower)
    if margin >= 0.0:
        return SUPPORTED, margin, None
    # re-check with a four-fold finer sweep before recording
    w2 = omega_value(T, grid=4 * DEFAULTS.theta_grid)
    margin2 = min(nm + tol / 10.0 - w2, 2.0 * w2 + tol / 10.0 - nm)
    if margin2 < 0.0:
        return VIOLATED, margin2, _pair_witness(T, T, {"omega": w2, "norm": nm})
    return INCONCLUSIVE_TRIAL, margin, None


def _claim_nondegeneracy(rng, ens: Ensemble, tol_alg, tol_opt) -> Trial:
    T = draw(ens.kind, ens.dim, rng)
    if omega_value(T) <= 10.0 * tol_opt:
        return VACUOUS, 0.0, None
    v = birkhoff_radius_orth(T, T, tol_opt)
    if v.fails:
        return SUPPORTED, -v.margin, None
    if v.holds and _confirmed_holds(T, T, tol_opt):
        return VIOLATED, v.margin, _pair_witness(T, T, {"verdict": v.status})
    return INCONCLUSIVE_TRIAL, v.margin, None


def _claim_homogeneity(rng, ens: Ensemble, tol_alg, tol_opt) -> Trial:
    T0 = draw(ens.kind, ens.dim, rng)
    S = draw(ens.kind, ens.dim, rng)
    T = project_left_orthogonal(T0, S)
    if not birkhoff_radius_orth(T, S, tol_opt).holds:
        return VACUOUS, 0.0, None
    alpha = standard_complex(rng, ())
    beta = standard_complex(rng, ())
    alpha += 0.3 * alpha / max(abs(alpha), 1e-9)
    beta += 0.3 * beta / max(abs(beta), 1e-9)
    v = birkhoff_radius_orth(alpha * T, beta * S, tol_opt * abs(alpha))
    if v.holds:
        return SUPPORTED, v.margin, None
    if v.fails and birkhoff_radius_orth(alpha * T, beta * S,
                                        tol_opt * abs(alpha) / 10.0).fails:
        return VIOLATED, v.margin, _pair_witness(
            alpha * T, beta * S, {"alpha": _ser_complex(alpha),
                                  "beta": _ser_complex(beta)})
    return INCONCLUSIVE_TRIAL, v.margin, None


def _claim_adjoint_stability(rng, ens: Ensemble, tol_alg, tol_opt) -> Trial:
    T = draw(ens.kind, ens.dim, rng)
    S = draw(ens.kind, ens.dim, rng)
    if rng.integers(2):
        T = project_left_orthogonal(T, S)
    v1 = birkhoff_radius_orth(T, S, tol_opt)
    v2 = birkhoff_radius_orth(T.conj().T, S.conj().T, tol_opt)
    if v1.inconclusive or v2.inconclusive:
        return INCONCLUSIVE_TRIAL, min(abs(v1.margin), abs(v2.margin)), None
    if v1.status == v2.status:
        return SUPPORTED, min(abs(v1.margin), abs(v2.margin)), None
    w1 = birkhoff_radius_orth(T, S, tol_opt / 10.0)
    w2 = birkhoff_radius_orth(T.conj().T, S.conj().T, tol_opt / 10.0)
    if not w1.inconclusive and not w2.inconclusive and w1.status != w2.status:
        return VIOLATED, min(abs(v1.margin), abs(v2.margin)), _pair_witness(
            T, S, {"status": v1.status, "adjoint_status": v2.status})
    return INCONCLUSIVE_TRIAL, min(abs(v1.margin), abs(v2.margin)), None


def _claim_hermitian_orth_descent(rng, ens: Ensemble, tol_alg, tol_opt) -> Trial:
    T, S = _balanced_hermitian_pair(rng, ens.dim)
    if not birkhoff_radius_orth(T, S, tol_opt).holds:
        return VACUOUS, 0.0, None
    v = birkhoff_norm_orth(T, S, tol_opt)
    if not v.fails:
        return SUPPORTED, v.margin, None
    if birkhoff_norm_orth(T, S, tol_opt / 10.0).fails:
        return VIOLATED, v.margin, _pair_witness(T, S, {"norm_verdict": "fails"})
    return INCONCLUSIVE_TRIAL, v.margin, None


def _claim_square_zero_lift(rng, ens: Ensemble, tol_alg, tol_opt) -> Trial:
    T = draw("nilpotent_square_zero", ens.dim, rng)
    if operator_norm(T) <= 0.1:
        return VACUOUS, 0.0, None
    S0 = draw("general", ens.dim, rng)
    # deflate at a norming pair: <y*, S x*> = 0 keeps ||T + lam S|| >= ||T||
    _, sv, Vh = np.linalg.svd(T)
    x = Vh[0].conj()
    y = T @ x / sv[0]
    c = np.vdot(y, S0 @ x)
    S = S0 - c * np.outer(y, x.conj())
    if not birkhoff_norm_orth(T, S, tol_opt).holds:
        return VACUOUS, 0.0, None
    v = birkhoff_radius_orth(T, S, tol_opt)
    if v.holds:
        return SUPPORTED, v.margin, None
    if v.fails and _confirmed_fails(T, S, tol_opt):
        return VIOLATED, v.margin, _pair_witness(T, S)
    return INCONCLUSIVE_TRIAL, v.margin, None


def _claim_identity_symmetry(rng, ens: Ensemble, tol_alg, tol_opt) -> Trial:
    T0 = draw(ens.kind, ens.dim, rng)
    eye = np.eye(ens.dim, dtype=np.complex128)
    T = project_left_orthogonal(T0, eye)
    if not birkhoff_radius_orth(T, eye, tol_opt).holds:
        return VACUOUS, 0.0, None
    v = birkhoff_radius_orth(eye, T, tol_opt)
    if not v.fails:
        return SUPPORTED, v.margin, None
    if _confirmed_fails(eye, T, tol_opt):
        return VIOLATED, v.margin, _pair_witness(eye, T)
    return INCONCLUSIVE_TRIAL, v.margin, None


def _claim_surjective_usual_collapse(rng, ens: Ensemble, tol_alg, tol_opt) -> Trial:
    S = draw("general", ens.dim, rng)
    for _ in range(16):
        if np.linalg.svd(S, compute_uv=False)[-1] >= 0.2:
            break
        S = draw("general", ens.dim, rng)
    else:
        return VACUOUS, 0.0, None
    T = draw("general", ens.dim, rng)
    if operator_norm(T) <= 0.1:
        return VACUOUS, 0.0, None
    v = usual_orthogonal(S, T, tol_alg)
    if v.fails:
        return SUPPORTED, -v.margin, None
    if v.holds and usual_orthogonal(S, T, tol_alg / 10.0).holds:
        return VIOLATED, v.margin, _pair_witness(S, T)
    return INCONCLUSIVE_TRIAL, v.margin, None


def _claim_positive_pair_orthogonality(rng, ens: Ensemble, tol_alg, tol_opt) -> Trial:
    mode = int(rng.integers(4))
    T, S = _positive_pair(rng, ens.dim, min(mode, 2))
    if omega_value(S) <= 0.05:
        return VACUOUS, 0.0, None
    v = birkhoff_radius_orth(T, S, tol_opt)
    if v.fails:
        return SUPPORTED, -v.margin, None
    if v.holds and _confirmed_holds(T, S, tol_opt):
        # the claim says positive pairs are never orthogonal: this is a
        # decider-confirmed counterexample
        return VIOLATED, v.margin, _pair_witness(
            T, S, {"minimum": v.witness["minimum"],
                   "omega_t": v.witness["omega_t"],
                   "lambda": _ser_complex(v.witness["lambda"])})
    return INCONCLUSIVE_TRIAL, v.margin, None


def _claim_positive_additivity(rng, ens: Ensemble, tol_alg, tol_opt) -> Trial:
    dim = ens.dim
    mode = int(rng.integers(3))
    U = draw("unitary", dim, rng)
    if mode == 0:
        S = draw("positive_semidefinite", dim, rng)
        Uu = draw("positive_semidefinite", dim, rng)
        T = draw(ens.kind if ens.kind != "positive_semidefinite" else "general",
                 dim, rng)
    else:
        u1, u2 = U[:, 0], U[:, 1]
        S = (0.3 + 2.0 * rng.random()) * np.outer(u1, u1.conj())
        if mode == 1:
            Uu = (0.3 + 2.0 * rng.random()) * np.outer(u1, u1.conj())
        else:
            Uu = (0.3 + 2.0 * rng.random()) * np.outer(u2, u2.conj())
        T = draw("general", dim, rng)
        if rng.integers(2):
            # put the radius attainment of T away from the supports
            T = (0.5 + rng.random()) * np.outer(U[:, dim - 1], U[:, dim - 1].conj())
    v_s = birkhoff_radius_orth(T, S, tol_opt)
    v_u = birkhoff_radius_orth(T, Uu, tol_opt)
    v_su = birkhoff_radius_orth(T, S + Uu, tol_opt)
    if v_s.inconclusive or v_u.inconclusive or v_su.inconclusive:
        return INCONCLUSIVE_TRIAL, 0.0, None
    lhs = v_s.holds and v_u.holds
    rhs = v_su.holds
    if lhs == rhs:
        return SUPPORTED, min(abs(v_s.margin), abs(v_u.margin), abs(v_su.margin)), None
    tight = tol_opt / 10.0
    w_s = birkhoff_radius_orth(T, S, tight)
    w_u = birkhoff_radius_orth(T, Uu, tight)
    w_su = birkhoff_radius_orth(T, S + Uu, tight)
    if (not w_s.inconclusive and not w_u.inconclusive and not w_su.inconclusive
            and (w_s.holds and w_u.holds) != w_su.holds):
        return VIOLATED, abs(v_su.margin), _pair_witness(
            T, S, {"U": _ser_matrix(Uu), "lhs": lhs, "rhs": rhs})
    return INCONCLUSIVE_TRIAL, 0.0, None


def _claim_orth_implies_triangle(rng, ens: Ensemble, tol_alg, tol_opt) -> Trial:
    dim = ens.dim
    family = int(rng.integers(3))
    T = draw(ens.kind, dim, rng)
    if omega_value(T) <= 0.1:
        return VACUOUS, 0.0, None
    if family == 0:
        S = (0.2 + 2.3 * rng.random()) * T
    elif family == 1:
        S = draw(ens.kind, dim, rng)
    else:
        D = deflate_at_maximizer(T, draw(ens.kind, dim, rng))
        c = 10.0 ** (1.0 + 2.0 * rng.random())  # 10..1000
        S = c * T + D
    w_t = omega_value(T)
    w_s = omega_value(S)
    U = w_t * S - w_s * T
    if not birkhoff_radius_orth(T, U, tol_opt).holds:
        return VACUOUS, 0.0, None
    scale = 1.0 + w_t + w_s
    v = triangle_equality(T, S, tol_opt * scale)
    if v.holds:
        return SUPPORTED, v.margin, None
    if v.fails and abs(v.witness["delta"]) > 10.0 * tol_opt * scale \
            and birkhoff_radius_orth(T, U, tol_opt / 10.0).holds:
        return VIOLATED, v.margin, _pair_witness(T, S, {"delta": v.witness["delta"]})
    return INCONCLUSIVE_TRIAL, v.margin, None


def _claim_all_theta_parallel_implies_orth(rng, ens: Ensemble, tol_alg, tol_opt) -> Trial:
    dim = ens.dim
    structured = rng.random() < 0.8
    if structured:
        T, S = _shift_coshift_pair(rng, dim)
    else:
        T = draw(ens.kind, dim, rng)
        S = draw(ens.kind, dim, rng)
    w_t = omega_value(T)
    w_s = omega_value(S)
    if w_t <= 0.05 or w_s <= 0.05:
        return VACUOUS, 0.0, None
    target = w_t + w_s
    scale = 1.0 + target
    for k in range(16):
        theta = 2.0 * np.pi * k / 16.0
        if abs(omega_value(np.exp(-1j * theta) * T + S) - target) > tol_opt * scale:
            return VACUOUS, 0.0, None
    U = w_s * T - w_t * S
    v = birkhoff_radius_orth(T, U, tol_opt * scale)
    if v.holds:
        return SUPPORTED, v.margin, None
    if v.fails and birkhoff_radius_orth(T, U, tol_opt * scale / 10.0).fails:
        return VIOLATED, v.margin, _pair_witness(T, S)
    return INCONCLUSIVE_TRIAL, v.margin, None


def _claim_positive_shift(rng, ens: Ensemble, tol_alg, tol_opt) -> Trial:
    dim = ens.dim
    eye = np.eye(dim, dtype=np.complex128)
    structured = rng.random() < 0.5
    T = draw("positive_semidefinite", dim, rng)
    if structured:
        S = deflate_at_maximizer(T, draw("general", dim, rng))
    else:
        S = draw("general", dim, rng)
    v1 = birkhoff_radius_orth(T, S, tol_opt)
    v2 = birkhoff_radius_orth(T + eye, S, tol_opt)
    if v1.inconclusive or v2.inconclusive:
        return INCONCLUSIVE_TRIAL, min(abs(v1.margin), abs(v2.margin)), None
    if v1.status == v2.status:
        return SUPPORTED, min(abs(v1.margin), abs(v2.margin)), None
    tight = tol_opt / 10.0
    w1 = birkhoff_radius_orth(T, S, tight)
    w2 = birkhoff_radius_orth(T + eye, S, tight)
    if not w1.inconclusive and not w2.inconclusive and w1.status != w2.status:
        return VIOLATED, min(abs(v1.margin), abs(v2.margin)), _pair_witness(
            T, S, {"status": v1.status, "shifted_status": v2.status})
    return INCONCLUSIVE_TRIAL, min(abs(v1.margin), abs(v2.margin)), None


def _claim_hermitian_skew_parallel_pythagorean(rng, ens: Ensemble,
                                               tol_alg, tol_opt) -> Trial:
    dim = ens.dim
    mode = int(rng.integers(3))
    if mode == 0:
        T = (0.3 + 2.0 * rng.random()) * np.eye(dim, dtype=np.complex128)
    else:
        T = draw("hermitian", dim, rng)
    if mode == 1:
        S = 1j * (0.3 + 2.0 * rng.random()) * np.eye(dim, dtype=np.complex128)
    else:
        S = draw("skew_hermitian", dim, rng)
    v_par = radius_parallel(T, S, tol_opt)
    v_pyt = pythagorean_radius_orth(T, S, tol_opt)
    if v_par.inconclusive or v_pyt.inconclusive:
        return INCONCLUSIVE_TRIAL, 0.0, None
    if v_par.holds == v_pyt.holds:
        return SUPPORTED, min(abs(v_par.margin), abs(v_pyt.margin)), None
    tight = tol_opt / 10.0
    w_par = radius_parallel(T, S, tight)
    w_pyt = pythagorean_radius_orth(T, S, tight)
    if (not w_par.inconclusive and not w_pyt.inconclusive
            and w_par.holds != w_pyt.holds):
        return VIOLATED, min(abs(v_par.margin), abs(v_pyt.margin)), _pair_witness(
            T, S, {"parallel": v_par.status, "pythagorean": v_pyt.status})
    return INCONCLUSIVE_TRIAL, 0.0, None


def _claim_sum_difference_attainment(rng, ens: Ensemble, tol_alg, tol_opt) -> Trial:
    dim = ens.dim
    if rng.random() < 0.6:
        T = draw("hermitian", dim, rng)
        S = draw("skew_hermitian", dim, rng)
    else:
        T = draw(ens.kind, dim, rng)
        S = draw(ens.kind, dim, rng)
    w_plus = omega_value(T + S)
    w_minus = omega_value(T - S)
    scale = 1.0 + w_plus + w_minus
    eq = abs(w_plus - w_minus) <= tol_opt * scale
    att = attainment_sets_equal(T + S, T - S)
    if att.inconclusive:
        return INCONCLUSIVE_TRIAL, 0.0, None
    side1 = eq and att.holds
    sample_p = attainment_sample(T + S)
    sample_m = attainment_sample(T - S)
    X = np.vstack([sample_p.vectors, sample_m.vectors])
    f_t = np.einsum("ki,ij,kj->k", X.conj(), T, X)
    f_s = np.einsum("ki,ij,kj->k", X.conj(), S, X)
    re_max = float(np.abs((f_t * np.conj(f_s)).real).max())
    re_tol = 100.0 * tol_opt * (1.0 + omega_value(T)) * (1.0 + omega_value(S))
    side2 = re_max <= re_tol
    if side1 == side2:
        return SUPPORTED, re_tol - re_max, None
    if side1 and not side2:
        # witness vector falsifies the real-part condition directly
        k = int(np.argmax(np.abs((f_t * np.conj(f_s)).real)))
        return VIOLATED, re_max - re_tol, _pair_witness(
            T, S, {"re_value": float((f_t[k] * np.conj(f_s[k])).real)})
    # side2 true by sampling but side1 false: possibly undersampled sets
    return INCONCLUSIVE_TRIAL, 0.0, None


def _herm_skew_conditional_pair(rng, dim: int) -> tuple[np.ndarray, np.ndarray]:
    mode = int(rng.integers(3))
    if mode == 0:
        T = (0.3 + 2.0 * rng.random()) * np.eye(dim, dtype=np.complex128)
        S = draw("skew_hermitian", dim, rng)
    elif mode == 1:
        T = draw("hermitian", dim, rng)
        S = 1j * (0.3 + 2.0 * rng.random()) * np.eye(dim, dtype=np.complex128)
    else:
        T = draw("hermitian", dim, rng)
        S = draw("skew_hermitian", dim, rng)
    return T, S


def _claim_sum_difference_parallel(rng, ens: Ensemble, tol_alg, tol_opt) -> Trial:
    T, S = _herm_skew_conditional_pair(rng, ens.dim)
    w_plus = omega_value(T + S)
    w_minus = omega_value(T - S)
    scale = 1.0 + w_plus + w_minus
    if abs(w_plus - w_minus) > tol_opt * scale:
        return VACUOUS, 0.0, None
    if not pythagorean_radius_orth(T, S, tol_opt).holds:
        return VACUOUS, 0.0, None
    p1 = radius_parallel(T, S, tol_opt)
    p2 = radius_parallel(T + S, T - S, tol_opt)
    if p1.inconclusive or p2.inconclusive:
        return INCONCLUSIVE_TRIAL, 0.0, None
    if p1.holds == p2.holds:
        return SUPPORTED, min(abs(p1.margin), abs(p2.margin)), None
    tight = tol_opt / 10.0
    q1 = radius_parallel(T, S, tight)
    q2 = radius_parallel(T + S, T - S, tight)
    if not q1.inconclusive and not q2.inconclusive and q1.holds != q2.holds:
        return VIOLATED, min(abs(p1.margin), abs(p2.margin)), _pair_witness(
            T, S, {"parallel_ts": p1.status, "parallel_sum_diff": p2.status})
    return INCONCLUSIVE_TRIAL, 0.0, None


def _claim_parallel_pythagorean_symmetry(rng, ens: Ensemble, tol_alg, tol_opt) -> Trial:
    T, S = _herm_skew_conditional_pair(rng, ens.dim)
    if not radius_parallel(S, T, tol_opt).holds:
        return VACUOUS, 0.0, None
    if not radius_parallel(T + S, T - S, tol_opt).holds:
        return VACUOUS, 0.0, None
    w_plus = omega_value(T + S)
    w_minus = omega_value(T - S)
    scale = 1.0 + w_plus + w_minus
    eq = abs(w_plus - w_minus) <= tol_opt * scale
    pyt = pythagorean_radius_orth(T, S, tol_opt)
    if pyt.inconclusive:
        return INCONCLUSIVE_TRIAL, 0.0, None
    if pyt.holds == eq:
        return SUPPORTED, abs(pyt.margin), None
    if pythagorean_radius_orth(T, S, tol_opt / 10.0).holds != eq:
        return VIOLATED, abs(pyt.margin), _pair_witness(
            T, S, {"pythagorean": pyt.status, "radii_equal": eq})
    return INCONCLUSIVE_TRIAL, 0.0, None


def _claim_shared_attainment_symmetry(rng, ens: Ensemble, tol_alg, tol_opt) -> Trial:
    dim = ens.dim
    if rng.random() < 0.7:
        U = draw("unitary", dim, rng)
        a = 0.5 + rng.random()
        d_t = np.zeros(dim)
        d_t[0], d_t[1] = a, -a
        T = (U * d_t) @ U.conj().T
        w = standard_complex(rng, ())
        gamma = 0.3 + 5.0 * rng.random()
        d_s = np.zeros(dim, dtype=np.complex128)
        d_s[0], d_s[1] = w, w * np.exp(1j * gamma)
        S = (U * d_s) @ U.conj().T
    else:
        T = draw(ens.kind, dim, rng)
        S = draw(ens.kind, dim, rng)
    att = attainment_sets_equal(T, S)
    if not att.holds:
        return VACUOUS, 0.0, None
    v1 = birkhoff_radius_orth(T, S, tol_opt)
    v2 = birkhoff_radius_orth(S, T, tol_opt)
    if v1.inconclusive or v2.inconclusive:
        return INCONCLUSIVE_TRIAL, 0.0, None
    if v1.status == v2.status:
        return SUPPORTED, min(abs(v1.margin), abs(v2.margin)), None
    tight = tol_opt / 10.0
    w1 = birkhoff_radius_orth(T, S, tight)
    w2 = birkhoff_radius_orth(S, T, tight)
    if not w1.inconclusive and not w2.inconclusive and w1.status != w2.status:
        return VIOLATED, 0.0, _pair_witness(
            T, S, {"forward": v1.status, "backward": v2.status})
    return INCONCLUSIVE_TRIAL, 0.0, None


def _claim_triangle_witness_consistency(rng, ens: Ensemble, tol_alg, tol_opt) -> Trial:
    dim = ens.dim
    if rng.random() < 0.4:
        T = draw(ens.kind, dim, rng)
        S = (0.2 + 2.0 * rng.random()) * T
    else:
        T = draw(ens.kind, dim, rng)
        S = draw(ens.kind, dim, rng)
    v = triangle_equality(T, S, tol_opt)
    if v.inconclusive:
        return INCONCLUSIVE_TRIAL, 0.0, None
    if v.witness["witness_ok"] == v.holds:
        return SUPPORTED, abs(v.margin), None
    return INCONCLUSIVE_TRIAL, abs(v.margin), None


def _claim_certifier_consistency(rng, ens: Ensemble, tol_alg, tol_opt) -> Trial:
    T = draw(ens.kind, ens.dim, rng)
    S = draw(ens.kind, ens.dim, rng)
    if rng.integers(2):
        T = project_left_orthogonal(T, S)
    cert = certify_orth_directional(T, S)
    direct = birkhoff_radius_orth(T, S, tol_opt)
    if cert.inconclusive or direct.inconclusive:
        return INCONCLUSIVE_TRIAL, 0.0, None
    if cert.status == direct.status:
        return SUPPORTED, abs(cert.margin), None
    # cross-checked internally: plain disagreement should have demoted itself
    return VIOLATED, abs(cert.margin), _pair_witness(
        T, S, {"certificate": cert.status, "direct": direct.status})


@dataclass(frozen=True)
class ClaimSpec:
    fn: Callable[..., Trial]
    default_kind: str
    default_dim: int
    description: str


REGISTRY: dict[str, ClaimSpec] = {
    "radius_norm_sandwich": ClaimSpec(
        _claim_radius_norm_sandwich, "general", 3,
        "radius <= norm <= twice the radius"),
    "nondegeneracy": ClaimSpec(
        _claim_nondegeneracy, "general", 2,
        "no nonzero matrix is radius-orthogonal to itself"),
    "homogeneity": ClaimSpec(
        _claim_homogeneity, "general", 2,
        "orthogonality survives nonzero complex scaling of both sides"),
    "adjoint_stability": ClaimSpec(
        _claim_adjoint_stability, "general", 2,
        "verdicts agree for (T, S) and their adjoints"),
    "hermitian_orth_descent": ClaimSpec(
        _claim_hermitian_orth_descent, "general", 2,
        "Hermitian left argument: radius orthogonality implies norm orthogonality"),
    "square_zero_lift": ClaimSpec(
        _claim_square_zero_lift, "nilpotent_square_zero", 2,
        "square-zero left argument: norm orthogonality implies radius orthogonality"),
    "identity_symmetry": ClaimSpec(
        _claim_identity_symmetry, "general", 2,
        "orthogonality to the identity is symmetric"),
    "surjective_usual_collapse": ClaimSpec(
        _claim_surjective_usual_collapse, "general", 2,
        "an invertible S is usually-orthogonal to nonzero T never"),
    "positive_pair_orthogonality": ClaimSpec(
        _claim_positive_pair_orthogonality, "positive_semidefinite", 2,
        "claimed: positive pairs are never radius-orthogonal (search target)"),
    "positive_additivity": ClaimSpec(
        _claim_positive_additivity, "general", 2,
        "claimed: orthogonality to positive S and U equals orthogonality to S+U"),
    "orth_implies_triangle": ClaimSpec(
        _claim_orth_implies_triangle, "general", 2,
        "orthogonality to omega(T)S - omega(S)T forces triangle equality"),
    "all_theta_parallel_implies_orth": ClaimSpec(
        _claim_all_theta_parallel_implies_orth, "general", 2,
        "triangle equality in every direction forces orthogonality to omega(S)T - omega(T)S"),
    "positive_shift": ClaimSpec(
        _claim_positive_shift, "positive_semidefinite", 2,
        "positive T: orthogonality to S is equivalent after adding the identity"),
    "hermitian_skew_parallel_pythagorean": ClaimSpec(
        _claim_hermitian_skew_parallel_pythagorean, "hermitian", 2,
        "Hermitian/skew pairs: parallelism equals the Pythagorean relation"),
    "sum_difference_attainment": ClaimSpec(
        _claim_sum_difference_attainment, "general", 2,
        "equal radii and attainment of T+S and T-S equal the vanishing real-part condition"),
    "sum_difference_parallel": ClaimSpec(
        _claim_sum_difference_parallel, "hermitian", 2,
        "conditional equivalence of T || S and (T+S) || (T-S)"),
    "parallel_pythagorean_symmetry": ClaimSpec(
        _claim_parallel_pythagorean_symmetry, "hermitian", 2,
        "conditional equivalence of the Pythagorean relation and radius equality"),
    "shared_attainment_symmetry": ClaimSpec(
        _claim_shared_attainment_symmetry, "general", 2,
        "equal attainment sets make radius orthogonality symmetric"),
    "triangle_witness_consistency": ClaimSpec(
        _claim_triangle_witness_consistency, "general", 2,
        "direct and witness-based triangle equality checks agree"),
    "certifier_consistency": ClaimSpec(
        _claim_certifier_consistency, "general", 2,
        "directional certificate agrees with the direct decider"),
}


def counterexample_search(claim_id: str, ensemble: Ensemble, budget: int, *,
                          stop_at_first: bool = True,
                          tol_algebraic: float = DEFAULTS.tol_algebraic,
                          tol_opt: float = DEFAULTS.tol_opt) -> ClaimReport:
    """Seeded, reproducible falsification run for a registered claim.

    Stops at the first confirmed violation when ``stop_at_first`` (the
    default for searches); property suites run the full budget.  The worst
    witness is the violation with the smallest margin.
    """
    if claim_id not in REGISTRY:
        raise KeyError(f"unknown claim id {claim_id!r}")
    spec = REGISTRY[claim_id]
    rng = np.random.default_rng(ensemble.seed)
    trials = budget if budget > 0 else ensemble.count
    supported = violated = inconclusive = vacuous = 0
    worst: dict[str, Any] | None = None
    worst_margin = np.inf
    executed = 0
    for _ in range(trials):
        status, margin, witness = spec.fn(rng, ensemble, tol_algebraic, tol_opt)
        executed += 1
        if status == SUPPORTED:
            supported += 1
        elif status == VIOLATED:
            violated += 1
            if witness is not None and margin < worst_margin:
                worst_margin = margin
                worst = dict(witness, margin=float(margin))
            if stop_at_first:
                break
        elif status == VACUOUS:
            inconclusive += 1
            vacuous += 1
        else:
            inconclusive += 1
    return ClaimReport(claim_id=claim_id, trials=executed, supported=supported,
                       violated=violated, inconclusive=inconclusive,
                       vacuous=vacuous, worst_witness=worst)


def _merge_reports(claim_id: str, reports: list[ClaimReport]) -> ClaimReport:
    worst = None
    worst_margin = np.inf
    for r in reports:
        if r.worst_witness is not None:
            m = r.worst_witness.get("margin", 0.0)
            if m < worst_margin:
                worst_margin = m
                worst = r.worst_witness
    return ClaimReport(
        claim_id=claim_id,
        trials=sum(r.trials for r in reports),
        supported=sum(r.supported for r in reports),
        violated=sum(r.violated for r in reports),
        inconclusive=sum(r.inconclusive for r in reports),
        vacuous=sum(r.vacuous for r in reports),
        worst_witness=worst,
        note="; ".join(f"{r.claim_id}:{r.supported}/{r.trials}" for r in reports),
    )


def _sub_ensemble(ensemble: Ensemble, kind: str, offset: int) -> Ensemble:
    return Ensemble(kind=kind, dim=ensemble.dim,
                    seed=ensemble.seed + offset, count=ensemble.count)


def check_positive_shift(ensemble: Ensemble, **tols) -> ClaimReport:
    """Both directions of the identity-shift equivalence for positive T."""
    return counterexample_search("positive_shift", ensemble, ensemble.count,
                                 stop_at_first=False, **tols)


def check_orth_triangle_transfer(ensemble: Ensemble, **tols) -> ClaimReport:
    """Orthogonality-to-combination premises and triangle equality, both ways."""
    r1 = counterexample_search("orth_implies_triangle", ensemble,
                               ensemble.count, stop_at_first=False, **tols)
    r2 = counterexample_search(
        "all_theta_parallel_implies_orth",
        _sub_ensemble(ensemble, ensemble.kind, 1), ensemble.count,
        stop_at_first=False, **tols)
    return _merge_reports("orth_triangle_transfer", [r1, r2])


def check_positive_pairs(ensemble: Ensemble, **tols) -> ClaimReport:
    """Falsification targets for positive operator pairs.

    Violations here are reported, not asserted away: the orthogonal
    rank-one construction is expected to produce decider-confirmed
    counterexamples to the never-orthogonal claim.
    """
    r1 = counterexample_search("positive_pair_orthogonality", ensemble,
                               ensemble.count, stop_at_first=False, **tols)
    r2 = counterexample_search("positive_additivity",
                               _sub_ensemble(ensemble, "general", 1),
                               ensemble.count, stop_at_first=False, **tols)
    return _merge_reports("positive_pairs", [r1, r2])


def check_parallel_pythagorean(ensemble: Ensemble, **tols) -> ClaimReport:
    """Parallelism, Pythagorean relation, and sum/difference equivalences."""
    reports = [
        counterexample_search("hermitian_skew_parallel_pythagorean",
                              _sub_ensemble(ensemble, "hermitian", 0),
                              ensemble.count, stop_at_first=False, **tols),
        counterexample_search("sum_difference_attainment",
                              _sub_ensemble(ensemble, "general", 1),
                              ensemble.count, stop_at_first=False, **tols),
        counterexample_search("sum_difference_parallel",
                              _sub_ensemble(ensemble, "hermitian", 2),
                              ensemble.count, stop_at_first=False, **tols),
        counterexample_search("parallel_pythagorean_symmetry",
                              _sub_ensemble(ensemble, "hermitian", 3),
                              ensemble.count, stop_at_first=False, **tols),
    ]
    return _merge_reports("parallel_pythagorean", reports)


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------

@dataclass
class _FixtureTally:
    name: str
    checks: int = 0
    passed: int = 0
    failures: list[str] = field(default_factory=list)

    def expect(self, label: str, ok: bool):
        self.checks += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append(label)

    def close(self, value: float, target: float, tol: float, label: str):
        self.expect(f"{label} ({value!r} vs {target!r} @ {tol:g})",
                    abs(value - target) <= tol)

    def report(self) -> ClaimReport:
        return ClaimReport(
            claim_id=f"fixture:{self.name}", trials=self.checks,
            supported=self.passed, violated=self.checks - self.passed,
            inconclusive=0, vacuous=0,
            worst_witness=None if not self.failures else {"failed": self.failures})


_SQRT2 = float(np.sqrt(2.0))
_SQRT5 = float(np.sqrt(5.0))


def run_fixture_suite(*, tol_opt: float = DEFAULTS.tol_opt) -> list[ClaimReport]:
    """Replay every worked fixture; mismatches are reported, never raised."""
    reports: list[ClaimReport] = []

    S1 = np.array([[0, -1], [0, 1]], dtype=np.complex128)
    T1 = np.array([[0, 1], [0, 1]], dtype=np.complex128)
    T2 = np.diag([1.0, 0.0]).astype(np.complex128)
    S2 = np.array([[0, 1], [0, -1]], dtype=np.complex128)
    T3 = np.diag([1.0, -1.0]).astype(np.complex128)
    S3 = np.array([[1, 1], [0, 1]], dtype=np.complex128)
    eye2 = np.eye(2, dtype=np.complex128)

    f = _FixtureTally("triangular-closed-form")
    f.close(radius_2x2_triangular(0, -1, 1), (1 + _SQRT2) / 2, 1e-12, "(0,-1,1)")
    f.close(radius_2x2_triangular(0, 1, -1), (1 + _SQRT2) / 2, 1e-12, "(0,1,-1)")
    f.close(radius_2x2_triangular(1, 1, -1), _SQRT5 / 2, 1e-12, "(1,1,-1)")
    reports.append(f.report())

    f = _FixtureTally("radius-values")
    f.close(numerical_radius(S1).omega, (1 + _SQRT2) / 2, 1e-9, "sweep")
    f.close(radius_oracle_2x2(S1), (1 + _SQRT2) / 2, 1e-4, "oracle")
    f.close(numerical_radius(eye2).omega, 1.0, 1e-12, "identity")
    f.close(numerical_radius(np.array([[0, 1], [0, 0]], dtype=complex)).omega,
            0.5, 1e-9, "nilpotent")
    reports.append(f.report())

    f = _FixtureTally("usual-orth-not-radius-orth")
    f.expect("usual holds", usual_orthogonal(S1, T1).holds)
    v = birkhoff_radius_orth(S1, T1, tol_opt)
    f.expect("radius orth fails", v.fails)
    f.close(omega_value(S1 - T1), 1.0, 1e-9, "omega(S-T)")
    reports.append(f.report())

    f = _FixtureTally("radius-orth-not-symmetric")
    f.expect("forward holds", birkhoff_radius_orth(T2, S2, tol_opt).holds)
    v = birkhoff_radius_orth(S2, T2, tol_opt)
    f.expect("reverse fails", v.fails)
    f.close(omega_value(S2 + T2), _SQRT5 / 2, 1e-6, "omega(S+T)")
    f.close(omega_value(S2), (1 + _SQRT2) / 2, 1e-9, "omega(S)")
    reports.append(f.report())

    f = _FixtureTally("shift-needs-positivity")
    f.expect("base holds", birkhoff_radius_orth(T3, S3, tol_opt).holds)
    f.expect("shifted fails", birkhoff_radius_orth(T3 + eye2, S3, tol_opt).fails)
    f.close(omega_value(T3 + eye2 - S3), _SQRT5 / 2, 1e-9, "omega at -1")
    lams = np.linspace(-3.0, 3.0, 20)
    formula_ok = True
    for lam in lams:
        value = omega_value(T3 + eye2 + lam * S3)
        target = 0.5 * abs(2 + 2 * lam) + 0.5 * np.sqrt(4 + abs(lam) ** 2)
        if abs(value - target) > 1e-6:
            formula_ok = False
    f.expect("profile formula at 20 real shifts", formula_ok)
    reports.append(f.report())

    f = _FixtureTally("certifier-agreement")
    for name, (T, S) in {"pair-a": (T2, S2), "pair-b": (eye2, eye2),
                         "pair-c": (T3, S3)}.items():
        cert = certify_orth_directional(T, S)
        direct = birkhoff_radius_orth(T, S, tol_opt)
        f.expect(name, cert.inconclusive or cert.status == direct.status)
    reports.append(f.report())

    f = _FixtureTally("parallelism")
    f.expect("I parallel iI", radius_parallel(eye2, 1j * eye2, tol_opt).holds)
    v = radius_parallel(eye2, 1j * eye2, tol_opt)
    phase = v.witness["witness"].lambda_phase
    f.close(float(np.cos(phase)), 0.0, 1e-5, "phase cos")
    f.close(float(np.sin(phase)), -1.0, 1e-5, "phase sin")
    f.expect("disjoint diagonals not parallel",
             radius_parallel(T2, np.diag([0.0, 1.0]).astype(complex), tol_opt).fails)
    f.expect("positive multiple parallel",
             radius_parallel(T2, 2.0 * T2, tol_opt).holds)
    reports.append(f.report())

    f = _FixtureTally("pythagorean-identity-skew")
    f.expect("holds", pythagorean_radius_orth(eye2, 1j * eye2, tol_opt).holds)
    f.close(omega_value(eye2 + 1j * eye2), _SQRT2, 1e-9, "omega(I+iI)")
    reports.append(f.report())

    f = _FixtureTally("positive-shift-instance")
    f.expect("base holds", birkhoff_radius_orth(T2, S2, tol_opt).holds)
    f.expect("shifted holds", birkhoff_radius_orth(T2 + eye2, S2, tol_opt).holds)
    reports.append(f.report())

    return reports
