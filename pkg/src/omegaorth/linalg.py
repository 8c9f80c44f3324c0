"""Dense complex linear algebra on immutable matrix values.

All public operations validate their inputs (square, finite), never mutate
them, and return fresh arrays, so they are safe to call from concurrent
test runners.  The Hermitian eigensolver is cyclic Jacobi on the numba
backend and LAPACK (``np.linalg.eigh``) on the numpy backend; both satisfy
the same residual and orthonormality contracts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .backend import numba_active
from .config import DEFAULTS


class DimensionMismatchError(ValueError):
    """Operands have incompatible shapes."""


class NonHermitianError(ValueError):
    """A Hermitian matrix was required."""


class ConvergenceError(RuntimeError):
    """An iterative solver exhausted its budget."""


def as_matrix(M) -> np.ndarray:
    """Validate and copy input into a fresh square complex128 array."""
    A = np.array(M, dtype=np.complex128, order="C")
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
        raise DimensionMismatchError(f"expected a square matrix, got shape {A.shape}")
    if not (np.isfinite(A.real).all() and np.isfinite(A.imag).all()):
        raise ValueError("matrix entries must be finite")
    return A


def require_same_dim(A: np.ndarray, B: np.ndarray) -> None:
    if A.shape != B.shape:
        raise DimensionMismatchError(f"dimension mismatch: {A.shape} vs {B.shape}")


def unit_vector(v) -> np.ndarray:
    """Normalize to Euclidean length one; rejects zero and non-finite input."""
    x = np.array(v, dtype=np.complex128).reshape(-1)
    if not np.isfinite(x.view(np.float64)).all():
        raise ValueError("vector entries must be finite")
    nrm = np.linalg.norm(x)
    if nrm == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return x / nrm


@dataclass(frozen=True)
class EigenDecomposition:
    """Spectral decomposition H = V diag(w) V^H with w sorted descending.

    ``eigenvectors`` holds the orthonormal eigenvectors as columns.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def eigenvector(self, k: int) -> np.ndarray:
        return self.eigenvectors[:, k].copy()


def adjoint(M) -> np.ndarray:
    """Conjugate transpose."""
    A = as_matrix(M)
    return A.conj().T.copy()


def quad_form(M, x) -> complex:
    """<Mx, x> = sum_ij M[i,j] x[j] conj(x[i])."""
    A = as_matrix(M)
    v = np.asarray(x, dtype=np.complex128).reshape(-1)
    if v.shape[0] != A.shape[0]:
        raise DimensionMismatchError(
            f"vector length {v.shape[0]} does not match matrix dim {A.shape[0]}")
    return complex(np.vdot(v, A @ v))


def hermitian_eigs(H, *, input_tol: float = DEFAULTS.hermitian_input_tol,
                   max_sweeps: int = DEFAULTS.jacobi_max_sweeps,
                   rel_tol: float = DEFAULTS.jacobi_rel_tol) -> EigenDecomposition:
    """Full spectral decomposition of a Hermitian matrix.

    The caller must supply a Hermitian input: the max-entry deviation from
    H^H may not exceed ``input_tol``.
    """
    A = as_matrix(H)
    dev = np.abs(A - A.conj().T).max()
    if dev > input_tol:
        raise NonHermitianError(f"input deviates from Hermitian by {dev:.3e}")
    if numba_active():
        w, V, ok = kernels.jacobi_eigh(A, True, max_sweeps, rel_tol)
        if not ok:
            raise ConvergenceError(
                f"Jacobi eigensolver did not converge in {max_sweeps} sweeps")
    else:
        w_asc, V_asc = np.linalg.eigh(A)
        w = w_asc[::-1].copy()
        V = V_asc[:, ::-1].copy()
    return EigenDecomposition(eigenvalues=w, eigenvectors=V)


def operator_norm(M, *, max_sweeps: int = DEFAULTS.jacobi_max_sweeps,
                  rel_tol: float = DEFAULTS.jacobi_rel_tol) -> float:
    """Largest singular value, computed as sqrt(lambda_max(M^H M))."""
    A = as_matrix(M)
    if numba_active():
        return float(kernels.opnorm_kernel(A, max_sweeps, rel_tol))
    if A.shape[0] == 2:
        return float(kernels.sigma_max_2x2(A))
    lam = float(np.linalg.eigvalsh(A.conj().T @ A)[-1])
    return float(np.sqrt(max(lam, 0.0)))


def is_positive_semidefinite(M, tol: float = DEFAULTS.tol_algebraic) -> bool:
    """Hermitian within tol and smallest eigenvalue >= -tol."""
    A = as_matrix(M)
    if np.abs(A - A.conj().T).max() > tol:
        return False
    Hm = 0.5 * (A + A.conj().T)
    if numba_active():
        w, _, ok = kernels.jacobi_eigh(Hm, False, DEFAULTS.jacobi_max_sweeps,
                                       DEFAULTS.jacobi_rel_tol)
        if not ok:
            raise ConvergenceError("Jacobi eigensolver did not converge")
        lam_min = float(w[-1])
    else:
        lam_min = float(np.linalg.eigvalsh(Hm)[0])
    return lam_min >= -tol
