"""Seeded random matrix ensembles for the claim harness.

Standard constructions: Hermitian and skew-Hermitian parts of complex
Gaussians, Gram matrices for positive semidefinite draws, strictly-upper
2x2 blocks for square-zero nilpotents, and QR orthonormalization with a
phase-fixed R diagonal for unitaries.  Every draw satisfies its structural
predicate to near machine precision.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

KINDS = (
    "general",
    "hermitian",
    "skew_hermitian",
    "positive_semidefinite",
    "nilpotent_square_zero",
    "upper_triangular_2x2",
    "unitary",
)


@dataclass(frozen=True)
class Ensemble:
    """A structural matrix class with a seed and a trial count."""

    kind: str
    dim: int
    seed: int
    count: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown ensemble kind {self.kind!r}")
        if self.dim < 1:
            raise ValueError("dim must be positive")
        if self.kind == "upper_triangular_2x2" and self.dim != 2:
            raise ValueError("upper_triangular_2x2 requires dim 2")


def standard_complex(rng: np.random.Generator, shape) -> np.ndarray:
    """Standard complex Gaussian: unit-variance complex entries."""
    return (rng.standard_normal(shape)
            + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def draw(kind: str, dim: int, rng: np.random.Generator) -> np.ndarray:
    if kind == "general":
        return standard_complex(rng, (dim, dim))
    if kind == "hermitian":
        A = standard_complex(rng, (dim, dim))
        return 0.5 * (A + A.conj().T)
    if kind == "skew_hermitian":
        A = standard_complex(rng, (dim, dim))
        return 0.5 * (A - A.conj().T)
    if kind == "positive_semidefinite":
        A = standard_complex(rng, (dim, dim))
        return A.conj().T @ A
    if kind == "nilpotent_square_zero":
        T = np.zeros((dim, dim), dtype=np.complex128)
        for k in range(0, dim - 1, 2):
            T[k, k + 1] = standard_complex(rng, ())
        return T
    if kind == "upper_triangular_2x2":
        T = np.zeros((2, 2), dtype=np.complex128)
        T[0, 0], T[0, 1], T[1, 1] = standard_complex(rng, (3,))
        return T
    if kind == "unitary":
        A = standard_complex(rng, (dim, dim))
        Q, R = np.linalg.qr(A)
        d = np.diagonal(R)
        return Q * (d / np.abs(d))
    raise ValueError(f"unknown ensemble kind {kind!r}")


def matrices(ensemble: Ensemble):
    """Yield ``ensemble.count`` matrices from a generator seeded once."""
    rng = np.random.default_rng(ensemble.seed)
    for _ in range(ensemble.count):
        yield draw(ensemble.kind, ensemble.dim, rng)


def structural_defect(kind: str, M: np.ndarray) -> float:
    """Max deviation of M from its structural predicate (0 for general)."""
    if kind == "hermitian":
        return float(np.abs(M - M.conj().T).max())
    if kind == "skew_hermitian":
        return float(np.abs(M + M.conj().T).max())
    if kind == "positive_semidefinite":
        herm = float(np.abs(M - M.conj().T).max())
        lam_min = float(np.linalg.eigvalsh(0.5 * (M + M.conj().T))[0])
        return max(herm, -min(lam_min, 0.0))
    if kind == "nilpotent_square_zero":
        return float(np.abs(M @ M).max())
    if kind == "upper_triangular_2x2":
        return float(abs(M[1, 0]))
    if kind == "unitary":
        n = M.shape[0]
        return float(np.abs(M.conj().T @ M - np.eye(n)).max())
    return 0.0
