import numpy as np
import pytest

from omegaorth import (
    DimensionMismatchError,
    NonHermitianError,
    adjoint,
    as_matrix,
    hermitian_eigs,
    is_positive_semidefinite,
    operator_norm,
    quad_form,
    unit_vector,
)
from conftest import complex_gaussian

I2 = np.eye(2, dtype=complex)
NIL = np.array([[0, 1], [0, 0]], dtype=complex)


class TestAdjoint:
    def test_identity(self):
        assert np.array_equal(adjoint(I2), I2)

    def test_real_nilpotent(self):
        assert np.array_equal(adjoint(NIL), np.array([[0, 0], [1, 0]]))

    def test_conjugation(self):
        M = np.array([[1j, 0], [0, 0]])
        assert np.array_equal(adjoint(M), np.array([[-1j, 0], [0, 0]]))

    def test_involution_exact(self, rng):
        for n in (1, 2, 3, 5):
            A = complex_gaussian(rng, n)
            assert np.array_equal(adjoint(adjoint(A)), A)


class TestQuadForm:
    def test_identity_any_unit_vector(self, rng):
        for n in (1, 2, 4):
            x = unit_vector(complex_gaussian(rng, n)[:, 0])
            assert abs(quad_form(np.eye(n), x) - 1.0) < 1e-14

    def test_projector_basis_vector(self):
        assert quad_form(np.diag([1.0, 0.0]), [1, 0]) == 1.0

    def test_nilpotent_mixed_vector(self):
        x = np.array([1.0, 1.0]) / np.sqrt(2.0)
        assert abs(quad_form(NIL, x) - 0.5) < 1e-15

    def test_adjoint_conjugation_identity(self, rng):
        for _ in range(25):
            A = complex_gaussian(rng, 3)
            x = unit_vector(rng.standard_normal(3) + 1j * rng.standard_normal(3))
            lhs = quad_form(A, x) + quad_form(adjoint(A), x)
            rhs = 2.0 * quad_form(A, x).real
            assert abs(lhs - rhs) < 1e-12

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            quad_form(I2, [1.0, 0.0, 0.0])


class TestHermitianEigs:
    def test_diagonal(self):
        ed = hermitian_eigs(np.diag([3.0, 1.0]))
        assert np.allclose(ed.eigenvalues, [3.0, 1.0])
        assert abs(abs(ed.eigenvector(0)[0]) - 1.0) < 1e-12

    def test_exchange_matrix(self):
        ed = hermitian_eigs(np.array([[0, 1], [1, 0]], dtype=complex))
        assert np.allclose(ed.eigenvalues, [1.0, -1.0], atol=1e-12)

    def test_nilpotent_hermitian_part(self):
        H = 0.5 * (NIL + NIL.conj().T)
        ed = hermitian_eigs(H)
        assert np.allclose(ed.eigenvalues, [0.5, -0.5], atol=1e-12)

    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
    def test_invariants_random(self, rng, n):
        A = complex_gaussian(rng, n)
        H = 0.5 * (A + A.conj().T)
        ed = hermitian_eigs(H)
        scale = max(operator_norm(H), 1e-12)
        for k in range(n):
            v = ed.eigenvector(k)
            assert np.abs(H @ v - ed.eigenvalues[k] * v).max() <= 1e-9 * scale
        gram = ed.eigenvectors.conj().T @ ed.eigenvectors
        assert np.abs(gram - np.eye(n)).max() <= 1e-9
        recon = (ed.eigenvectors * ed.eigenvalues) @ ed.eigenvectors.conj().T
        assert np.abs(recon - H).max() <= 1e-8 * scale
        assert all(np.diff(ed.eigenvalues) <= 1e-12)

    def test_rejects_non_hermitian(self):
        with pytest.raises(NonHermitianError):
            hermitian_eigs(NIL)


class TestOperatorNorm:
    def test_examples(self):
        assert abs(operator_norm(I2) - 1.0) < 1e-12
        assert abs(operator_norm(NIL) - 1.0) < 1e-12
        S = np.array([[0, -1], [0, 1]], dtype=complex)
        assert abs(operator_norm(S) - np.sqrt(2.0)) < 1e-12

    def test_against_svd(self, rng):
        for n in (1, 2, 3, 5, 7):
            A = complex_gaussian(rng, n)
            ref = np.linalg.norm(A, 2)
            assert abs(operator_norm(A) - ref) <= 1e-9 * max(1.0, ref)

    def test_norm_axioms(self, rng):
        for _ in range(30):
            A = complex_gaussian(rng, 3)
            B = complex_gaussian(rng, 3)
            c = complex(*rng.standard_normal(2))
            assert operator_norm(A + B) <= operator_norm(A) + operator_norm(B) + 1e-9
            assert abs(operator_norm(c * A) - abs(c) * operator_norm(A)) <= 1e-9


class TestPositiveSemidefinite:
    def test_identity(self):
        assert is_positive_semidefinite(I2)

    def test_indefinite(self):
        assert not is_positive_semidefinite(np.diag([1.0, -1.0]))

    def test_non_hermitian(self):
        assert not is_positive_semidefinite(np.array([[1, 1], [0, 1]], dtype=complex))

    def test_gram_matrices(self, rng):
        for _ in range(10):
            A = complex_gaussian(rng, 3)
            assert is_positive_semidefinite(A.conj().T @ A, 1e-9)


class TestValidation:
    def test_rejects_non_square(self):
        with pytest.raises(DimensionMismatchError):
            as_matrix(np.zeros((2, 3)))

    def test_rejects_nan(self):
        M = np.array([[np.nan, 0], [0, 0]], dtype=complex)
        with pytest.raises(ValueError):
            as_matrix(M)

    def test_rejects_inf_imag(self):
        M = np.array([[1j * np.inf, 0], [0, 0]])
        with pytest.raises(ValueError):
            as_matrix(M)

    def test_copies_input(self):
        M = np.eye(2, dtype=complex)
        out = as_matrix(M)
        out[0, 0] = 5.0
        assert M[0, 0] == 1.0

    def test_fortran_order_input(self):
        A = complex_gaussian(np.random.default_rng(0), 3)
        assert np.array_equal(as_matrix(A.conj().T), A.conj().T)

    def test_unit_vector_normalizes(self):
        x = unit_vector([3.0, 4.0])
        assert abs(np.linalg.norm(x) - 1.0) < 1e-12

    def test_unit_vector_rejects_zero(self):
        with pytest.raises(ValueError):
            unit_vector([0.0, 0.0])
