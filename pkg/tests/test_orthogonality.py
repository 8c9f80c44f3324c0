import numpy as np
import pytest

from omegaorth import (
    DimensionMismatchError,
    attainment_sets_equal,
    birkhoff_norm_orth,
    birkhoff_radius_orth,
    certify_orth_directional,
    omega_value,
    operator_norm,
    pythagorean_radius_orth,
    usual_orthogonal,
)
from omegaorth.claims import (
    _balanced_hermitian_pair,
    deflate_at_maximizer,
    project_left_orthogonal,
)
from omegaorth.orthogonality import decide
from conftest import complex_gaussian

SQRT2 = np.sqrt(2.0)
SQRT5 = np.sqrt(5.0)

S1 = np.array([[0, -1], [0, 1]], dtype=complex)
T1 = np.array([[0, 1], [0, 1]], dtype=complex)
D10 = np.diag([1.0, 0.0]).astype(complex)
E = np.array([[0, 1], [0, -1]], dtype=complex)
T3 = np.diag([1.0, -1.0]).astype(complex)
S3 = np.array([[1, 1], [0, 1]], dtype=complex)
I2 = np.eye(2, dtype=complex)


class TestDecide:
    def test_three_zones(self):
        tol = 1e-6
        assert decide(0.0, tol).holds
        assert decide(2.0 * tol, tol).fails
        assert decide(tol, tol).inconclusive

    def test_band_invariant(self):
        v = decide(1.2e-6, 1e-6)
        assert abs(v.margin) <= v.tolerance
        assert v.inconclusive


class TestUsual:
    def test_worked_pair(self):
        assert usual_orthogonal(S1, T1).holds

    def test_identity_pair_fails(self):
        v = usual_orthogonal(I2, I2)
        assert v.fails
        assert v.witness["max_entry"] == 1.0

    def test_disjoint_supports(self):
        assert usual_orthogonal(D10, np.diag([0.0, 1.0])).holds

    def test_threshold_is_inconclusive(self):
        v = usual_orthogonal(I2, 1e-9 * I2, tol=1e-9)
        assert v.inconclusive

    def test_dim_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            usual_orthogonal(I2, np.eye(3))


class TestBirkhoffNorm:
    def test_zero_right_operand(self):
        assert birkhoff_norm_orth(S1, np.zeros((2, 2))).holds

    def test_disjoint_diagonals(self):
        assert birkhoff_norm_orth(D10, np.diag([0.0, 1.0])).holds

    def test_identity_pair(self):
        v = birkhoff_norm_orth(I2, I2)
        assert v.fails
        assert abs(v.witness["lambda"] + 1.0) < 1e-3
        assert v.witness["minimum"] < 1e-6


class TestBirkhoffRadius:
    def test_forward_holds(self):
        assert birkhoff_radius_orth(D10, E).holds

    def test_reverse_fails_with_value(self):
        v = birkhoff_radius_orth(E, D10)
        assert v.fails
        assert abs(v.witness["minimum"] - SQRT5 / 2) < 1e-6
        assert abs(v.witness["lambda"] - 1.0) < 1e-3

    def test_usual_does_not_imply_radius(self):
        assert usual_orthogonal(S1, T1).holds
        v = birkhoff_radius_orth(S1, T1)
        assert v.fails
        assert abs(v.witness["minimum"] - 1.0) < 1e-9

    def test_shifted_pair(self):
        assert birkhoff_radius_orth(T3, S3).holds
        assert birkhoff_radius_orth(T3 + I2, S3).fails

    def test_zero_edges(self):
        Z = np.zeros((2, 2))
        assert birkhoff_radius_orth(S1, Z).holds
        assert birkhoff_radius_orth(Z, S1).holds
        assert birkhoff_radius_orth(Z, Z).holds

    def test_fails_witness_revalidates(self, rng):
        checked = 0
        for _ in range(20):
            T = complex_gaussian(rng, 2)
            S = complex_gaussian(rng, 2)
            v = birkhoff_radius_orth(T, S)
            if v.fails:
                lam = v.witness["lambda"]
                assert omega_value(T + lam * S) < omega_value(T) - v.tolerance
                checked += 1
        assert checked > 10

    def test_dim_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            birkhoff_radius_orth(I2, np.eye(3))


class TestPythagorean:
    def test_zero_right_operand(self):
        assert pythagorean_radius_orth(S1, np.zeros((2, 2))).holds

    def test_identity_pair(self):
        v = pythagorean_radius_orth(I2, I2)
        assert v.fails
        assert abs(v.witness["delta"] - 2.0) < 1e-9

    def test_projector_skew_pair(self):
        # |<(T+S)x,x>|^2 = p^2 + 4p(1-p) peaks at p = 2/3: omega = 2/sqrt(3)
        from omegaorth import radius_oracle_2x2

        S = np.array([[0, 1], [-1, 0]], dtype=complex)
        assert abs(radius_oracle_2x2(D10 + S) - 2.0 / np.sqrt(3.0)) < 1e-4
        v = pythagorean_radius_orth(D10, S)
        assert v.fails
        assert abs(v.witness["delta"] - (4.0 / 3.0 - 2.0)) < 1e-9

    def test_identity_skew_identity(self):
        assert pythagorean_radius_orth(I2, 1j * I2).holds


class TestDirectionalCertificate:
    def test_agrees_on_worked_pairs(self):
        assert certify_orth_directional(D10, E).holds
        assert certify_orth_directional(I2, I2).fails
        assert certify_orth_directional(T3, S3).holds

    def test_consistency_with_direct(self, rng):
        agreements = 0
        for k in range(40):
            T = complex_gaussian(rng, 2)
            S = complex_gaussian(rng, 2)
            if k % 2:
                T = project_left_orthogonal(T, S)
            cert = certify_orth_directional(T, S)
            direct = birkhoff_radius_orth(T, S)
            if cert.inconclusive or direct.inconclusive:
                continue
            assert cert.status == direct.status
            agreements += 1
        assert agreements >= 30


class TestAttainmentSetsEqual:
    def test_identical_operator(self):
        assert attainment_sets_equal(D10, D10).holds

    def test_orthogonal_maximizers(self):
        v = attainment_sets_equal(D10, np.diag([0.0, 1.0]))
        assert v.fails
        assert abs(v.witness["hausdorff"] - 1.0) < 1e-9

    def test_scaled_operator(self):
        assert attainment_sets_equal(D10, np.diag([2.0, 0.0])).holds


class TestProperties:
    def test_nondegeneracy(self, rng):
        for _ in range(40):
            T = complex_gaussian(rng, 2)
            v = birkhoff_radius_orth(T, T)
            assert v.fails
            assert abs(v.witness["lambda"] + 1.0) < 1e-3

    def test_homogeneity(self, rng):
        confirmed = 0
        for _ in range(25):
            T = project_left_orthogonal(complex_gaussian(rng, 2),
                                        S := complex_gaussian(rng, 2))
            if not birkhoff_radius_orth(T, S).holds:
                continue
            alpha = 0.5 + rng.random() + 1j * rng.standard_normal()
            beta = 0.5 + rng.random() - 1j * rng.standard_normal()
            assert not birkhoff_radius_orth(alpha * T, beta * S,
                                            1e-6 * abs(alpha)).fails
            confirmed += 1
        assert confirmed >= 20

    def test_adjoint_stability(self, rng):
        for k in range(30):
            T = complex_gaussian(rng, 2)
            S = complex_gaussian(rng, 2)
            if k % 2:
                T = project_left_orthogonal(T, S)
            v1 = birkhoff_radius_orth(T, S)
            v2 = birkhoff_radius_orth(T.conj().T, S.conj().T)
            if v1.inconclusive or v2.inconclusive:
                continue
            assert v1.status == v2.status

    def test_hermitian_radius_orth_implies_norm_orth(self, rng):
        confirmed = 0
        for _ in range(30):
            T, S = _balanced_hermitian_pair(rng, 2)
            assert np.abs(T - T.conj().T).max() < 1e-12
            if not birkhoff_radius_orth(T, S).holds:
                continue
            assert not birkhoff_norm_orth(T, S).fails
            confirmed += 1
        assert confirmed >= 25

    def test_identity_symmetry(self, rng):
        confirmed = 0
        for _ in range(20):
            T = project_left_orthogonal(complex_gaussian(rng, 2), I2)
            if not birkhoff_radius_orth(T, I2).holds:
                continue
            assert not birkhoff_radius_orth(I2, T).fails
            confirmed += 1
        assert confirmed >= 15

    def test_invertible_usual_orthogonality_collapses(self, rng):
        for _ in range(40):
            S = complex_gaussian(rng, 2)
            while np.linalg.svd(S, compute_uv=False)[-1] < 0.2:
                S = complex_gaussian(rng, 2)
            T = complex_gaussian(rng, 2)
            assert usual_orthogonal(S, T).fails

    def test_deflation_produces_orthogonal_pairs(self, rng):
        confirmed = 0
        for _ in range(15):
            T = complex_gaussian(rng, 2)
            S = deflate_at_maximizer(T, complex_gaussian(rng, 2))
            if omega_value(S) < 1e-3:
                continue
            assert not birkhoff_radius_orth(T, S).fails
            confirmed += 1
        assert confirmed >= 12
