import numpy as np
import pytest

from omegaorth import (
    DimensionMismatchError,
    attainment_sample,
    numerical_radius,
    numerical_range_boundary,
    omega_value,
    operator_norm,
    quad_form,
    radius_2x2_triangular,
    radius_oracle_2x2,
    rotated_hermitian_part,
)
from omegaorth.ensembles import draw
from conftest import complex_gaussian

SQRT2 = np.sqrt(2.0)
SQRT5 = np.sqrt(5.0)
NIL = np.array([[0, 1], [0, 0]], dtype=complex)


def aligned_triangular(rng):
    """Triangular triple on which the closed form is exact.

    The formula |a+d|/2 + sqrt(|a-d|^2+|b|^2)/2 matches the radius when the
    trace and the diagonal difference share a phase axis: real diagonal up
    to one global phase, arbitrary b.
    """
    a, d = rng.standard_normal(2)
    b = complex(*rng.standard_normal(2))
    phase = np.exp(2j * np.pi * rng.random())
    return phase * a, phase * b, phase * d


class TestRotatedPart:
    def test_identity(self):
        assert np.allclose(rotated_hermitian_part(np.eye(2), 0.0), np.eye(2))

    def test_nilpotent(self):
        H = rotated_hermitian_part(NIL, 0.0)
        assert np.allclose(H, [[0, 0.5], [0.5, 0]])

    def test_quarter_turn(self):
        H = rotated_hermitian_part(np.diag([1j, 0.0]), np.pi / 2)
        assert np.allclose(H, np.diag([-1.0, 0.0]), atol=1e-15)

    def test_exactly_hermitian(self, rng):
        for _ in range(10):
            A = complex_gaussian(rng, 4)
            H = rotated_hermitian_part(A, float(rng.random() * 7))
            assert np.abs(H - H.conj().T).max() == 0.0


class TestNumericalRadius:
    def test_worked_2x2(self):
        S = np.array([[0, -1], [0, 1]], dtype=complex)
        assert abs(numerical_radius(S).omega - (1 + SQRT2) / 2) < 1e-9

    def test_identity(self):
        assert abs(numerical_radius(np.eye(3)).omega - 1.0) < 1e-12

    def test_nilpotent_half(self):
        assert abs(numerical_radius(NIL).omega - 0.5) < 1e-9

    def test_zero_matrix_canonical_certificate(self):
        cert = numerical_radius(np.zeros((3, 3)))
        assert cert.omega == 0.0
        assert cert.theta_star == 0.0
        assert np.array_equal(cert.x_star, [1, 0, 0])

    def test_certificate_invariants(self, rng):
        for n in (2, 3, 4):
            T = complex_gaussian(rng, n)
            cert = numerical_radius(T)
            assert cert.omega >= 0.0
            assert 0.0 <= cert.theta_star < 2 * np.pi
            assert abs(np.linalg.norm(cert.x_star) - 1.0) < 1e-12
            assert abs(quad_form(T, cert.x_star)) >= cert.omega - 1e-6
            assert cert.residual <= 1e-8


class TestTriangularClosedForm:
    def test_worked_values(self):
        assert abs(radius_2x2_triangular(0, -1, 1) - (1 + SQRT2) / 2) < 1e-12
        assert abs(radius_2x2_triangular(0, 1, -1) - (1 + SQRT2) / 2) < 1e-12
        assert abs(radius_2x2_triangular(1, 1, -1) - SQRT5 / 2) < 1e-12

    def test_matches_sweep_on_aligned_family(self, rng):
        for _ in range(100):
            a, b, d = aligned_triangular(rng)
            T = np.array([[a, b], [0, d]])
            assert abs(radius_2x2_triangular(a, b, d)
                       - numerical_radius(T).omega) <= 1e-7

    def test_upper_bound_on_general_triples(self, rng):
        # with unaligned complex diagonals the formula overshoots the true
        # radius: never below it, and strictly above somewhere
        worst_gap = 0.0
        for _ in range(100):
            a, b, d = (complex(*rng.standard_normal(2)) for _ in range(3))
            T = np.array([[a, b], [0, d]])
            omega = numerical_radius(T).omega
            formula = radius_2x2_triangular(a, b, d)
            assert formula >= omega - 1e-9
            worst_gap = max(worst_gap, formula - omega)
        assert worst_gap > 1e-3


class TestRangeBoundary:
    def test_identity_point(self):
        pts = numerical_range_boundary(np.eye(2), 8)
        assert np.abs(pts - 1.0).max() < 1e-9

    def test_nilpotent_disk(self):
        pts = numerical_range_boundary(NIL, 360)
        assert np.abs(np.abs(pts) - 0.5).max() < 1e-6

    def test_hermitian_segment(self):
        pts = numerical_range_boundary(np.diag([1.0, 0.0]), 360)
        assert np.abs(pts.imag).max() < 1e-6
        assert pts.real.min() >= -1e-9
        assert pts.real.max() <= 1.0 + 1e-9

    def test_requires_three_points(self):
        with pytest.raises(ValueError):
            numerical_range_boundary(np.eye(2), 2)


class TestGridOracle:
    def test_worked_value(self):
        S = np.array([[0, -1], [0, 1]], dtype=complex)
        assert abs(radius_oracle_2x2(S) - (1 + SQRT2) / 2) < 1e-4

    def test_identity(self):
        assert abs(radius_oracle_2x2(np.eye(2)) - 1.0) < 1e-12

    def test_triangular_value(self):
        T = np.array([[1, 1], [0, -1]], dtype=complex)
        assert abs(radius_oracle_2x2(T) - SQRT5 / 2) < 1e-4

    def test_dimension_guard(self):
        with pytest.raises(DimensionMismatchError):
            radius_oracle_2x2(np.eye(3))

    def test_agrees_with_sweep(self, rng):
        for _ in range(30):
            T = complex_gaussian(rng, 2)
            assert abs(radius_oracle_2x2(T) - numerical_radius(T).omega) <= 1e-4


class TestAttainmentSample:
    def test_unique_maximizer(self):
        sample = attainment_sample(np.diag([1.0, 0.0]), 1e-8)
        assert len(sample) == 1
        assert abs(abs(sample.vectors[0][0]) - 1.0) < 1e-6

    def test_identity_budget_capped(self):
        sample = attainment_sample(np.eye(2), 1e-8, budget=5)
        assert 1 <= len(sample) <= 5
        assert np.abs(np.abs(sample.values) - 1.0).max() < 1e-9

    def test_two_poles(self):
        sample = attainment_sample(np.diag([1.0, -1.0]), 1e-8)
        assert len(sample) == 2
        mods = np.sort(np.abs(sample.vectors[:, 0]))
        assert mods[0] < 1e-6 and mods[1] > 1 - 1e-6

    def test_off_grid_peaks_found(self):
        # diagonal phases put both attainment directions between grid points
        S = np.diag([np.exp(1.234j), np.exp(3.234j)])
        sample = attainment_sample(S, 1e-8)
        assert len(sample) == 2

    def test_values_within_slack(self, rng):
        for _ in range(10):
            T = complex_gaussian(rng, 3)
            sample = attainment_sample(T, 1e-6)
            omega = numerical_radius(T).omega
            assert np.abs(sample.values).min() >= omega - 1e-6

    def test_rejects_bad_slack(self):
        with pytest.raises(ValueError):
            attainment_sample(np.eye(2), 0.0)


class TestRadiusProperties:
    def test_fast_value_matches_certificate(self, rng):
        for n in (2, 3, 4):
            for _ in range(10):
                T = complex_gaussian(rng, n)
                assert abs(omega_value(T) - numerical_radius(T).omega) <= 1e-8

    def test_sandwich(self, rng):
        for _ in range(200):
            n = int(rng.integers(2, 7))
            T = complex_gaussian(rng, n)
            omega = omega_value(T)
            norm = operator_norm(T)
            assert omega <= norm + 1e-8
            assert norm <= 2.0 * omega + 1e-8

    def test_self_adjoint_equals_norm(self, rng):
        for _ in range(50):
            n = int(rng.integers(2, 6))
            H = draw("hermitian", n, rng)
            assert abs(omega_value(H) - operator_norm(H)) <= 1e-8

    def test_norm_axioms(self, rng):
        for _ in range(50):
            T = complex_gaussian(rng, 3)
            S = complex_gaussian(rng, 3)
            c = complex(*rng.standard_normal(2))
            assert abs(omega_value(c * T) - abs(c) * omega_value(T)) <= 1e-9
            assert omega_value(T + S) <= omega_value(T) + omega_value(S) + 1e-8

    def test_unitary_similarity_invariance(self, rng):
        for _ in range(50):
            n = int(rng.integers(2, 5))
            T = complex_gaussian(rng, n)
            U = draw("unitary", n, rng)
            assert abs(omega_value(U.conj().T @ T @ U) - omega_value(T)) <= 1e-8
