import numpy as np
import pytest

from omegaorth import (
    ClaimReport,
    birkhoff_radius_orth,
    check_orth_triangle_transfer,
    check_parallel_pythagorean,
    check_positive_pairs,
    check_positive_shift,
    counterexample_search,
    is_positive_semidefinite,
    run_fixture_suite,
)
from omegaorth.claims import REGISTRY
from omegaorth.ensembles import KINDS, Ensemble, draw, matrices, structural_defect


class TestEnsembles:
    @pytest.mark.parametrize("kind", KINDS)
    def test_structural_predicates(self, rng, kind):
        dim = 2 if kind == "upper_triangular_2x2" else 3
        for _ in range(20):
            M = draw(kind, dim, rng)
            assert structural_defect(kind, M) <= 1e-12

    def test_nilpotent_odd_dimension(self, rng):
        M = draw("nilpotent_square_zero", 5, rng)
        assert np.abs(M @ M).max() == 0.0

    def test_positive_draws_decide_positive(self, rng):
        for _ in range(5):
            assert is_positive_semidefinite(draw("positive_semidefinite", 3, rng))

    def test_generator_reproducible(self):
        ens = Ensemble("hermitian", 3, 99, 4)
        a = list(matrices(ens))
        b = list(matrices(ens))
        for x, y in zip(a, b):
            assert np.array_equal(x, y)

    def test_validation(self):
        with pytest.raises(ValueError):
            Ensemble("bogus", 2, 0, 1)
        with pytest.raises(ValueError):
            Ensemble("upper_triangular_2x2", 3, 0, 1)


class TestFixtureSuite:
    def test_all_fixtures_pass(self):
        reports = run_fixture_suite()
        assert len(reports) >= 8
        for r in reports:
            assert r.violated == 0, (r.claim_id, r.worst_witness)

    def test_tally_invariants(self):
        for r in run_fixture_suite():
            assert r.supported + r.violated + r.inconclusive == r.trials
            assert r.vacuous <= r.inconclusive


class TestCounterexampleSearch:
    def test_unknown_claim(self):
        with pytest.raises(KeyError):
            counterexample_search("no_such_claim", Ensemble("general", 2, 0, 1), 1)

    def test_reproducible_reports(self):
        ens = Ensemble("general", 2, 31337, 10)
        r1 = counterexample_search("nondegeneracy", ens, 10, stop_at_first=False)
        r2 = counterexample_search("nondegeneracy", ens, 10, stop_at_first=False)
        assert r1 == r2

    def test_stops_at_first_violation(self):
        ens = Ensemble("positive_semidefinite", 2, 7, 100)
        r = counterexample_search("positive_pair_orthogonality", ens, 100)
        assert r.violated == 1
        assert r.trials < 100
        assert r.worst_witness is not None

    def test_positive_pair_witness_revalidates(self):
        ens = Ensemble("positive_semidefinite", 2, 7, 200)
        r = counterexample_search("positive_pair_orthogonality", ens, 200,
                                  stop_at_first=False)
        assert r.violated >= 1
        w = r.worst_witness
        T = np.array([[complex(re, im) for re, im in row] for row in w["T"]])
        S = np.array([[complex(re, im) for re, im in row] for row in w["S"]])
        assert is_positive_semidefinite(T, 1e-9)
        assert is_positive_semidefinite(S, 1e-9)
        # decider-confirmed at ten-fold tighter tolerance
        assert birkhoff_radius_orth(T, S, 1e-7).holds

    def test_sandwich_never_violated(self):
        r = counterexample_search("radius_norm_sandwich",
                                  Ensemble("general", 3, 5, 60), 60,
                                  stop_at_first=False)
        assert r.violated == 0
        assert r.supported == 60

    def test_budget_zero_uses_count(self):
        ens = Ensemble("general", 2, 5, 7)
        r = counterexample_search("nondegeneracy", ens, 0, stop_at_first=False)
        assert r.trials == 7


@pytest.mark.parametrize("claim_id", sorted(REGISTRY))
def test_registry_claims_smoke(claim_id):
    spec = REGISTRY[claim_id]
    ens = Ensemble(spec.default_kind, spec.default_dim, 1234, 12)
    r = counterexample_search(claim_id, ens, 12, stop_at_first=False)
    assert r.trials == 12
    assert r.supported + r.violated + r.inconclusive == r.trials
    assert r.vacuous <= r.inconclusive
    if claim_id != "positive_pair_orthogonality":
        assert r.violated == 0, (claim_id, r.worst_witness)


class TestCheckWrappers:
    def test_positive_shift(self):
        r = check_positive_shift(Ensemble("positive_semidefinite", 2, 11, 15))
        assert isinstance(r, ClaimReport)
        assert r.violated == 0
        assert r.supported >= 10

    def test_orth_triangle_transfer(self):
        r = check_orth_triangle_transfer(Ensemble("general", 2, 11, 15))
        assert r.violated == 0
        assert r.trials == 30
        assert r.supported > 0

    def test_positive_pairs_reports_violations(self):
        r = check_positive_pairs(Ensemble("positive_semidefinite", 2, 11, 20))
        assert r.trials == 40
        assert r.violated >= 1  # the falsification target

    def test_parallel_pythagorean(self):
        r = check_parallel_pythagorean(Ensemble("hermitian", 2, 11, 12))
        assert r.violated == 0
        assert r.trials == 48
        assert r.supported > 0
