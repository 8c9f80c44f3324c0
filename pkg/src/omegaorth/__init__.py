"""Numerical radius toolkit: radii, ranges, orthogonality and parallelism deciders."""

from .backend import backend_name, numba_active
from .claims import (
    ClaimReport,
    check_orth_triangle_transfer,
    check_parallel_pythagorean,
    check_positive_pairs,
    check_positive_shift,
    counterexample_search,
    run_fixture_suite,
)
from .config import DEFAULTS, Defaults
from .ensembles import Ensemble
from .linalg import (
    ConvergenceError,
    DimensionMismatchError,
    EigenDecomposition,
    NonHermitianError,
    adjoint,
    as_matrix,
    hermitian_eigs,
    is_positive_semidefinite,
    operator_norm,
    quad_form,
    unit_vector,
)
from .matrixfile import MatrixFormatError, parse_file, parse_text, render
from .orthogonality import (
    FAILS,
    HOLDS,
    INCONCLUSIVE,
    Verdict,
    attainment_sets_equal,
    birkhoff_norm_orth,
    birkhoff_radius_orth,
    certify_orth_directional,
    pythagorean_radius_orth,
    usual_orthogonal,
)
from .parallelism import (
    ParallelWitness,
    parallel_witness_search,
    radius_parallel,
    triangle_equality,
)
from .radius import (
    AttainmentSample,
    RadiusCertificate,
    attainment_sample,
    numerical_radius,
    numerical_range_boundary,
    omega_value,
    radius_2x2_triangular,
    radius_oracle_2x2,
    rotated_hermitian_part,
)

__version__ = "0.1.0"
