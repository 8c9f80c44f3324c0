"""Central record of numeric defaults.

Every tolerance and grid size used by the library is collected here so that
tests, the CLI and callers share one source of truth.  The split is:

* ``tol_algebraic`` for closed-form / algebraic identities,
* ``tol_opt`` for optimizer-derived quantities (sweeps, simplex searches),

each layer's error budget being dominated by its weakest method.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Defaults:
    # tolerances
    tol_algebraic: float = 1e-9
    tol_opt: float = 1e-6
    # decision band: |margin| <= band_factor * tol is reported inconclusive
    band_factor: float = 0.5

    # angle sweeps
    theta_grid: int = 1024
    inner_theta_grid: int = 256  # value-only radius evaluations inside optimizers
    theta_refine_tol: float = 1e-10
    refine_peaks: int = 3  # distinct local maxima polished per sweep

    # phase scan for parallelism
    phase_grid: int = 512
    phase_refine_tol: float = 1e-10

    # brute-force 2x2 oracle
    oracle_grid: int = 2000

    # Jacobi eigensolver
    jacobi_max_sweeps: int = 100
    jacobi_rel_tol: float = 1e-12

    # complex-plane simplex search
    nm_xatol: float = 1e-10
    nm_fatol: float = 1e-12
    nm_maxiter: int = 300

    # sphere ascent
    ascent_restarts: int = 32
    ascent_maxiter: int = 400
    ascent_step_tol: float = 1e-13

    # attainment sampling
    attainment_slack: float = 1e-8
    attainment_budget: int = 64
    dedup_overlap: float = 1.0 - 1e-6

    # misc
    hermitian_input_tol: float = 1e-10
    seed: int = 987654321

    def with_overrides(self, **kwargs) -> "Defaults":
        return replace(self, **kwargs)


DEFAULTS = Defaults()

# The active record can be swapped (e.g. by CLI flags); library code reads
# grid sizes and iteration budgets through active() at call time, while
# tolerances are explicit function parameters.
_active = DEFAULTS


def active() -> Defaults:
    return _active


def set_active(cfg: Defaults) -> None:
    global _active
    _active = cfg
