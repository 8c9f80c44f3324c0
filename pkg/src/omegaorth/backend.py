"""Kernel backend selection.

The hot numeric kernels (Jacobi eigensolver, angle sweeps, grid oracle,
simplex search, sphere ascent) are written once in njit-compatible form
and compiled with numba when it is available.  Setting

    OMEGAORTH_BACKEND=numpy

forces the pure-numpy path: the kernel sources run interpreted, and the
callers switch to batched LAPACK (``np.linalg.eigh``/``eigvalsh``) where
interpreted loops would be prohibitively slow.  Any value other than
"numpy" (or an absent variable) selects numba if it can be imported.
"""

from __future__ import annotations

import os

_requested = os.environ.get("OMEGAORTH_BACKEND", "numba").strip().lower()

if _requested == "numpy":
    _NUMBA = False
else:
    try:
        from numba import njit as _njit

        _NUMBA = True
    except ImportError:  # pragma: no cover - depends on environment
        _NUMBA = False


def numba_active() -> bool:
    """True when kernels are numba-compiled in this process."""
    return _NUMBA


def backend_name() -> str:
    return "numba" if _NUMBA else "numpy"


def compile_kernel(fn):
    """njit-compile ``fn`` on the numba path, return it unchanged otherwise."""
    if _NUMBA:
        return _njit(cache=True)(fn)
    return fn
