"""Derivative-free searches taking Python callables.

These are the interpreted counterparts of the specialized loop kernels in
``kernels``: the numpy backend routes its lambda-plane minimizations and
scalar refinements through here so that the expensive part of each
evaluation stays vectorized.  They also serve as an independent
implementation for cross-checking the kernels in the test suite.
"""

from __future__ import annotations

import math
from typing import Callable, Sequence

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_INVPHI2 = (3.0 - math.sqrt(5.0)) / 2.0


def golden_section_max(f: Callable[[float], float], lo: float, hi: float,
                       tol: float) -> tuple[float, float]:
    """Golden-section maximization on [lo, hi]; returns (argmax, max)."""
    a, b = lo, hi
    h = b - a
    c = a + _INVPHI2 * h
    d = a + _INVPHI * h
    fc = f(c)
    fd = f(d)
    while h > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            h = b - a
            c = a + _INVPHI2 * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + _INVPHI * h
            fd = f(d)
    return (c, fc) if fc > fd else (d, fd)


def nelder_mead_2d(f: Callable[[float, float], float],
                   starts: Sequence[tuple[float, float]],
                   step0: float, xatol: float, fatol: float,
                   maxiter: int) -> tuple[float, float, float]:
    """Multi-start Nelder-Mead on the plane; returns (x, y, fmin).

    Reduction over starts is best-by-value with ties kept in start order,
    matching the reduction of the jitted kernel.
    """
    rho, chi, psi, shrink = 1.0, 2.0, 0.5, 0.5
    best = (starts[0][0], starts[0][1], math.inf)
    for sx, sy in starts:
        xs = [[sx, sy], [sx + step0, sy], [sx, sy + step0]]
        fs = [f(x, y) for x, y in xs]
        for _ in range(maxiter):
            order = sorted(range(3), key=lambda i: fs[i])
            xs = [xs[i] for i in order]
            fs = [fs[i] for i in order]
            diam = max(max(abs(xs[i][0] - xs[0][0]), abs(xs[i][1] - xs[0][1]))
                       for i in (1, 2))
            if diam <= xatol and fs[2] - fs[0] <= fatol:
                break
            cx = 0.5 * (xs[0][0] + xs[1][0])
            cy = 0.5 * (xs[0][1] + xs[1][1])
            xr = (cx + rho * (cx - xs[2][0]), cy + rho * (cy - xs[2][1]))
            fr = f(*xr)
            if fr < fs[0]:
                xe = (cx + rho * chi * (cx - xs[2][0]),
                      cy + rho * chi * (cy - xs[2][1]))
                fe = f(*xe)
                if fe < fr:
                    xs[2], fs[2] = list(xe), fe
                else:
                    xs[2], fs[2] = list(xr), fr
            elif fr < fs[1]:
                xs[2], fs[2] = list(xr), fr
            else:
                do_shrink = False
                if fr < fs[2]:
                    xc = (cx + psi * rho * (cx - xs[2][0]),
                          cy + psi * rho * (cy - xs[2][1]))
                    fc = f(*xc)
                    if fc <= fr:
                        xs[2], fs[2] = list(xc), fc
                    else:
                        do_shrink = True
                else:
                    xc = (cx - psi * (cx - xs[2][0]),
                          cy - psi * (cy - xs[2][1]))
                    fc = f(*xc)
                    if fc < fs[2]:
                        xs[2], fs[2] = list(xc), fc
                    else:
                        do_shrink = True
                if do_shrink:
                    for i in (1, 2):
                        xs[i][0] = xs[0][0] + shrink * (xs[i][0] - xs[0][0])
                        xs[i][1] = xs[0][1] + shrink * (xs[i][1] - xs[0][1])
                        fs[i] = f(xs[i][0], xs[i][1])
        for i in range(3):
            if fs[i] < best[2]:
                best = (xs[i][0], xs[i][1], fs[i])
    return best
