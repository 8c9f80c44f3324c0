"""Hot numeric kernels.

Everything in the first part of this module is written against the numba
nopython subset (loops, scalars, flat numpy) and compiled via
``backend.compile_kernel``; on the numpy backend the same definitions run
interpreted.  The second part provides vectorized pure-numpy alternates
(batched LAPACK, broadcast grids) that callers substitute for the loop
kernels when numba is off.

Kernels take explicit numeric parameters only; defaults live in
``config.DEFAULTS`` and are resolved by the calling modules.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .backend import compile_kernel

_TWO_PI = 2.0 * math.pi


# ---------------------------------------------------------------------------
# Hermitian eigensolver: cyclic Jacobi with complex Givens rotations
# ---------------------------------------------------------------------------

def jacobi_eigh(H, want_vectors, max_sweeps, rel_tol):
    """Full spectral decomposition of a Hermitian matrix.

    Returns (eigenvalues descending, eigenvector columns, converged flag).
    Convergence: off-diagonal Frobenius mass below rel_tol * ||H||_F within
    the sweep budget.
    """
    n = H.shape[0]
    A = H.copy()
    V = np.eye(n, dtype=np.complex128)
    w = np.empty(n, dtype=np.float64)
    if n == 1:
        w[0] = A[0, 0].real
        return w, V, True

    fro2 = 0.0
    for i in range(n):
        for j in range(n):
            z = A[i, j]
            fro2 += z.real * z.real + z.imag * z.imag
    if fro2 == 0.0:
        for i in range(n):
            w[i] = 0.0
        return w, V, True
    thresh = rel_tol * math.sqrt(fro2)
    thresh2 = thresh * thresh
    skip = thresh / (10.0 * n)

    converged = False
    for _sweep in range(max_sweeps):
        off2 = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                z = A[i, j]
                off2 += 2.0 * (z.real * z.real + z.imag * z.imag)
        if off2 <= thresh2:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                aw = math.hypot(apq.real, apq.imag)
                if aw <= skip:
                    continue
                u = A[p, p].real
                v = A[q, q].real
                phi = math.atan2(apq.imag, apq.real)
                theta = 0.5 * math.atan2(2.0 * aw, u - v)
                c = math.cos(theta)
                s = math.sin(theta)
                em = complex(math.cos(phi), -math.sin(phi))  # e^{-i phi}
                ep = em.conjugate()
                for k in range(n):
                    if k == p or k == q:
                        continue
                    akp = A[k, p]
                    akq = A[k, q]
                    A[k, p] = c * akp + s * em * akq
                    A[k, q] = -s * ep * akp + c * akq
                    A[p, k] = A[k, p].conjugate()
                    A[q, k] = A[k, q].conjugate()
                app = c * c * u + 2.0 * c * s * aw + s * s * v
                aqq = s * s * u - 2.0 * c * s * aw + c * c * v
                A[p, p] = complex(app, 0.0)
                A[q, q] = complex(aqq, 0.0)
                A[p, q] = complex(0.0, 0.0)
                A[q, p] = complex(0.0, 0.0)
                if want_vectors:
                    for k in range(n):
                        vkp = V[k, p]
                        vkq = V[k, q]
                        V[k, p] = c * vkp + s * em * vkq
                        V[k, q] = -s * ep * vkp + c * vkq
    else:
        off2 = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                z = A[i, j]
                off2 += 2.0 * (z.real * z.real + z.imag * z.imag)
        converged = off2 <= thresh2

    for i in range(n):
        w[i] = A[i, i].real
    order = np.argsort(-w)
    ws = np.empty(n, dtype=np.float64)
    Vs = np.empty((n, n), dtype=np.complex128)
    for k in range(n):
        ws[k] = w[order[k]]
        for i in range(n):
            Vs[i, k] = V[i, order[k]]
    return ws, Vs, converged


jacobi_eigh = compile_kernel(jacobi_eigh)


def max_eig_hermitian(H, max_sweeps, rel_tol):
    w, _, _ = jacobi_eigh(H, False, max_sweeps, rel_tol)
    return w[0]


max_eig_hermitian = compile_kernel(max_eig_hermitian)


# ---------------------------------------------------------------------------
# Rotated Hermitian parts and the angle sweep behind the numerical radius
# ---------------------------------------------------------------------------

def rotated_part(T, theta):
    """0.5 * (e^{i theta} T + e^{-i theta} T^H); Hermitian by construction."""
    n = T.shape[0]
    z = cmath.exp(1j * theta)
    H = np.empty((n, n), dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            H[i, j] = 0.5 * (z * T[i, j] + (z * T[j, i]).conjugate())
    return H


rotated_part = compile_kernel(rotated_part)


def max_eig_at_theta(T, theta, max_sweeps, rel_tol):
    return max_eig_hermitian(rotated_part(T, theta), max_sweeps, rel_tol)


max_eig_at_theta = compile_kernel(max_eig_at_theta)


def sweep_max_eigs(T, thetas, max_sweeps, rel_tol):
    m = thetas.shape[0]
    vals = np.empty(m, dtype=np.float64)
    for k in range(m):
        vals[k] = max_eig_at_theta(T, thetas[k], max_sweeps, rel_tol)
    return vals


sweep_max_eigs = compile_kernel(sweep_max_eigs)


def golden_max_theta(T, lo, hi, tol, max_sweeps, rel_tol):
    """Golden-section maximization of the top rotated eigenvalue on [lo, hi]."""
    invphi = 0.6180339887498949
    invphi2 = 0.3819660112501051
    a = lo
    b = hi
    h = b - a
    c = a + invphi2 * h
    d = a + invphi * h
    fc = max_eig_at_theta(T, c, max_sweeps, rel_tol)
    fd = max_eig_at_theta(T, d, max_sweeps, rel_tol)
    while h > tol:
        if fc > fd:
            b = d
            d = c
            fd = fc
            h = b - a
            c = a + invphi2 * h
            fc = max_eig_at_theta(T, c, max_sweeps, rel_tol)
        else:
            a = c
            c = d
            fc = fd
            h = b - a
            d = a + invphi * h
            fd = max_eig_at_theta(T, d, max_sweeps, rel_tol)
    if fc > fd:
        return c, fc
    return d, fd


golden_max_theta = compile_kernel(golden_max_theta)


def _top_peaks(vals, n_peaks, out_idx):
    """Indices of up to n_peaks best circular local maxima, by value."""
    m = vals.shape[0]
    count = 0
    for _ in range(n_peaks):
        best = -1.0e308
        best_i = -1
        for i in range(m):
            left = vals[(i - 1) % m]
            right = vals[(i + 1) % m]
            if vals[i] < left or vals[i] < right:
                continue
            taken = False
            for t in range(count):
                if out_idx[t] == i:
                    taken = True
                    break
            if taken:
                continue
            if vals[i] > best:
                best = vals[i]
                best_i = i
        if best_i < 0:
            break
        out_idx[count] = best_i
        count += 1
    return count


_top_peaks = compile_kernel(_top_peaks)


def omega_theta_kernel(T, n_grid, refine_tol, n_peaks, max_sweeps, rel_tol):
    """Numerical radius via grid sweep plus golden refinement of top peaks.

    Returns (omega, theta_star) with theta_star in [0, 2 pi).
    """
    dtheta = _TWO_PI / n_grid
    vals = np.empty(n_grid, dtype=np.float64)
    for k in range(n_grid):
        vals[k] = max_eig_at_theta(T, k * dtheta, max_sweeps, rel_tol)
    best = vals[0]
    best_theta = 0.0
    for k in range(1, n_grid):
        if vals[k] > best:
            best = vals[k]
            best_theta = k * dtheta
    idx = np.empty(n_peaks, dtype=np.int64)
    count = _top_peaks(vals, n_peaks, idx)
    for t in range(count):
        i = idx[t]
        lo = (i - 1) * dtheta
        hi = (i + 1) * dtheta
        th, v = golden_max_theta(T, lo, hi, refine_tol, max_sweeps, rel_tol)
        if v > best:
            best = v
            best_theta = th % _TWO_PI
    return best, best_theta


omega_theta_kernel = compile_kernel(omega_theta_kernel)


# ---------------------------------------------------------------------------
# Fast 2x2 evaluations
# ---------------------------------------------------------------------------

def _rot_max_eig_2x2(tau, delta, c0, w, theta):
    # top eigenvalue of the rotated part of a 2x2 matrix:
    #   Re(e^{i t} tau)/2 + sqrt(c0 + Re(e^{2 i t} w))/2
    # with tau/delta the trace/diagonal difference, c0 and w the invariants
    # |delta|^2/2 + |m01|^2 + |m10|^2 and delta^2/2 + 2 m01 m10.
    z = cmath.exp(1j * theta)
    rad = c0 + (z * z * w).real
    if rad < 0.0:
        rad = 0.0
    return 0.5 * (z * tau).real + 0.5 * math.sqrt(rad)


_rot_max_eig_2x2 = compile_kernel(_rot_max_eig_2x2)


def omega_2x2(M):
    """Numerical radius of a 2x2 matrix.

    Maximizes the closed-form top rotated eigenvalue over the direction
    angle: a 64-point grid brackets every peak of the two-harmonic profile
    and golden-section refinement to 1e-12 makes the value exact to
    machine precision.
    """
    # plain-complex scalars keep the interpreted fallback off numpy-scalar
    # arithmetic; a no-op under compilation
    m00 = complex(M[0, 0].real, M[0, 0].imag)
    m01 = complex(M[0, 1].real, M[0, 1].imag)
    m10 = complex(M[1, 0].real, M[1, 0].imag)
    m11 = complex(M[1, 1].real, M[1, 1].imag)
    tau = m00 + m11
    delta = m00 - m11
    c0 = (0.5 * (delta.real * delta.real + delta.imag * delta.imag)
          + m01.real * m01.real + m01.imag * m01.imag
          + m10.real * m10.real + m10.imag * m10.imag)
    w = 0.5 * delta * delta + 2.0 * m01 * m10
    n_grid = 64
    dtheta = _TWO_PI / n_grid
    vals = np.empty(n_grid, dtype=np.float64)
    for k in range(n_grid):
        vals[k] = _rot_max_eig_2x2(tau, delta, c0, w, k * dtheta)
    best = vals[0]
    for k in range(1, n_grid):
        if vals[k] > best:
            best = vals[k]
    idx = np.empty(3, dtype=np.int64)
    count = _top_peaks(vals, 3, idx)
    invphi = 0.6180339887498949
    invphi2 = 0.3819660112501051
    for t in range(count):
        a = (idx[t] - 1) * dtheta
        b = (idx[t] + 1) * dtheta
        h = b - a
        c = a + invphi2 * h
        d = a + invphi * h
        fc = _rot_max_eig_2x2(tau, delta, c0, w, c)
        fd = _rot_max_eig_2x2(tau, delta, c0, w, d)
        while h > 1e-12:
            if fc > fd:
                b = d
                d = c
                fd = fc
                h = b - a
                c = a + invphi2 * h
                fc = _rot_max_eig_2x2(tau, delta, c0, w, c)
            else:
                a = c
                c = d
                fc = fd
                h = b - a
                d = a + invphi * h
                fd = _rot_max_eig_2x2(tau, delta, c0, w, d)
        v = fc if fc > fd else fd
        if v > best:
            best = v
    return best


omega_2x2 = compile_kernel(omega_2x2)


def sigma_max_2x2(M):
    """Largest singular value of a 2x2 matrix from the M^H M invariants."""
    fro2 = 0.0
    for i in range(2):
        for j in range(2):
            z = M[i, j]
            fro2 += z.real * z.real + z.imag * z.imag
    det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
    d2 = det.real * det.real + det.imag * det.imag
    disc = fro2 * fro2 - 4.0 * d2
    if disc < 0.0:
        disc = 0.0
    lam = 0.5 * (fro2 + math.sqrt(disc))
    if lam < 0.0:
        lam = 0.0
    return math.sqrt(lam)


sigma_max_2x2 = compile_kernel(sigma_max_2x2)


def opnorm_kernel(M, max_sweeps, rel_tol):
    n = M.shape[0]
    if n == 2:
        return sigma_max_2x2(M)
    G = np.empty((n, n), dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            acc = complex(0.0, 0.0)
            for k in range(n):
                acc += M[k, i].conjugate() * M[k, j]
            G[i, j] = acc
    lam = max_eig_hermitian(G, max_sweeps, rel_tol)
    if lam < 0.0:
        lam = 0.0
    return math.sqrt(lam)


opnorm_kernel = compile_kernel(opnorm_kernel)


def omega_fast(M, n_grid, refine_tol, max_sweeps, rel_tol):
    """Value-only numerical radius: exact at n=2, sweep otherwise."""
    if M.shape[0] == 2:
        return omega_2x2(M)
    om, _ = omega_theta_kernel(M, n_grid, refine_tol, 2, max_sweeps, rel_tol)
    return om


omega_fast = compile_kernel(omega_fast)


# ---------------------------------------------------------------------------
# Brute-force 2x2 oracle on the (t, s) sphere grid
# ---------------------------------------------------------------------------

def oracle_2x2(M, n_t, n_s):
    """Exhaustive max of |<Mx, x>| over x = (cos t, e^{is} sin t).

    Global phase of x leaves the quadratic form modulus unchanged, so the
    two-angle grid covers the whole unit sphere of C^2.
    """
    m00 = complex(M[0, 0].real, M[0, 0].imag)
    m01 = complex(M[0, 1].real, M[0, 1].imag)
    m10 = complex(M[1, 0].real, M[1, 0].imag)
    m11 = complex(M[1, 1].real, M[1, 1].imag)
    # hoist the phase-dependent coupling out of the inner loop
    w = np.empty(n_s, dtype=np.complex128)
    for j in range(n_s):
        sarg = _TWO_PI * j / n_s
        e = complex(math.cos(sarg), math.sin(sarg))
        w[j] = m01 * e + m10 * e.conjugate()
    best = 0.0
    half_pi = 0.5 * math.pi
    for i in range(n_t):
        t = half_pi * i / (n_t - 1)
        c = math.cos(t)
        sn = math.sin(t)
        diag = m00 * (c * c) + m11 * (sn * sn)
        g = c * sn
        for j in range(n_s):
            val = diag + g * w[j]
            mod = val.real * val.real + val.imag * val.imag
            if mod > best:
                best = mod
    return math.sqrt(best)


oracle_2x2 = compile_kernel(oracle_2x2)


# ---------------------------------------------------------------------------
# Nelder-Mead over the complex lambda plane
# ---------------------------------------------------------------------------

def _nm_eval(T, S, a, b, obj_id, n_grid, refine_tol, max_sweeps, rel_tol):
    M = T + complex(a, b) * S
    if obj_id == 0:
        return omega_fast(M, n_grid, refine_tol, max_sweeps, rel_tol)
    return opnorm_kernel(M, max_sweeps, rel_tol)


_nm_eval = compile_kernel(_nm_eval)


def nm_min_lambda(T, S, obj_id, starts, step0, xatol, fatol, maxiter,
                  n_grid, refine_tol, max_sweeps, rel_tol):
    """Multi-start Nelder-Mead minimization of lambda -> f(T + lambda S).

    obj_id 0 minimizes the numerical radius, 1 the operator norm.  Both
    objectives are convex in (Re lambda, Im lambda), so every polished start
    lands on the global minimum; the deterministic starts guard against
    implementation error rather than local minima.  Returns (re, im, fmin).
    """
    rho = 1.0
    chi = 2.0
    psi = 0.5
    shrink = 0.5
    best_a = starts[0, 0]
    best_b = starts[0, 1]
    best_f = 1.0e308
    xs = np.empty((3, 2), dtype=np.float64)
    fs = np.empty(3, dtype=np.float64)
    for s_idx in range(starts.shape[0]):
        xs[0, 0] = starts[s_idx, 0]
        xs[0, 1] = starts[s_idx, 1]
        xs[1, 0] = starts[s_idx, 0] + step0
        xs[1, 1] = starts[s_idx, 1]
        xs[2, 0] = starts[s_idx, 0]
        xs[2, 1] = starts[s_idx, 1] + step0
        for i in range(3):
            fs[i] = _nm_eval(T, S, xs[i, 0], xs[i, 1], obj_id,
                             n_grid, refine_tol, max_sweeps, rel_tol)
        for _it in range(maxiter):
            # insertion sort of the three vertices by objective value
            for i in range(1, 3):
                fa = fs[i]
                xa0 = xs[i, 0]
                xa1 = xs[i, 1]
                j = i - 1
                while j >= 0 and fs[j] > fa:
                    fs[j + 1] = fs[j]
                    xs[j + 1, 0] = xs[j, 0]
                    xs[j + 1, 1] = xs[j, 1]
                    j -= 1
                fs[j + 1] = fa
                xs[j + 1, 0] = xa0
                xs[j + 1, 1] = xa1
            diam = 0.0
            for i in range(1, 3):
                da = abs(xs[i, 0] - xs[0, 0])
                db = abs(xs[i, 1] - xs[0, 1])
                if da > diam:
                    diam = da
                if db > diam:
                    diam = db
            if diam <= xatol and fs[2] - fs[0] <= fatol:
                break
            c0 = 0.5 * (xs[0, 0] + xs[1, 0])
            c1 = 0.5 * (xs[0, 1] + xs[1, 1])
            xr0 = c0 + rho * (c0 - xs[2, 0])
            xr1 = c1 + rho * (c1 - xs[2, 1])
            fr = _nm_eval(T, S, xr0, xr1, obj_id,
                          n_grid, refine_tol, max_sweeps, rel_tol)
            if fr < fs[0]:
                xe0 = c0 + rho * chi * (c0 - xs[2, 0])
                xe1 = c1 + rho * chi * (c1 - xs[2, 1])
                fe = _nm_eval(T, S, xe0, xe1, obj_id,
                              n_grid, refine_tol, max_sweeps, rel_tol)
                if fe < fr:
                    xs[2, 0] = xe0
                    xs[2, 1] = xe1
                    fs[2] = fe
                else:
                    xs[2, 0] = xr0
                    xs[2, 1] = xr1
                    fs[2] = fr
            elif fr < fs[1]:
                xs[2, 0] = xr0
                xs[2, 1] = xr1
                fs[2] = fr
            else:
                do_shrink = False
                if fr < fs[2]:
                    xc0 = c0 + psi * rho * (c0 - xs[2, 0])
                    xc1 = c1 + psi * rho * (c1 - xs[2, 1])
                    fc = _nm_eval(T, S, xc0, xc1, obj_id,
                                  n_grid, refine_tol, max_sweeps, rel_tol)
                    if fc <= fr:
                        xs[2, 0] = xc0
                        xs[2, 1] = xc1
                        fs[2] = fc
                    else:
                        do_shrink = True
                else:
                    xc0 = c0 - psi * (c0 - xs[2, 0])
                    xc1 = c1 - psi * (c1 - xs[2, 1])
                    fc = _nm_eval(T, S, xc0, xc1, obj_id,
                                  n_grid, refine_tol, max_sweeps, rel_tol)
                    if fc < fs[2]:
                        xs[2, 0] = xc0
                        xs[2, 1] = xc1
                        fs[2] = fc
                    else:
                        do_shrink = True
                if do_shrink:
                    for i in range(1, 3):
                        xs[i, 0] = xs[0, 0] + shrink * (xs[i, 0] - xs[0, 0])
                        xs[i, 1] = xs[0, 1] + shrink * (xs[i, 1] - xs[0, 1])
                        fs[i] = _nm_eval(T, S, xs[i, 0], xs[i, 1], obj_id,
                                         n_grid, refine_tol, max_sweeps, rel_tol)
        for i in range(3):
            if fs[i] < best_f:
                best_f = fs[i]
                best_a = xs[i, 0]
                best_b = xs[i, 1]
    return best_a, best_b, best_f


nm_min_lambda = compile_kernel(nm_min_lambda)


# ---------------------------------------------------------------------------
# Unimodular phase scan for parallelism
# ---------------------------------------------------------------------------

def _omega_at_phase(T, S, phi, n_grid, refine_tol, max_sweeps, rel_tol):
    return omega_fast(T + cmath.exp(1j * phi) * S,
                      n_grid, refine_tol, max_sweeps, rel_tol)


_omega_at_phase = compile_kernel(_omega_at_phase)


def phase_scan(T, S, n_phi, n_grid, refine_tol, phi_tol, n_peaks,
               max_sweeps, rel_tol):
    """Maximize phi -> omega(T + e^{i phi} S) over the unit circle.

    Grid scan plus golden refinement of the leading circular peaks.
    Returns (phi_star in [0, 2 pi), max value).
    """
    dphi = _TWO_PI / n_phi
    vals = np.empty(n_phi, dtype=np.float64)
    for k in range(n_phi):
        vals[k] = _omega_at_phase(T, S, k * dphi, n_grid, refine_tol,
                                  max_sweeps, rel_tol)
    best = vals[0]
    best_phi = 0.0
    for k in range(1, n_phi):
        if vals[k] > best:
            best = vals[k]
            best_phi = k * dphi
    idx = np.empty(n_peaks, dtype=np.int64)
    count = _top_peaks(vals, n_peaks, idx)
    invphi = 0.6180339887498949
    invphi2 = 0.3819660112501051
    for t in range(count):
        i = idx[t]
        a = (i - 1) * dphi
        b = (i + 1) * dphi
        h = b - a
        c = a + invphi2 * h
        d = a + invphi * h
        fc = _omega_at_phase(T, S, c, n_grid, refine_tol, max_sweeps, rel_tol)
        fd = _omega_at_phase(T, S, d, n_grid, refine_tol, max_sweeps, rel_tol)
        while h > phi_tol:
            if fc > fd:
                b = d
                d = c
                fd = fc
                h = b - a
                c = a + invphi2 * h
                fc = _omega_at_phase(T, S, c, n_grid, refine_tol,
                                     max_sweeps, rel_tol)
            else:
                a = c
                c = d
                fc = fd
                h = b - a
                d = a + invphi * h
                fd = _omega_at_phase(T, S, d, n_grid, refine_tol,
                                     max_sweeps, rel_tol)
        if fc > fd:
            if fc > best:
                best = fc
                best_phi = c % _TWO_PI
        else:
            if fd > best:
                best = fd
                best_phi = d % _TWO_PI
    return best_phi, best


phase_scan = compile_kernel(phase_scan)


# ---------------------------------------------------------------------------
# Projected ascent on the unit sphere for quadratic-form products
# ---------------------------------------------------------------------------

def quad_form_kernel(M, x):
    n = M.shape[0]
    acc = complex(0.0, 0.0)
    for i in range(n):
        row = complex(0.0, 0.0)
        for j in range(n):
            row += M[i, j] * x[j]
        acc += x[i].conjugate() * row
    return acc


quad_form_kernel = compile_kernel(quad_form_kernel)


def _ascent_objective(fT, fS, obj_id):
    if obj_id == 0:
        return abs(fT) * abs(fS)
    return (fT * fS.conjugate()).real


_ascent_objective = compile_kernel(_ascent_objective)


def ascent_product(T, S, X0, obj_id, maxiter, step_tol):
    """Projected gradient ascent over unit vectors, one run per restart row.

    obj_id 0 maximizes |<Tx,x><Sx,x>|, obj_id 1 maximizes
    Re{<Tx,x> conj(<Sx,x>)}.  Step size halves on failure to improve;
    restarts are reduced best-first by value, ties by restart index.
    Returns (best value, best vector).
    """
    restarts = X0.shape[0]
    n = X0.shape[1]
    xbest = np.empty(n, dtype=np.complex128)
    for i in range(n):
        xbest[i] = X0[0, i]
    best = -1.0e308
    Tx = np.empty(n, dtype=np.complex128)
    THx = np.empty(n, dtype=np.complex128)
    Sx = np.empty(n, dtype=np.complex128)
    SHx = np.empty(n, dtype=np.complex128)
    G = np.empty(n, dtype=np.complex128)
    y = np.empty(n, dtype=np.complex128)
    x = np.empty(n, dtype=np.complex128)
    for r in range(restarts):
        nrm = 0.0
        for i in range(n):
            z = X0[r, i]
            nrm += z.real * z.real + z.imag * z.imag
        nrm = math.sqrt(nrm)
        if nrm == 0.0:
            continue
        for i in range(n):
            x[i] = X0[r, i] / nrm
        fT = quad_form_kernel(T, x)
        fS = quad_form_kernel(S, x)
        fcur = _ascent_objective(fT, fS, obj_id)
        eta = 0.5
        for _it in range(maxiter):
            for i in range(n):
                at = complex(0.0, 0.0)
                ath = complex(0.0, 0.0)
                asv = complex(0.0, 0.0)
                ash = complex(0.0, 0.0)
                for j in range(n):
                    at += T[i, j] * x[j]
                    ath += T[j, i].conjugate() * x[j]
                    asv += S[i, j] * x[j]
                    ash += S[j, i].conjugate() * x[j]
                Tx[i] = at
                THx[i] = ath
                Sx[i] = asv
                SHx[i] = ash
            aT = abs(fT)
            aS = abs(fS)
            if obj_id == 0:
                # d|f|/dconj(x) = (conj(f) Mx + f M^H x) / (2|f|)
                for i in range(n):
                    if aT > 1e-14:
                        gT = (fT.conjugate() * Tx[i] + fT * THx[i]) / (2.0 * aT)
                    else:
                        gT = 0.5 * (Tx[i] + THx[i])
                    if aS > 1e-14:
                        gS = (fS.conjugate() * Sx[i] + fS * SHx[i]) / (2.0 * aS)
                    else:
                        gS = 0.5 * (Sx[i] + SHx[i])
                    G[i] = aS * gT + aT * gS
            else:
                for i in range(n):
                    G[i] = 0.5 * (fS.conjugate() * Tx[i] + fT * SHx[i]
                                  + fS * THx[i] + fT.conjugate() * Sx[i])
            # remove the radial and global-phase directions
            ip = complex(0.0, 0.0)
            for i in range(n):
                ip += x[i].conjugate() * G[i]
            gnorm2 = 0.0
            for i in range(n):
                G[i] = G[i] - ip * x[i]
                gnorm2 += G[i].real * G[i].real + G[i].imag * G[i].imag
            if gnorm2 <= 1e-28 * (1.0 + fcur * fcur):
                break
            improved = False
            fTy = fT
            fSy = fS
            fy = fcur
            while eta > step_tol:
                nrm = 0.0
                for i in range(n):
                    y[i] = x[i] + eta * G[i]
                    nrm += y[i].real * y[i].real + y[i].imag * y[i].imag
                nrm = math.sqrt(nrm)
                for i in range(n):
                    y[i] = y[i] / nrm
                fTy = quad_form_kernel(T, y)
                fSy = quad_form_kernel(S, y)
                fy = _ascent_objective(fTy, fSy, obj_id)
                # sufficient-increase rule: plain first-improvement zigzags
                # across the ridge and converges sublinearly
                if fy > fcur + 1e-4 * eta * gnorm2:
                    improved = True
                    break
                eta *= 0.5
            if not improved:
                break
            for i in range(n):
                x[i] = y[i]
            fT = fTy
            fS = fSy
            fcur = fy
            eta = eta * 2.0
            if eta > 4.0:
                eta = 4.0
        if fcur > best:
            best = fcur
            for i in range(n):
                xbest[i] = x[i]
    return best, xbest


ascent_product = compile_kernel(ascent_product)


# ---------------------------------------------------------------------------
# Pure-numpy alternates (batched LAPACK / broadcasting); used when numba
# is off, and by the benchmark for comparison
# ---------------------------------------------------------------------------

def rotated_stack(T, thetas):
    z = np.exp(1j * np.asarray(thetas, dtype=np.float64))
    return 0.5 * (z[:, None, None] * T[None, :, :]
                  + np.conj(z)[:, None, None] * T.conj().T[None, :, :])


def sweep_max_eigs_numpy(T, thetas):
    return np.linalg.eigvalsh(rotated_stack(T, thetas))[:, -1]


def sweep_eigh_numpy(T, thetas):
    """Batched decompositions of the rotated parts; LAPACK ascending order."""
    return np.linalg.eigh(rotated_stack(T, thetas))


def oracle_2x2_numpy(M, n_t, n_s, chunk=128):
    t = np.linspace(0.0, 0.5 * np.pi, n_t)
    c = np.cos(t)
    sn = np.sin(t)
    diag = M[0, 0] * c * c + M[1, 1] * sn * sn
    g = c * sn
    e = np.exp(2j * np.pi * np.arange(n_s) / n_s)
    w = M[0, 1] * e + M[1, 0] * np.conj(e)
    best = 0.0
    for lo in range(0, n_t, chunk):
        hi = min(lo + chunk, n_t)
        block = np.abs(diag[lo:hi, None] + g[lo:hi, None] * w[None, :])
        m = float(block.max())
        if m > best:
            best = m
    return best


def ascent_product_numpy(T, S, X0, obj_id, maxiter, step_tol):
    """Vectorized-over-restarts version of ``ascent_product``.

    Runs all restarts in lockstep with per-restart step sizes; the
    reduction (best value, ties by restart index) matches the loop kernel.
    """
    X = np.array(X0, dtype=np.complex128)
    nrm = np.linalg.norm(X, axis=1)
    keep = nrm > 0
    X = X[keep] / nrm[keep][:, None]
    R, n = X.shape
    TH = T.conj().T
    SH = S.conj().T

    def forms(Y):
        return (np.einsum("ri,ij,rj->r", Y.conj(), T, Y),
                np.einsum("ri,ij,rj->r", Y.conj(), S, Y))

    def value(fT, fS):
        if obj_id == 0:
            return np.abs(fT) * np.abs(fS)
        return (fT * np.conj(fS)).real

    fT, fS = forms(X)
    f = value(fT, fS)
    eta = np.full(R, 0.5)
    active = np.ones(R, dtype=bool)
    for _ in range(maxiter):
        if not active.any():
            break
        TxA = X @ T.T
        THxA = X @ TH.T
        SxA = X @ S.T
        SHxA = X @ SH.T
        if obj_id == 0:
            aT = np.abs(fT)
            aS = np.abs(fS)
            safeT = np.where(aT > 1e-14, aT, 1.0)
            safeS = np.where(aS > 1e-14, aS, 1.0)
            gT = (np.conj(fT)[:, None] * TxA + fT[:, None] * THxA) / (2 * safeT[:, None])
            gT = np.where(aT[:, None] > 1e-14, gT, 0.5 * (TxA + THxA))
            gS = (np.conj(fS)[:, None] * SxA + fS[:, None] * SHxA) / (2 * safeS[:, None])
            gS = np.where(aS[:, None] > 1e-14, gS, 0.5 * (SxA + SHxA))
            G = aS[:, None] * gT + aT[:, None] * gS
        else:
            G = 0.5 * (np.conj(fS)[:, None] * TxA + fT[:, None] * SHxA
                       + fS[:, None] * THxA + np.conj(fT)[:, None] * SxA)
        ip = np.einsum("ri,ri->r", X.conj(), G)
        G = G - ip[:, None] * X
        gn2 = np.einsum("ri,ri->r", G.conj(), G).real
        active &= gn2 > 1e-28 * (1.0 + f * f)
        stepped = np.zeros(R, dtype=bool)
        for _halve in range(60):
            trial = active & ~stepped & (eta > step_tol)
            if not trial.any():
                break
            Y = X[trial] + eta[trial][:, None] * G[trial]
            Y = Y / np.linalg.norm(Y, axis=1)[:, None]
            fTy, fSy = (np.einsum("ri,ij,rj->r", Y.conj(), T, Y),
                        np.einsum("ri,ij,rj->r", Y.conj(), S, Y))
            fy = value(fTy, fSy)
            better = fy > f[trial] + 1e-4 * eta[trial] * gn2[trial]
            tidx = np.flatnonzero(trial)
            good = tidx[better]
            X[good] = Y[better]
            fT[good] = fTy[better]
            fS[good] = fSy[better]
            f[good] = fy[better]
            stepped[good] = True
            eta[good] = np.minimum(eta[good] * 2.0, 4.0)
            bad = tidx[~better]
            eta[bad] *= 0.5
        active &= stepped | (eta > step_tol)
    k = int(np.argmax(f))
    return float(f[k]), X[k].copy()
