# cython: language_level=3
"""Compiled hot kernels: first roots of ell_+- over h3bar grids, and the
shooting-grid scan used by the brute-force oracle.

Contracts match ``lenscut._fallback`` exactly.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport sin, cos, sqrt, fabs, ceil, fmin, M_PI, NAN, INFINITY

cnp.import_array()


cdef inline double ell_value(double tau, double h, double eta, int p, double shift) noexcept nogil:
    cdef double x, sinc, b
    if p == 1:
        x = tau * eta * h
        if fabs(x) < 1e-8:
            sinc = 1.0 - x * x / 6.0
        else:
            sinc = sin(x) / x
        return tau * eta * cos(tau) * sinc + sin(tau) * cos(x)
    b = tau * eta * h + shift
    return cos(tau) * sin(b) + h * sin(tau) * cos(b)


cdef inline int sgn(double v) noexcept nogil:
    return (v > 0) - (v < 0)


cdef double first_root(double h, double eta, int p, double shift,
                       double step, double tol, double cap) noexcept nogil:
    cdef long n = <long>ceil(cap / step)
    cdef long k
    cdef double t_prev, f_prev, t, f, lo, hi, mid, fm
    cdef int slo
    t_prev = fmin(step, cap)
    f_prev = ell_value(t_prev, h, eta, p, shift)
    if f_prev == 0.0:
        return t_prev
    for k in range(2, n + 1):
        t = fmin(k * step, cap)
        f = ell_value(t, h, eta, p, shift)
        if f == 0.0:
            return t
        if sgn(f) * sgn(f_prev) < 0:
            lo = t_prev
            hi = t
            slo = sgn(f_prev)
            while hi - lo > tol:
                mid = 0.5 * (lo + hi)
                fm = ell_value(mid, h, eta, p, shift)
                if fm == 0.0:
                    return mid
                if sgn(fm) == slo:
                    lo = mid
                else:
                    hi = mid
            return 0.5 * (lo + hi)
        t_prev = t
        f_prev = f
    return NAN


def ell_first_roots(h3, double eta, int p, int branch, double step, double tol, double cap):
    """First positive root in tau of ell_branch for every entry of h3 (NaN if none in (0, cap])."""
    cdef double[::1] hv = np.ascontiguousarray(h3, dtype=np.float64)
    cdef Py_ssize_t n = hv.shape[0], i
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] ov = out
    cdef double shift = branch * M_PI / p
    with nogil:
        for i in range(n):
            ov[i] = first_root(hv[i], eta, p, shift, step, tol, cap)
    return out


def shoot_scan(h3s, phis, double tau_step, m_max, double eta, orbit, double radius):
    """Scan the (h3bar, phi, tau) shooting grid against a target orbit.

    Returns arrays (i, j, m, k, d) of the local minima in tau, below ``radius``,
    of the chordal distance to the closest deck image k.
    """
    cdef double[::1] hv = np.ascontiguousarray(h3s, dtype=np.float64)
    cdef double[::1] pv = np.ascontiguousarray(phis, dtype=np.float64)
    cdef long[::1] mv = np.ascontiguousarray(m_max, dtype=np.int64)
    cdef double[:, ::1] ov = np.ascontiguousarray(orbit, dtype=np.float64)
    cdef Py_ssize_t n_h = hv.shape[0], n_phi = pv.shape[0], n_k = ov.shape[0]
    cdef Py_ssize_t i, j, k, m, M, M_all = 0
    for i in range(n_h):
        if mv[i] > M_all:
            M_all = mv[i]

    ct_a = np.empty(M_all + 1)
    st_a = np.empty(M_all + 1)
    cdef double[::1] ct = ct_a, st = st_a
    for m in range(M_all + 1):
        ct[m] = cos(m * tau_step)
        st[m] = sin(m * tau_step)

    h1_a = np.empty(n_phi)
    h2_a = np.empty(n_phi)
    prev1_a = np.empty(n_phi)
    prev2_a = np.empty(n_phi)
    kprev_a = np.empty(n_phi, dtype=np.int64)
    cdef double[::1] h1 = h1_a, h2 = h2_a, prev1 = prev1_a, prev2 = prev2_a
    cdef long[::1] kprev = kprev_a
    cphi = np.cos(pv)
    sphi = np.sin(pv)
    cdef double[::1] cph = cphi, sph = sphi

    cdef double h, r, tau, b, cb, sb, q0, q1, q2, q3, d2, best, dcur, e
    cdef long kb
    cdef bint is_min
    ii, jj, mm, kk, dd = [], [], [], [], []

    for i in range(n_h):
        h = hv[i]
        M = mv[i]
        r = sqrt(1.0 - h * h) if h * h < 1.0 else 0.0
        for j in range(n_phi):
            h1[j] = r * cph[j]
            h2[j] = r * sph[j]
        for m in range(M + 1):
            tau = m * tau_step
            b = tau * eta * h
            cb = cos(b)
            sb = sin(b)
            q0 = ct[m] * cb - h * st[m] * sb
            q3 = ct[m] * sb + h * st[m] * cb
            for j in range(n_phi):
                q1 = st[m] * (cb * h1[j] + sb * h2[j])
                q2 = st[m] * (cb * h2[j] - sb * h1[j])
                best = INFINITY
                kb = 0
                for k in range(n_k):
                    e = q0 - ov[k, 0]
                    d2 = e * e
                    e = q1 - ov[k, 1]
                    d2 = d2 + e * e
                    e = q2 - ov[k, 2]
                    d2 = d2 + e * e
                    e = q3 - ov[k, 3]
                    d2 = d2 + e * e
                    if d2 < best:
                        best = d2
                        kb = k
                dcur = sqrt(best)
                if m >= 1:
                    # decide whether sample m-1 was a local minimum
                    if m == 1:
                        is_min = prev1[j] < dcur
                    else:
                        is_min = prev1[j] <= prev2[j] and prev1[j] < dcur
                    if is_min and prev1[j] < radius:
                        ii.append(i)
                        jj.append(j)
                        mm.append(m - 1)
                        kk.append(kprev[j])
                        dd.append(prev1[j])
                if m == M:
                    if M == 0:
                        is_min = True
                    else:
                        is_min = dcur <= prev1[j]
                    if is_min and dcur < radius:
                        ii.append(i)
                        jj.append(j)
                        mm.append(m)
                        kk.append(kb)
                        dd.append(dcur)
                prev2[j] = prev1[j]
                prev1[j] = dcur
                kprev[j] = kb
    return (np.array(ii, dtype=np.int64), np.array(jj, dtype=np.int64),
            np.array(mm, dtype=np.int64), np.array(kk, dtype=np.int64),
            np.array(dd, dtype=np.float64))
