"""Pure numpy implementations of the hot kernels.

Same contracts as the compiled ``_kernels`` module; used when the extension
is unavailable or when ``LENSCUT_BACKEND=python``.
"""

import math

import numpy as np

_CHUNK = 512


def ell_value(tau, h, eta, p, branch):
    """ell_-(branch=-1) / ell_+(branch=+1) along the geodesic; for p = 1, q3/h3bar."""
    if p == 1:
        x = tau * eta * h
        safe = np.where(np.abs(x) < 1e-8, 1.0, x)
        sinc = np.where(np.abs(x) < 1e-8, 1.0 - x * x / 6.0, np.sin(safe) / safe)
        return tau * eta * np.cos(tau) * sinc + np.sin(tau) * np.cos(x)
    b = tau * eta * h + branch * math.pi / p
    return np.cos(tau) * np.sin(b) + h * np.sin(tau) * np.cos(b)


def ell_first_roots(h3, eta, p, branch, step, tol, cap):
    """First positive root in tau of ell_branch for every entry of h3 (NaN if none in (0, cap])."""
    h3 = np.ascontiguousarray(h3, dtype=float)
    n_rows = h3.size
    n = int(math.ceil(cap / step))
    out = np.full(n_rows, np.nan)
    lo = np.zeros(n_rows)
    hi = np.zeros(n_rows)
    flo = np.zeros(n_rows)
    pending = np.ones(n_rows, dtype=bool)  # no bracket found yet
    bracketed = np.zeros(n_rows, dtype=bool)
    prev_t = np.zeros(n_rows)
    prev_f = np.zeros(n_rows)
    have_prev = False
    for start in range(1, n + 1, _CHUNK):
        rows = np.flatnonzero(pending)
        if rows.size == 0:
            break
        ks = np.arange(start, min(start + _CHUNK, n + 1), dtype=float)
        taus = np.minimum(ks * step, cap)
        vals = ell_value(taus[None, :], h3[rows, None], eta, p, branch)
        tt = np.broadcast_to(taus, vals.shape)
        if have_prev:
            vals = np.concatenate([prev_f[rows, None], vals], axis=1)
            tt = np.concatenate([prev_t[rows, None], tt], axis=1)
        s = np.sign(vals)
        zero = s == 0
        change = np.zeros_like(zero)
        change[:, 1:] = s[:, 1:] * s[:, :-1] < 0
        event = zero | change
        hit = event.any(axis=1)
        first = np.argmax(event, axis=1)
        for r_local in np.flatnonzero(hit):
            r = rows[r_local]
            c = first[r_local]
            pending[r] = False
            if zero[r_local, c]:
                out[r] = tt[r_local, c]
            else:
                lo[r], hi[r], flo[r] = tt[r_local, c - 1], tt[r_local, c], vals[r_local, c - 1]
                bracketed[r] = True
        prev_t[rows] = tt[:, -1]
        prev_f[rows] = vals[:, -1]
        have_prev = True

    active = bracketed & (hi - lo > tol)
    slo = np.sign(flo)
    while active.any():
        idx = np.flatnonzero(active)
        mid = 0.5 * (lo[idx] + hi[idx])
        fm = ell_value(mid, h3[idx], eta, p, branch)
        exact = fm == 0.0
        same = np.sign(fm) == slo[idx]
        lo[idx] = np.where(exact | same, mid, lo[idx])
        hi[idx] = np.where(exact | ~same, mid, hi[idx])
        active[idx] = (hi[idx] - lo[idx] > tol) & ~exact
    done = bracketed
    out[done] = 0.5 * (lo[done] + hi[done])
    return out


def shoot_scan(h3s, phis, tau_step, m_max, eta, orbit, radius):
    """Scan the (h3bar, phi, tau) shooting grid against a target orbit.

    For each covector the distance-to-orbit curve is sampled at tau = m*tau_step,
    m = 0..m_max[i]; its local minima below ``radius`` are returned as arrays
    (i, j, m, k, d) with k the closest deck image and d the chordal distance.
    """
    h3s = np.asarray(h3s, dtype=float)
    phis = np.asarray(phis, dtype=float)
    orbit = np.asarray(orbit, dtype=float)
    cphi, sphi = np.cos(phis), np.sin(phis)
    out = [[], [], [], [], []]
    for i, h in enumerate(h3s):
        M = int(m_max[i])
        taus = np.arange(M + 1) * tau_step
        ct, st = np.cos(taus), np.sin(taus)
        b = taus * eta * h
        cb, sb = np.cos(b), np.sin(b)
        q0 = ct * cb - h * st * sb
        q3 = ct * sb + h * st * cb
        r = math.sqrt(max(0.0, 1.0 - h * h))
        h1 = r * cphi
        h2 = r * sphi
        q1 = st[:, None] * (cb[:, None] * h1 + sb[:, None] * h2)
        q2 = st[:, None] * (cb[:, None] * h2 - sb[:, None] * h1)
        best = np.full(q1.shape, np.inf)
        kbest = np.zeros(q1.shape, dtype=np.int64)
        for k, a in enumerate(orbit):
            d2 = ((q0 - a[0]) ** 2)[:, None] + (q1 - a[1]) ** 2 + (q2 - a[2]) ** 2 + ((q3 - a[3]) ** 2)[:, None]
            better = d2 < best
            best = np.where(better, d2, best)
            kbest = np.where(better, k, kbest)
        d = np.sqrt(best)
        if M == 0:
            is_min = np.ones_like(d, dtype=bool)
        else:
            is_min = np.zeros_like(d, dtype=bool)
            is_min[0] = d[0] < d[1]
            is_min[1:-1] = (d[1:-1] <= d[:-2]) & (d[1:-1] < d[2:])
            is_min[-1] = d[-1] <= d[-2]
        mm, jj = np.nonzero(is_min & (d < radius))
        out[0].append(np.full(mm.size, i, dtype=np.int64))
        out[1].append(jj.astype(np.int64))
        out[2].append(mm.astype(np.int64))
        out[3].append(kbest[mm, jj])
        out[4].append(d[mm, jj])
    if not out[0]:
        return tuple(np.zeros(0, dtype=np.int64) for _ in range(4)) + (np.zeros(0),)
    return tuple(np.concatenate(c) for c in out)
