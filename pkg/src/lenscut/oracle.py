"""Brute-force ground truth: distances by geodesic shooting, cut-point checks, Maxwell partners.

Nothing here uses the closed-form cut times except to decide *where* to look;
the verdicts come from scanning the exponential map on a dense grid of initial
covectors and polishing hits with nonlinear least squares.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.optimize import least_squares

from . import _backend
from .algebra import LensPoint, orbit_array
from .geodesic import exp_lens, exp_su2_array
from .metric import InitialCovector, MetricParams, t_of_tau, tau_of_t
from .times import t_cut


class NotReached(RuntimeError):
    """No grid geodesic came within eps_match of the target before the horizon."""


class NoPartner(RuntimeError):
    """No second covector reaches the same lens point at the given time."""


@dataclass(frozen=True)
class OracleConfig:
    """Shooting grid. ``n_t`` fixes the number of tau steps up to the horizon;
    when None the step is ``tau_step`` and the count adapts to each row."""

    n_h3: int = 181
    n_phi: int = 256
    n_t: int | None = None
    tau_step: float = math.pi / 512
    eps_match: float = 1e-3
    t_horizon: float = 2 * math.pi
    window: int = 8  # tau steps searched by the 2D local-minimum filter

    def __post_init__(self):
        if self.n_h3 < 2 or self.n_phi < 2 or (self.n_t is not None and self.n_t < 2):
            raise ValueError("grid sizes must be at least 2")
        if not self.eps_match > 0:
            raise ValueError("eps_match must be positive")
        if not self.t_horizon > 0:
            raise ValueError("t_horizon must be positive")
        if not self.tau_step > 0:
            raise ValueError("tau_step must be positive")


@dataclass(frozen=True)
class Connection:
    """A geodesic from o that reaches the target (up to ``residual`` in chordal distance)."""

    t: float
    covector: InitialCovector
    tau: float
    residual: float


@dataclass(frozen=True)
class CutPointReport:
    optimal_before: bool
    beaten_after: bool
    margin: float
    t_before: float
    t_after: float
    d_before: float
    d_after: float


def _grid(cfg: OracleConfig, params: MetricParams):
    h3 = np.linspace(-1.0, 1.0, cfg.n_h3)
    phis = 2.0 * math.pi * np.arange(cfg.n_phi) / cfg.n_phi
    tau_max = np.array([tau_of_t(cfg.t_horizon, float(h), params) for h in h3])
    if cfg.n_t is None:
        step = cfg.tau_step
    else:
        step = float(tau_max.max()) / (cfg.n_t - 1)
    m_max = np.floor(tau_max / step).astype(np.int64) + 1
    return h3, phis, step, m_max


def _coarse_radius(cfg: OracleConfig, params: MetricParams, step: float, tau_top: float) -> float:
    # distance from a hit to the nearest grid sample, bounded through the
    # partial derivatives of the closed-form geodesic; the sqrt term covers
    # the square-root behaviour of sqrt(1 - h3bar^2) near the poles
    dh = 2.0 / (cfg.n_h3 - 1)
    dphi = 2.0 * math.pi / cfg.n_phi
    e = abs(params.eta)
    return cfg.eps_match + 0.5 * (step * (1 + e) + dphi + dh * (2 + tau_top * e) + math.sqrt(2 * dh))


def _local_filter(cand, n_phi: int, window: int):
    """Keep candidates that are minimal among their grid neighbours with the same deck image."""
    ii, jj, mm, kk, dd = cand
    by_cell = {}
    for idx in range(ii.size):
        by_cell.setdefault((int(ii[idx]), int(jj[idx]), int(kk[idx])), []).append(idx)
    keep = []
    for idx in range(ii.size):
        i, j, m, k, d = int(ii[idx]), int(jj[idx]), int(mm[idx]), int(kk[idx]), dd[idx]
        ok = True
        for di in (-1, 0, 1):
            for dj in (-1, 0, 1):
                for o in by_cell.get((i + di, (j + dj) % n_phi, k), ()):
                    if o == idx or abs(int(mm[o]) - m) > window:
                        continue
                    if (dd[o], o) < (d, idx):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            keep.append(idx)
    return keep


def _polish(x0, target, eta):
    """Least-squares fit of (h3bar, phi, tau) so the SU(2) endpoint equals ``target``."""

    def resid(x):
        return exp_su2_array(x[0], x[1], x[2], eta) - target

    lo = [-1.0, -np.inf, 0.0]
    hi = [1.0, np.inf, np.inf]
    x0 = np.clip(np.asarray(x0, dtype=float), [-1.0, -np.inf, 0.0], [1.0, np.inf, np.inf])
    r0 = float(np.linalg.norm(resid(x0)))
    if r0 < 1e-14:
        return x0, r0
    res = least_squares(resid, x0, bounds=(lo, hi), xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=200)
    return res.x, float(np.linalg.norm(res.fun))


def shortest_connection(target: LensPoint, params: MetricParams, cfg: OracleConfig = OracleConfig(), backend=None) -> Connection:
    """Shortest geodesic from o to ``target`` found by the shooting grid; raises NotReached."""
    p, q, eta = params.p, params.q, params.eta
    orbit = orbit_array(target.rep, p, q)
    h3, phis, step, m_max = _grid(cfg, params)
    tau_top = float(m_max.max()) * step
    radius = _coarse_radius(cfg, params, step, tau_top)
    k = _backend.get_kernels(backend)
    cand = k.shoot_scan(h3, phis, step, m_max, float(eta), orbit, radius)
    keep = _local_filter(cand, cfg.n_phi, cfg.window)
    ii, jj, mm, kk, _ = cand

    coarse = [(t_of_tau(mm[c] * step, float(h3[ii[c]]), params), int(ii[c]), int(jj[c]), int(mm[c]), int(kk[c])) for c in keep]
    coarse.sort()
    dtdtau = 2.0 * math.sqrt(params.I1) * math.sqrt(max(1.0, 1.0 + eta))
    margin = dtdtau * (cfg.window * step + radius)
    best = None
    for t0, i, j, m, kidx in coarse:
        if best is not None and t0 > best.t + margin:
            break
        x, res = _polish((h3[i], phis[j], m * step), orbit[kidx], eta)
        if res >= cfg.eps_match:
            continue
        h, phi, tau = float(x[0]), float(x[1]) % (2 * math.pi), float(x[2])
        t = t_of_tau(tau, h, params)
        if t > cfg.t_horizon * (1 + 1e-12):
            continue
        if best is None or t < best.t:
            best = Connection(t, InitialCovector(h, phi), tau, res)
    if best is None:
        raise NotReached(f"no geodesic within {cfg.eps_match} of the target before t={cfg.t_horizon}")
    return best


def brute_distance(target: LensPoint, params: MetricParams, cfg: OracleConfig = OracleConfig(), backend=None) -> float:
    """Length of the shortest shooting-grid geodesic reaching ``target``; an upper bound on the distance."""
    return shortest_connection(target, params, cfg, backend).t


def slack(params: MetricParams, residual: float) -> float:
    """Upper bound on the metric length of a chord of length ``residual``, plus round-off.

    Speeds satisfy |dq/dt| >= 1 / (2 sqrt(max(I1, I3))) in R^4, so a chord of
    length r is bridged by a curve of metric length <= 2 sqrt(max I) r (1.01
    covers arc versus chord).
    """
    return 2.0 * math.sqrt(max(params.I1, params.I3)) * residual * 1.01 + 1e-9


def verify_cut_point(c: InitialCovector, params: MetricParams, delta: float, cfg: OracleConfig = OracleConfig(), backend=None) -> CutPointReport:
    """Check the geodesic of ``c`` is minimizing at (1-delta) t_cut and not at (1+delta) t_cut.

    Each verdict allows for the residual of the connection found, through
    :func:`slack`; it is sound by the triangle inequality.
    """
    if not 0 < delta < 0.2:
        raise ValueError("delta must lie in (0, 0.2)")
    T = t_cut(c.h3bar, params)
    t_x, t_y = (1 - delta) * T, (1 + delta) * T
    x = exp_lens(c, t_x, params)
    y = exp_lens(c, t_y, params)
    cx = shortest_connection(x, params, replace(cfg, t_horizon=t_x * 1.02), backend)
    cy = shortest_connection(y, params, replace(cfg, t_horizon=t_y * 1.02), backend)
    s_x = slack(params, cx.residual)
    s_y = slack(params, cy.residual)
    return CutPointReport(
        optimal_before=cx.t >= t_x - s_x,
        beaten_after=cy.t + s_y < t_y,
        margin=min(cx.t - (t_x - s_x), t_y - (cy.t + s_y)),
        t_before=t_x,
        t_after=t_y,
        d_before=cx.t,
        d_after=cy.t,
    )


def _lens_dist(pts: np.ndarray, orbit: np.ndarray):
    diff = pts[:, None, :] - orbit[None, :, :]
    d2 = np.einsum("nkc,nkc->nk", diff, diff)
    k = np.argmin(d2, axis=1)
    return np.sqrt(d2[np.arange(len(pts)), k]), k


def find_maxwell_partner(c: InitialCovector, params: MetricParams, cfg: OracleConfig = OracleConfig(), t: float | None = None):
    """Another covector (h3bar or -h3bar, phi') whose geodesic meets that of ``c`` at time t.

    ``t`` defaults to the cut time. Returns ``(partner, mismatch)`` with the
    mismatch in lens chordal distance; raises NoPartner above ``cfg.eps_match``.
    """
    if params.p < 2:
        raise ValueError("Maxwell partner search needs p >= 2")
    if t is None:
        t = t_cut(c.h3bar, params)
    tau = tau_of_t(t, c.h3bar, params)
    eta = params.eta
    x = exp_su2_array(c.h3bar, c.phi, tau, eta)
    orbit = orbit_array(x, params.p, params.q)
    phis = 2.0 * math.pi * np.arange(cfg.n_phi) / cfg.n_phi
    dphi = 2.0 * math.pi / cfg.n_phi
    signs = [c.h3bar] if c.h3bar == 0 else [c.h3bar, -c.h3bar]

    def angle_gap(a, b):
        return abs((a - b + math.pi) % (2 * math.pi) - math.pi)

    seeds = []
    for s in signs:
        pts = exp_su2_array(s, phis, tau, eta)
        d, k = _lens_dist(pts, orbit)
        if s == c.h3bar:
            near = np.array([angle_gap(f, c.phi) < 2.5 * dphi for f in phis])
            d = np.where(near, np.inf, d)
        for j in range(cfg.n_phi):
            if not np.isfinite(d[j]):
                continue
            left, right = d[(j - 1) % cfg.n_phi], d[(j + 1) % cfg.n_phi]
            if d[j] <= left and d[j] <= right:
                seeds.append((float(d[j]), s, float(phis[j]), int(k[j])))
    seeds.sort()
    best = None
    for d0, s, phi0, kidx in seeds[:8]:
        res = least_squares(
            lambda v: exp_su2_array(s, v[0], tau, eta) - orbit[kidx],
            [phi0],
            xtol=1e-15,
            ftol=1e-15,
            gtol=1e-15,
        )
        phi = float(res.x[0]) % (2 * math.pi)
        if s == c.h3bar and angle_gap(phi, c.phi) < 1e-6 and abs(s) < 1.0:
            continue  # slid back onto c itself
        mis = float(_lens_dist(exp_su2_array(s, phi, tau, eta)[None, :], orbit)[0][0])
        if best is None or mis < best[1]:
            best = (InitialCovector(s, phi), mis)
    if best is None or best[1] > cfg.eps_match:
        got = "none" if best is None else f"{best[1]:.3g}"
        raise NoPartner(f"best mismatch {got} exceeds {cfg.eps_match}")
    return best
