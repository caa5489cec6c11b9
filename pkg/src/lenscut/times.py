"""The boundary functions ell_+-, their first roots, conjugate, Maxwell and cut times."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import _backend
from .metric import MetricParams, covector_norm, t_of_tau
from .roots import DEFAULT_STEP, DEFAULT_TOL, NoRootInRange, RootConfig, ell_tau_cap, first_positive_root


class Regime(enum.Enum):
    BOUNDARY = "boundary"  # first Maxwell point on the glued boundary of the model domain
    ROTATION = "rotation"  # tau = pi, reached by the whole circle of rotated geodesics


@dataclass(frozen=True)
class CutData:
    """Times attached to one value of h3bar. Everything except ``t_cut`` is in tau units."""

    h3bar: float
    tau_ell_minus: float
    tau_ell_plus: float
    tau_ell: float
    tau_conj: float
    tau: float  # tau of the first Maxwell point
    t_cut: float
    regime: Regime


def _check(h3bar, eta, p):
    if not -1.0 <= h3bar <= 1.0:
        raise ValueError(f"h3bar={h3bar} outside [-1, 1]")
    if not eta > -1.0:
        raise ValueError("eta must exceed -1")
    if int(p) != p or p < 1:
        raise ValueError(f"p must be a positive integer, got {p!r}")


def _q3(tau, h3bar, eta):
    b = tau * eta * h3bar
    return np.cos(tau) * np.sin(b) + h3bar * np.sin(tau) * np.cos(b)


def ell_minus(tau, h3bar, eta, p):
    """cos(tau) sin(b - pi/p) + h3bar sin(tau) cos(b - pi/p), b = tau eta h3bar.

    Vanishes exactly when the geodesic point lies on the face arg z = -pi/p of the
    model domain. For p = 1 there is no boundary and q3 is returned instead.
    """
    if p == 1:
        return _q3(tau, h3bar, eta)
    b = tau * eta * h3bar - math.pi / p
    return np.cos(tau) * np.sin(b) + h3bar * np.sin(tau) * np.cos(b)


def ell_plus(tau, h3bar, eta, p):
    """Twin of :func:`ell_minus` for the face arg z = +pi/p."""
    if p == 1:
        return _q3(tau, h3bar, eta)
    b = tau * eta * h3bar + math.pi / p
    return np.cos(tau) * np.sin(b) + h3bar * np.sin(tau) * np.cos(b)


def _exact_endpoint(h3bar, eta, p, branch):
    # at |h3bar| = 1 the geodesic is a one-parameter subgroup and the roots are explicit
    near = math.pi / (p * (1.0 + eta))
    far = (p - 1) * math.pi / (p * (1.0 + eta))
    if p == 1:
        return near
    if h3bar > 0:
        return near if branch < 0 else far
    return far if branch < 0 else near


def _roots(h3, eta, p, branch, cfg: RootConfig | None, backend=None):
    h3 = np.atleast_1d(np.asarray(h3, dtype=float))
    if np.any(np.abs(h3) > 1.0):
        raise ValueError("h3bar outside [-1, 1]")
    if not eta > -1.0:
        raise ValueError("eta must exceed -1")
    if cfg is None:
        step, tol, cap = DEFAULT_STEP, DEFAULT_TOL, ell_tau_cap(eta)
    else:
        step, tol, cap = cfg.scan_step, cfg.tol, cfg.tau_cap
    out = np.empty_like(h3)
    ends = np.abs(h3) == 1.0
    for i in np.flatnonzero(ends):
        out[i] = _exact_endpoint(h3[i], eta, p, branch)
    inner = ~ends
    if inner.any():
        k = _backend.get_kernels(backend)
        out[inner] = k.ell_first_roots(h3[inner], float(eta), int(p), int(branch), step, tol, cap)
    if np.isnan(out).any():
        bad = h3[np.isnan(out)][0]
        raise NoRootInRange(f"ell root not found for h3bar={bad}, eta={eta}, p={p} below tau={cap}")
    return out


def tau_ell_minus(h3bar: float, eta: float, p: int, cfg: RootConfig | None = None) -> float:
    """First positive root in tau of ell_minus (of q3/h3bar when p = 1)."""
    _check(h3bar, eta, p)
    return float(_roots(h3bar, eta, p, -1, cfg)[0])


def tau_ell_plus(h3bar: float, eta: float, p: int, cfg: RootConfig | None = None) -> float:
    """First positive root in tau of ell_plus (of q3/h3bar when p = 1)."""
    _check(h3bar, eta, p)
    return float(_roots(h3bar, eta, p, +1, cfg)[0])


def tau_ell(h3bar: float, eta: float, p: int, cfg: RootConfig | None = None) -> float:
    """First time the geodesic hits the boundary of the model domain; even in h3bar."""
    if h3bar >= 0:
        return tau_ell_minus(h3bar, eta, p, cfg)
    return tau_ell_plus(h3bar, eta, p, cfg)


def tau_ell_minus_array(h3, eta, p, cfg=None, backend=None) -> np.ndarray:
    return _roots(h3, eta, p, -1, cfg, backend)


def tau_ell_plus_array(h3, eta, p, cfg=None, backend=None) -> np.ndarray:
    return _roots(h3, eta, p, +1, cfg, backend)


def tau_ell_array(h3, eta, p, cfg=None, backend=None) -> np.ndarray:
    """Vectorized :func:`tau_ell`."""
    h3 = np.atleast_1d(np.asarray(h3, dtype=float))
    out = np.empty_like(h3)
    pos = h3 >= 0
    if pos.any():
        out[pos] = _roots(h3[pos], eta, p, -1, cfg, backend)
    if (~pos).any():
        out[~pos] = _roots(h3[~pos], eta, p, +1, cfg, backend)
    return out


def conjugate_equation(tau, h3bar, eta):
    """-tau eta (1 - h3bar^2) cos(tau) - (1 + eta h3bar^2) sin(tau)."""
    return -tau * eta * (1.0 - h3bar * h3bar) * np.cos(tau) - (1.0 + eta * h3bar * h3bar) * np.sin(tau)


def conjugate_tau(h3bar: float, eta: float, cfg: RootConfig | None = None) -> float:
    """First conjugate time in tau units: pi when eta <= 0, else min(pi, first root)."""
    if not -1.0 <= h3bar <= 1.0:
        raise ValueError(f"h3bar={h3bar} outside [-1, 1]")
    if not eta > -1.0:
        raise ValueError("eta must exceed -1")
    if eta <= 0 or abs(h3bar) == 1.0:
        return math.pi
    base = cfg or RootConfig()
    rc = RootConfig(scan_step=base.scan_step, tol=base.tol, tau_cap=math.pi)
    try:
        root = first_positive_root(lambda t: conjugate_equation(t, h3bar, eta), rc)
    except NoRootInRange:
        return math.pi
    return min(math.pi, root)


def _rotation(h3bar: float, params: MetricParams) -> bool:
    return params.deep_oblate and abs(h3bar) >= params.rotation_threshold


def maxwell_tau(h3bar: float, params: MetricParams, cfg: RootConfig | None = None) -> tuple[float, Regime]:
    """tau of the first Maxwell point and the stratum it lies on."""
    _check(h3bar, params.eta, params.p)
    if _rotation(h3bar, params):
        return math.pi, Regime.ROTATION
    return tau_ell(h3bar, params.eta, params.p, cfg), Regime.BOUNDARY


def cut_time(h3bar: float, params: MetricParams, cfg: RootConfig | None = None) -> CutData:
    """All times for one h3bar; the cut time equals the first Maxwell time."""
    _check(h3bar, params.eta, params.p)
    eta, p = params.eta, params.p
    tm = tau_ell_minus(h3bar, eta, p, cfg)
    tp = tau_ell_plus(h3bar, eta, p, cfg)
    tl = tm if h3bar >= 0 else tp
    if _rotation(h3bar, params):
        tau, regime = math.pi, Regime.ROTATION
    else:
        tau, regime = tl, Regime.BOUNDARY
    return CutData(
        h3bar=float(h3bar),
        tau_ell_minus=tm,
        tau_ell_plus=tp,
        tau_ell=tl,
        tau_conj=conjugate_tau(h3bar, eta, cfg),
        tau=tau,
        t_cut=t_of_tau(tau, h3bar, params),
        regime=regime,
    )


def cut_time_array(h3, params: MetricParams, cfg=None, backend=None):
    """Vectorized cut time: returns (t_cut, tau, rotation_mask) for an array of h3bar."""
    h3 = np.atleast_1d(np.asarray(h3, dtype=float))
    if np.any(np.abs(h3) > 1.0):
        raise ValueError("h3bar outside [-1, 1]")
    rot = np.zeros(h3.shape, dtype=bool)
    if params.deep_oblate:
        rot = np.abs(h3) >= params.rotation_threshold
    tau = np.full(h3.shape, math.pi)
    if (~rot).any():
        tau[~rot] = tau_ell_array(h3[~rot], params.eta, params.p, cfg, backend)
    norm = math.sqrt(params.I1) / np.sqrt(1.0 + params.eta * h3 * h3)
    return 2.0 * params.I1 * tau / norm, tau, rot


def t_cut(h3bar: float, params: MetricParams, cfg: RootConfig | None = None) -> float:
    """Shortcut for ``cut_time(h3bar, params).t_cut`` without the conjugate solve."""
    tau, _ = maxwell_tau(h3bar, params, cfg)
    return 2.0 * params.I1 * tau / covector_norm(h3bar, params)
