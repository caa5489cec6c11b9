"""Closed-form geodesics from the identity and their images in L(p;q)."""

from __future__ import annotations

import numpy as np

from .algebra import LensPoint, SpherePoint, canonicalize
from .metric import InitialCovector, MetricParams, tau_of_t


def exp_su2_array(h3bar, phi, tau, eta):
    """Vectorized geodesic through the identity; returns an array of shape (..., 4).

    With b = tau * eta * h3bar:
        q0 = cos(tau) cos(b) - h3bar sin(tau) sin(b)
        q3 = cos(tau) sin(b) + h3bar sin(tau) cos(b)
        (q1, q2) = sin(tau) * R(-b) (h1bar, h2bar)
    """
    h3bar, phi, tau = np.broadcast_arrays(
        np.asarray(h3bar, dtype=float), np.asarray(phi, dtype=float), np.asarray(tau, dtype=float)
    )
    r = np.sqrt(np.maximum(0.0, 1.0 - h3bar * h3bar))
    h1 = r * np.cos(phi)
    h2 = r * np.sin(phi)
    b = tau * eta * h3bar
    ct, st = np.cos(tau), np.sin(tau)
    cb, sb = np.cos(b), np.sin(b)
    q0 = ct * cb - h3bar * st * sb
    q3 = ct * sb + h3bar * st * cb
    q1 = st * (cb * h1 + sb * h2)
    q2 = st * (cb * h2 - sb * h1)
    return np.stack([q0, q1, q2, q3], axis=-1)


def exp_su2(c: InitialCovector, tau: float, eta: float) -> SpherePoint:
    """Point reached at parameter tau by the geodesic of SU(2) with initial covector c."""
    if tau < 0:
        raise ValueError("tau must be non-negative")
    return SpherePoint.from_array(exp_su2_array(c.h3bar, c.phi, tau, eta))


def exp_lens(c: InitialCovector, t: float, params: MetricParams) -> LensPoint:
    """Endpoint in L(p;q) of the arclength geodesic from o with initial covector c."""
    return canonicalize(exp_su2(c, tau_of_t(t, c.h3bar, params), params.eta), params.p, params.q)


def geodesic_trace(c: InitialCovector, t_max: float, n: int, params: MetricParams):
    """n equally spaced samples ``(t, LensPoint)`` on [0, t_max]."""
    if n < 2:
        raise ValueError("geodesic_trace needs n >= 2")
    if not t_max > 0:
        raise ValueError("t_max must be positive")
    return [(float(t), exp_lens(c, float(t), params)) for t in np.linspace(0.0, t_max, n)]
