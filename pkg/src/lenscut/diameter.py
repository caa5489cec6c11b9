"""Diameter lower bounds from the maximum of the cut time, and a numeric cross-check."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .metric import MetricParams
from .times import cut_time_array, t_cut


@dataclass(frozen=True)
class DiameterBound:
    value: float
    case_tag: str  # "a".."e"
    exact: bool  # the bound is the diameter (homogeneous lens spaces)
    argmax_h3bar: float


def _is_homogeneous(p: int, q: int) -> bool:
    # L(p;1) and L(p;-1) are isometric, both homogeneous for the left-invariant metric
    return (q - 1) % p == 0 or (q + 1) % p == 0


def critical_points(params: MetricParams) -> list[tuple[float, str]]:
    """Interior critical points of h3bar -> t_cut on (0, 1), as (h3bar, "min"|"max").

    The kink at the rotation threshold (deep-oblate case) is not smooth and is
    not reported.
    """
    p, eta = params.p, params.eta
    if params.deep_oblate:
        if p < 3:
            return []
        x = (p - 2) / (p * abs(eta))
        if 0 < x < params.rotation_threshold:
            return [(x, "min")]
        return []
    if eta <= 0:
        return []
    if p == 1 and eta > 1:
        return [(1.0 / eta, "max")]
    # p = 1 with eta <= 1 is monotone; for p > 1 tau_ell stays below pi/2 on (0, 1]
    return []


def diameter_bound(params: MetricParams) -> DiameterBound:
    """Maximum of the cut time over initial covectors, in closed form."""
    p, eta, I1, I3 = params.p, params.eta, params.I1, params.I3
    exact = _is_homogeneous(p, params.q)
    equator = math.pi * math.sqrt(I1)
    pole = 2.0 * math.pi * math.sqrt(I3) / p

    if params.deep_oblate:
        s = math.sqrt(-12.0 * eta)
        lo, hi = (4.0 - s) / (3.0 * eta + 4.0), (4.0 + s) / (3.0 * eta + 4.0)
        if lo <= p <= hi:
            value = 2.0 * math.pi * math.sqrt(I1) * math.sqrt(1.0 + (p - 1) ** 2 / (p * p * eta))
            return DiameterBound(value, "a", exact, params.rotation_threshold)
        return DiameterBound(equator, "a", exact, 0.0)
    if eta < 0:
        if p < 2.0 / math.sqrt(1.0 + eta):
            return DiameterBound(pole, "b", exact, 1.0)
        return DiameterBound(equator, "b", exact, 0.0)
    if eta == 0:
        return DiameterBound(2.0 * equator if p == 1 else equator, "c", exact, 0.0)
    if p > 1:
        if p < 2.0 / math.sqrt(1.0 + eta):
            return DiameterBound(pole, "d", exact, 1.0)
        return DiameterBound(equator, "d", exact, 0.0)
    if eta <= 1:
        return DiameterBound(2.0 * math.pi * math.sqrt(I3), "e", exact, 1.0)
    return DiameterBound(math.pi * I1 / math.sqrt(I1 - I3), "e", exact, 1.0 / eta)


def cut_time_max_numeric(params: MetricParams, n: int = 1001, xatol: float = 1e-11) -> tuple[float, float]:
    """Maximum of t_cut over h3bar in [0, 1] (t_cut is even): grid scan plus bounded Brent refinement."""
    if n < 100:
        raise ValueError("n must be at least 100")
    grid = np.linspace(0.0, 1.0, n)
    values, _, _ = cut_time_array(grid, params)
    i = int(np.argmax(values))
    best_t, best_h = float(values[i]), float(grid[i])
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, n - 1)]
    res = minimize_scalar(
        lambda h: -t_cut(float(h), params),
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": xatol},
    )
    if -res.fun > best_t:
        best_t, best_h = float(-res.fun), float(res.x)
    return best_t, best_h
