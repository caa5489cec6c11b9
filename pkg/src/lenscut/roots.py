"""First positive root of a scalar function by left-to-right scanning and bisection."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class NoRootInRange(RuntimeError):
    """No sign change in (0, tau_cap]."""


DEFAULT_STEP = math.pi / 2000
DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class RootConfig:
    scan_step: float = DEFAULT_STEP
    tol: float = DEFAULT_TOL
    tau_cap: float = 2 * math.pi

    def __post_init__(self):
        if not self.scan_step > 0:
            raise ValueError("scan_step must be positive")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if not self.tau_cap > self.scan_step:
            raise ValueError("tau_cap must exceed scan_step")


def ell_tau_cap(eta: float) -> float:
    """Search horizon that contains the first roots of both ell_- and ell_+.

    arg z advances on average at rate 1 + eta|h3bar| >= min(1, 1 + eta) and never
    lags the average by more than pi, so it sweeps 2 pi before this bound.
    """
    return 3 * math.pi / min(1.0, 1.0 + eta) + math.pi / 2


def _sign(v: float) -> int:
    return (v > 0) - (v < 0)


def bisect_bracket(f, lo: float, hi: float, flo: float, tol: float) -> float:
    """Bisection on [lo, hi] given f(lo) = flo of sign opposite to f(hi)."""
    slo = _sign(flo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = float(f(mid))
        if fm == 0.0:
            return mid
        if _sign(fm) == slo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _evaluate(f, taus: np.ndarray) -> np.ndarray:
    try:
        vals = np.asarray(f(taus), dtype=float)
        if vals.shape == taus.shape:
            return vals
    except (TypeError, ValueError):
        pass
    return np.array([float(f(t)) for t in taus])


def first_positive_root(f, cfg: RootConfig = RootConfig(), chunk: int = 1024) -> float:
    """Smallest root of f found scanning tau = k*scan_step (k >= 1) up to tau_cap.

    ``f`` may be vectorized; scalar-only callables are evaluated point by point.
    Raises :class:`NoRootInRange` when f keeps one sign on (0, tau_cap].
    """
    step, cap = cfg.scan_step, cfg.tau_cap
    n = math.ceil(cap / step)
    prev_t = prev_f = None
    for start in range(1, n + 1, chunk):
        ks = np.arange(start, min(start + chunk, n + 1), dtype=float)
        taus = np.minimum(ks * step, cap)
        vals = _evaluate(f, taus)
        if prev_t is not None:
            taus = np.concatenate(([prev_t], taus))
            vals = np.concatenate(([prev_f], vals))
        zero = np.flatnonzero(vals == 0.0)
        change = np.flatnonzero(np.sign(vals[1:]) * np.sign(vals[:-1]) < 0)
        first_zero = zero[0] if zero.size else None
        first_change = change[0] if change.size else None
        if first_zero is not None and (first_change is None or first_zero <= first_change):
            return float(taus[first_zero])
        if first_change is not None:
            i = first_change
            return bisect_bracket(f, float(taus[i]), float(taus[i + 1]), float(vals[i]), cfg.tol)
        prev_t, prev_f = float(taus[-1]), float(vals[-1])
    raise NoRootInRange(f"no sign change on (0, {cap}]")
