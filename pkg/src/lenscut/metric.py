"""Berger metric parameters, initial covectors and the tau <-> t time change."""

from __future__ import annotations

import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class MetricParams:
    """Lens space L(p;q) with the left-invariant metric I1 u1^2 + I1 u2^2 + I3 u3^2.

    ``eta = I1/I3 - 1`` measures the oblateness; ``eta -> -1`` is the
    sub-Riemannian limit.
    """

    p: int
    q: int
    I1: float
    I3: float
    eta: float = field(default=None)  # derived; pass only through from_eta

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 1:
            raise ValueError(f"p must be a positive integer, got {self.p!r}")
        if not isinstance(self.q, int):
            raise ValueError(f"q must be an integer, got {self.q!r}")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"p={self.p} and q={self.q} are not coprime")
        if not (self.I1 > 0 and self.I3 > 0):
            raise ValueError("I1 and I3 must be positive")
        derived = self.I1 / self.I3 - 1.0
        if self.eta is None:
            object.__setattr__(self, "eta", derived)
        elif not math.isclose(self.eta, derived, rel_tol=1e-12, abs_tol=1e-12):
            raise ValueError(f"eta={self.eta} inconsistent with I1/I3 - 1 = {derived}")
        if not self.eta > -1.0:
            raise ValueError("eta must exceed -1")

    @classmethod
    def from_eta(cls, p: int, q: int, I1: float, eta: float) -> "MetricParams":
        """Build from the oblateness directly, keeping ``eta`` bit-exact."""
        if not eta > -1.0:
            raise ValueError("eta must exceed -1")
        return cls(p, q, I1, I1 / (1.0 + eta), eta)

    @property
    def deep_oblate(self) -> bool:
        """True when eta < -(p-1)/p, where the rotation (tau = pi) stratum appears."""
        return self.eta < -(self.p - 1) / self.p

    @property
    def rotation_threshold(self) -> float:
        """|h3bar| above which the cut time is the tau = pi branch (deep-oblate case only)."""
        if not self.deep_oblate:
            return math.inf
        return (self.p - 1) / (self.p * abs(self.eta))


@dataclass(frozen=True)
class InitialCovector:
    """Point of the level set H = 1/2 given by its normalized vertical part and azimuth."""

    h3bar: float
    phi: float = 0.0

    def __post_init__(self):
        if not -1.0 <= self.h3bar <= 1.0:
            raise ValueError(f"h3bar={self.h3bar} outside [-1, 1]")

    @property
    def unit(self) -> tuple[float, float, float]:
        r = math.sqrt(max(0.0, 1.0 - self.h3bar * self.h3bar))
        return r * math.cos(self.phi), r * math.sin(self.phi), self.h3bar

    def covector(self, params: MetricParams) -> tuple[float, float, float]:
        n = covector_norm(self.h3bar, params)
        h1, h2, h3 = self.unit
        return n * h1, n * h2, n * h3


def hamiltonian(h: tuple[float, float, float], params: MetricParams) -> float:
    h1, h2, h3 = h
    return 0.5 * ((h1 * h1 + h2 * h2) / params.I1 + h3 * h3 / params.I3)


def covector_norm(h3bar: float, params: MetricParams) -> float:
    """|h| on the level set H = 1/2: sqrt(I1) / sqrt(1 + eta h3bar^2)."""
    if abs(h3bar) > 1.0:
        raise ValueError(f"h3bar={h3bar} outside [-1, 1]")
    return math.sqrt(params.I1) / math.sqrt(1.0 + params.eta * h3bar * h3bar)


def t_of_tau(tau: float, h3bar: float, params: MetricParams) -> float:
    """Arclength reached at geodesic parameter tau: t = 2 I1 tau / |h|."""
    if tau < 0:
        raise ValueError("tau must be non-negative")
    return 2.0 * params.I1 * tau / covector_norm(h3bar, params)


def tau_of_t(t: float, h3bar: float, params: MetricParams) -> float:
    """Inverse of :func:`t_of_tau`: tau = |h| t / (2 I1)."""
    if t < 0:
        raise ValueError("t must be non-negative")
    return t * covector_norm(h3bar, params) / (2.0 * params.I1)
