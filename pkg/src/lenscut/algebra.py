"""Points of S^3 = SU(2), the Z_p deck action and canonical lens-space representatives.

A unit quaternion ``(q0, q1, q2, q3)`` is read as the pair of complex numbers
``z = q0 + i q3`` and ``w = q1 + i q2``; the generator of Z_p acts by
``(z, w) -> (e^{2 pi i/p} z, e^{2 pi i q/p} w)``.

The model domain of L(p;q) is the lens-shaped region

    q1^2 + q2^2 + q3^2 / sin^2(pi/p) <= 1,   q0 >= 0,

which is exactly the set of points whose ``arg z`` lies in ``[-pi/p, pi/p]``
(plus the circle ``z = 0``).  Every orbit meets it; ties on its boundary are
broken as follows:

* ``arg z = +pi/p`` and ``arg z = -pi/p`` images of one orbit: keep the one with
  ``q3 <= 0`` (``arg z = -pi/p``);
* ``z = 0``: keep the image with ``arg w`` in ``[0, 2 pi/p)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

BOUNDARY_TOL = 1e-10
# |z| below this is treated as the z = 0 circle; small enough that the
# representative still satisfies q0 >= -1e-12.
EQUATOR_TOL = 1e-13
UNIT_TOL = 1e-12


@dataclass(frozen=True)
class SpherePoint:
    """Unit quaternion on S^3."""

    q0: float
    q1: float
    q2: float
    q3: float

    def __post_init__(self):
        n2 = self.q0 * self.q0 + self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3
        if not abs(n2 - 1.0) <= 2 * UNIT_TOL:
            raise ValueError(f"not a unit quaternion (|q|^2 = {n2!r})")

    @classmethod
    def from_array(cls, a) -> "SpherePoint":
        return cls(float(a[0]), float(a[1]), float(a[2]), float(a[3]))

    def as_array(self) -> np.ndarray:
        return np.array([self.q0, self.q1, self.q2, self.q3])

    @property
    def z(self) -> complex:
        return complex(self.q0, self.q3)

    @property
    def w(self) -> complex:
        return complex(self.q1, self.q2)


IDENTITY = SpherePoint(1.0, 0.0, 0.0, 0.0)


@dataclass(frozen=True)
class LensPoint:
    """Canonical representative of a Z_p orbit; build these with :func:`canonicalize`."""

    rep: SpherePoint
    p: int
    q: int

    def as_array(self) -> np.ndarray:
        return self.rep.as_array()


def _rotate(q: np.ndarray, a: float, b: float) -> np.ndarray:
    """Multiply z by e^{ia} and w by e^{ib}."""
    ca, sa = math.cos(a), math.sin(a)
    cb, sb = math.cos(b), math.sin(b)
    q0, q1, q2, q3 = q
    return np.array([
        ca * q0 - sa * q3,
        cb * q1 - sb * q2,
        sb * q1 + cb * q2,
        sa * q0 + ca * q3,
    ])


def deck_array(x: np.ndarray, k: int, p: int, q: int) -> np.ndarray:
    """Array version of :func:`deck_transform`."""
    k %= p
    if k == 0:
        return np.array(x, dtype=float)
    return _rotate(np.asarray(x, dtype=float), 2 * math.pi * k / p, 2 * math.pi * ((k * q) % p) / p)


def deck_transform(x: SpherePoint, k: int, p: int, q: int) -> SpherePoint:
    """Apply the k-th element of the Z_p action, ``(z, w) -> (eps^k z, eps^{kq} w)``."""
    if not 0 <= k < p:
        raise ValueError(f"deck index k={k} outside [0, {p})")
    if k == 0:
        return x
    return SpherePoint.from_array(deck_array(x.as_array(), k, p, q))


def orbit_array(x, p: int, q: int) -> np.ndarray:
    """All p deck images of ``x`` as a (p, 4) array, row k = image under [k]."""
    a = x.as_array() if isinstance(x, SpherePoint) else np.asarray(x, dtype=float)
    return np.array([deck_array(a, k, p, q) for k in range(p)])


def canonical_index(x: np.ndarray, p: int, q: int) -> int:
    """Deck index k such that [k] x is the canonical representative of the orbit of x."""
    if p == 1:
        return 0
    q0, q1, q2, q3 = x
    if math.hypot(q0, q3) < EQUATOR_TOL:
        # z = 0 circle: choose arg w in [0, 2 pi/p); [k] rotates arg w by 2 pi k q/p
        s = (math.atan2(q2, q1) % (2 * math.pi)) * p / (2 * math.pi)
        j = -math.floor(s + BOUNDARY_TOL)  # number of 2 pi/p steps to add to arg w
        inv = pow(q, -1, p)
        return (j * inv) % p
    s = math.atan2(q3, q0) * p / (2 * math.pi)
    # bring arg z into [-pi/p, pi/p); points within tolerance of +pi/p go to -pi/p
    return (-math.floor(s + 0.5 + BOUNDARY_TOL)) % p


def canonicalize(x: SpherePoint, p: int, q: int) -> LensPoint:
    """Canonical representative of the orbit of ``x`` inside the model domain."""
    k = canonical_index(x.as_array(), p, q)
    return LensPoint(deck_transform(x, k, p, q) if k else x, p, q)


def in_model_domain(x: SpherePoint, p: int, tol: float = UNIT_TOL) -> bool:
    if p == 1:
        return True
    s = math.sin(math.pi / p)
    return (x.q1 ** 2 + x.q2 ** 2 + x.q3 ** 2 / (s * s) <= 1 + tol) and x.q0 >= -tol


def lens_chordal_distance(a: SpherePoint, b: SpherePoint, p: int, q: int) -> float:
    """Smallest Euclidean distance in R^4 between ``a`` and a deck image of ``b``."""
    diff = orbit_array(b, p, q) - a.as_array()
    return float(np.sqrt(np.min(np.einsum("ij,ij->i", diff, diff))))


def boundary_defect(x: SpherePoint, p: int) -> tuple[float, float]:
    """The two linear forms whose product cuts out the boundary of the model domain.

    Returns ``(q3 cos(pi/p) - q0 sin(pi/p), q3 cos(pi/p) + q0 sin(pi/p))``.
    """
    if p < 2:
        raise ValueError("boundary_defect needs p >= 2; for p = 1 the surface is q3^2 = 0")
    c, s = math.cos(math.pi / p), math.sin(math.pi / p)
    return x.q3 * c - x.q0 * s, x.q3 * c + x.q0 * s


def boundary_product(x: SpherePoint, p: int) -> float:
    """ell(q) = ell_-(q) ell_+(q); for p = 1 this is q3^2."""
    if p == 1:
        return x.q3 * x.q3
    lm, lp = boundary_defect(x, p)
    return lm * lp
