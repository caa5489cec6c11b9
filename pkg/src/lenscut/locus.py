"""Samples of the cut locus, the sub-Riemannian limit sweep and CSV export."""

from __future__ import annotations

import csv
import enum
import math
from dataclasses import dataclass

import numpy as np

from .algebra import LensPoint, SpherePoint, canonicalize
from .geodesic import exp_su2_array
from .metric import MetricParams
from .times import Regime, cut_time_array, t_cut

CSV_HEADER = ["h3bar", "phi", "t_cut", "tau", "regime", "q0", "q1", "q2", "q3", "stratum"]


class Stratum(enum.Enum):
    SURFACE = "surface"  # glued boundary of the model domain
    INTERVAL = "interval"  # segment of the q3 axis swept at tau = pi


@dataclass(frozen=True)
class CutLocusSample:
    h3bar: float
    phi: float
    point: LensPoint
    stratum: Stratum
    t_cut: float
    tau: float

    @property
    def regime(self) -> Regime:
        return Regime.ROTATION if self.stratum is Stratum.INTERVAL else Regime.BOUNDARY


def sample_cut_locus(params: MetricParams, n_h3: int, n_phi: int) -> list[CutLocusSample]:
    """Cut points of the covectors on a uniform (h3bar, phi) grid, h3bar outer."""
    if params.p < 2:
        raise ValueError("cut locus sampling needs p >= 2")
    if n_h3 < 2 or n_phi < 2:
        raise ValueError("n_h3 and n_phi must be at least 2")
    p, q = params.p, params.q
    h3 = np.linspace(-1.0, 1.0, n_h3)
    phis = 2.0 * math.pi * np.arange(n_phi) / n_phi
    tc, tau, rot = cut_time_array(h3, params)
    pts = exp_su2_array(h3[:, None], phis[None, :], tau[:, None], params.eta)
    out = []
    for i in range(n_h3):
        stratum = Stratum.INTERVAL if rot[i] else Stratum.SURFACE
        for j in range(n_phi):
            pt = canonicalize(SpherePoint.from_array(pts[i, j]), p, q)
            out.append(CutLocusSample(float(h3[i]), float(phis[j]), pt, stratum, float(tc[i]), float(tau[i])))
    return out


def sr_limit_sweep(params_base: MetricParams, etas) -> list[tuple[float, float, float, float]]:
    """Rows (eta, t_cut(0), t_cut(1), sin(pi|eta|)) with I3 = I1/(1+eta) at fixed I1.

    The last column is the lower end of the interval stratum, which closes up
    as eta -> -1.
    """
    p = params_base.p
    etas = [float(e) for e in etas]
    if not etas:
        raise ValueError("etas must be nonempty")
    for e in etas:
        if not -1.0 < e < -(p - 1) / p:
            raise ValueError(f"eta={e} outside the deep-oblate range (-1, {-(p - 1) / p})")
    if any(b >= a for a, b in zip(etas, etas[1:])):
        raise ValueError("etas must decrease toward -1")
    rows = []
    for e in etas:
        pr = MetricParams.from_eta(p, params_base.q, params_base.I1, e)
        rows.append((e, t_cut(0.0, pr), t_cut(1.0, pr), math.sin(math.pi * abs(e))))
    return rows


def _fmt(x: float) -> str:
    return format(float(x) + 0.0, ".17g")


def export_locus_csv(samples, path) -> None:
    """Write samples in the fixed schema, sorted by (h3bar, phi)."""
    samples = list(samples)
    if not samples:
        raise ValueError("no samples to export")
    samples.sort(key=lambda s: (s.h3bar, s.phi))
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for s in samples:
            r = s.point.rep
            w.writerow(
                [_fmt(s.h3bar), _fmt(s.phi), _fmt(s.t_cut), _fmt(s.tau), s.regime.value]
                + [_fmt(v) for v in (r.q0, r.q1, r.q2, r.q3)]
                + [s.stratum.value]
            )


def read_locus_csv(path) -> list[dict]:
    """Parse a file written by :func:`export_locus_csv`; numeric columns become floats."""
    with open(path, newline="", encoding="utf-8") as fh:
        rd = csv.DictReader(fh)
        if rd.fieldnames != CSV_HEADER:
            raise ValueError(f"unexpected header {rd.fieldnames}")
        rows = []
        for row in rd:
            rows.append({k: (v if k in ("regime", "stratum") else float(v)) for k, v in row.items()})
    return rows
