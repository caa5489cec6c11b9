"""Self-check suites behind ``lenscut validate``.

Each check yields a name, a verdict and a short numeric detail. The report is a
pure function of the code and the fixed grids below, so two runs print the
same bytes.
"""

from __future__ import annotations

import math

import numpy as np

from .algebra import boundary_defect
from .diameter import cut_time_max_numeric, diameter_bound
from .locus import Stratum, sample_cut_locus, sr_limit_sweep
from .metric import InitialCovector, MetricParams
from .oracle import NoPartner, NotReached, OracleConfig, find_maxwell_partner, verify_cut_point
from .times import conjugate_tau, cut_time_array, maxwell_tau, tau_ell_array, tau_ell_minus_array, tau_ell_plus_array

PAIRS = [(2, -0.9), (2, -0.3), (2, 0.0), (2, 1.5), (3, -0.8), (3, -0.5), (3, 2.0),
         (4, -0.9), (4, 0.5), (5, -0.95), (5, 0.3), (7, -0.6), (8, 2.0)]
DIAMETER_CASES = [(2, -0.9), (3, -0.5), (1, 0.0), (2, 0.0), (4, 0.5), (1, 0.5), (1, 2.0)]


def _g(x) -> str:
    return format(float(x), ".6g")


def check_golden():
    worst = 0.0
    for p in range(2, 9):
        for eta in (-0.9, -0.5, 0.0, 0.5, 2.0):
            h = np.array([0.0, 1.0])
            m = tau_ell_minus_array(h, eta, p)
            pl = tau_ell_plus_array(h, eta, p)
            worst = max(worst, abs(m[0] - math.pi / 2), abs(pl[0] - math.pi / 2),
                        abs(m[1] - math.pi / (p * (1 + eta))),
                        abs(pl[1] - (p - 1) * math.pi / (p * (1 + eta))))
    yield "golden tau_ell values", worst < 1e-10, "max err " + _g(worst)

    bad = 0
    for eta in (-0.9, -0.5, 0.0, 0.5, 1.0, 2.0):
        for h in np.linspace(-1, 1, 41):
            c = conjugate_tau(float(h), eta)
            if eta <= 0:
                bad += c != math.pi
            elif abs(h) == 1.0:
                bad += abs(c - math.pi) > 1e-9
            else:
                bad += not (math.pi / 2 < c < math.pi - 1e-9)
    yield "conjugate time range", bad == 0, f"{bad} violations"

    worst = 0.0
    for p, eta in PAIRS:
        pr = MetricParams.from_eta(p, 1, 1.7, eta)
        tc, _, _ = cut_time_array(np.array([0.0, 1.0]), pr)
        worst = max(worst, abs(tc[0] - math.pi * math.sqrt(pr.I1)))
        if not pr.deep_oblate:
            worst = max(worst, abs(tc[1] - 2 * math.pi * math.sqrt(pr.I3) / p))
    yield "t_cut endpoint values", worst < 1e-10, "max err " + _g(worst)


def check_symmetry():
    x = np.linspace(-1, 1, 1001)
    worst = 0.0
    for p, eta in PAIRS:
        pr = MetricParams.from_eta(p, 1, 1.0, eta)
        worst = max(worst, np.max(np.abs(tau_ell_minus_array(-x, eta, p) - tau_ell_plus_array(x, eta, p))))
        worst = max(worst, np.max(np.abs(tau_ell_array(-x, eta, p) - tau_ell_array(x, eta, p))))
        tc, _, _ = cut_time_array(x, pr)
        worst = max(worst, np.max(np.abs(tc - tc[::-1])))
    yield "reflection symmetry", worst < 1e-10, "max err " + _g(worst)


def check_ordering():
    viol = 0
    for p, eta in PAIRS:
        pr = MetricParams.from_eta(p, 1, 1.0, eta)
        for h in np.linspace(-1, 1, 101):
            tau, _ = maxwell_tau(float(h), pr)
            viol += tau > conjugate_tau(float(h), eta) + 1e-9
    yield "Maxwell before conjugate", viol == 0, f"{viol} violations"

    viol = 0
    for p, eta in PAIRS:
        x = np.linspace(0, 1, 201)
        tl = tau_ell_array(x, eta, p)
        if eta >= -(p - 1) / p:
            viol += int(np.sum(tl > math.pi + 1e-9))
        else:
            thr = (p - 1) / (p * abs(eta))
            viol += int(np.sum((x >= thr) & (tl < math.pi - 1e-9)))
            viol += int(np.sum((x < thr) & (tl >= math.pi)))
    yield "regime inequalities", viol == 0, f"{viol} violations"


def check_diameter():
    worst = 0.0
    for p, eta in DIAMETER_CASES:
        pr = MetricParams.from_eta(p, 1, 1.0, eta)
        worst = max(worst, abs(cut_time_max_numeric(pr)[0] - diameter_bound(pr).value))
    yield "diameter bound vs numeric max", worst < 1e-6, "max err " + _g(worst)


def check_strata():
    worst_l, worst_w, bad_q3 = 0.0, 0.0, 0
    for p in (2, 3, 5):
        for eta in (-0.9, -0.5, 0.0, 1.0):
            samples = sample_cut_locus(MetricParams.from_eta(p, 1, 1.0, eta), 33, 16)
            for s in samples:
                r = s.point.rep
                if s.stratum is Stratum.SURFACE:
                    worst_l = max(worst_l, min(abs(v) for v in boundary_defect(r, p)))
                else:
                    worst_w = max(worst_w, r.q1 ** 2 + r.q2 ** 2)
                    a = abs(r.q3)
                    bad_q3 += not (math.sin(math.pi * abs(eta)) - 1e-9 <= a <= math.sin(math.pi / p) + 1e-9)
    ok = worst_l < 1e-9 and worst_w < 1e-18 and bad_q3 == 0
    yield "cut locus strata geometry", ok, f"ell {_g(worst_l)} w {_g(worst_w)} q3 {bad_q3}"


def check_sr_limit():
    rows = sr_limit_sweep(MetricParams.from_eta(3, 1, 1.0, -0.9), [-0.9, -0.99, -0.999, -0.9999])
    ends = [r[3] for r in rows]
    want = [0.309017, 0.0314108, 0.00314159, 0.000314159]
    ok = all(float(f"{a:.6g}") == b for a, b in zip(ends, want))
    ok = ok and all(b < a for a, b in zip(ends, ends[1:]))
    t0 = [r[1] for r in rows]
    diffs = [abs(b - a) for a, b in zip(t0, t0[1:])]
    ok = ok and all(d2 <= d1 for d1, d2 in zip(diffs, diffs[1:]))
    yield "sub-Riemannian sweep", ok, " ".join(_g(e) for e in ends)


def check_oracle():
    cfg = OracleConfig()
    cases = []
    for p, q, eta in ((2, 1, 0.0), (3, 1, -0.8), (5, 2, -0.9), (5, 2, 0.5)):
        for h in (0.0, 0.45, 0.9):
            cases.append((p, q, eta, h))
    passed = 0
    for p, q, eta, h in cases:
        try:
            r = verify_cut_point(InitialCovector(h, 0.7), MetricParams.from_eta(p, q, 1.0, eta), 0.05, cfg)
        except NotReached:
            continue
        passed += r.optimal_before and r.beaten_after
    yield "cut points by shooting", passed == len(cases), f"{passed}/{len(cases)}"

    worst = 0.0
    for p, q, eta in ((2, 1, 0.0), (3, 1, -0.8), (5, 2, 1.0)):
        pr = MetricParams.from_eta(p, q, 1.0, eta)
        for h in (0.2, 0.6, 0.95):
            try:
                worst = max(worst, find_maxwell_partner(InitialCovector(h, 0.3), pr, cfg)[1])
            except NoPartner:
                worst = math.inf
    yield "Maxwell partners", worst < 1e-8, "max mismatch " + _g(worst)


QUICK = [check_golden, check_symmetry, check_ordering, check_diameter, check_strata, check_sr_limit]
FULL = QUICK + [check_oracle]


def run_validation(level: str = "quick") -> tuple[str, bool]:
    """Run a suite and return (report text, all passed)."""
    if level not in ("quick", "full"):
        raise ValueError(f"unknown level {level!r}")
    lines, ok = [], True
    for check in QUICK if level == "quick" else FULL:
        for name, passed, detail in check():
            ok &= bool(passed)
            lines.append(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
    lines.append(f"{'OK' if ok else 'FAILED'} ({level})")
    return "\n".join(lines) + "\n", ok
