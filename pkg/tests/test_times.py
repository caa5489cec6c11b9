import math

import numpy as np
import pytest

from lenscut.algebra import SpherePoint, boundary_defect
from lenscut.geodesic import exp_su2_array
from lenscut.metric import MetricParams
from lenscut.times import (
    Regime,
    conjugate_equation,
    conjugate_tau,
    cut_time,
    cut_time_array,
    ell_minus,
    ell_plus,
    maxwell_tau,
    t_cut,
    tau_ell,
    tau_ell_array,
    tau_ell_minus,
    tau_ell_plus,
)


def brute_first_root(f, cap, n=2_000_000):
    """Independent scan: first sign change on a very fine grid, linearly interpolated."""
    t = np.linspace(cap / n, cap, n)
    v = f(t)
    i = np.flatnonzero(np.sign(v[1:]) != np.sign(v[:-1]))[0]
    return t[i] - v[i] * (t[i + 1] - t[i]) / (v[i + 1] - v[i])


def test_ell_at_zero():
    assert ell_minus(0.0, 0.4, 1.0, 2) == pytest.approx(-1.0)
    assert ell_plus(0.0, 0.4, 1.0, 2) == pytest.approx(1.0)


def test_ell_on_axis():
    for eta in (-0.5, 0.3, 2.0):
        for tau in np.linspace(0, 4, 9):
            assert ell_minus(tau, 1.0, eta, 3) == pytest.approx(math.sin(tau * (1 + eta) - math.pi / 3), abs=1e-14)


def test_ell_matches_geodesic_faces():
    # ell_-+ are the face defects of the geodesic point
    p, eta, h = 4, 0.7, 0.35
    for tau in np.linspace(0, 3, 7):
        x = exp_su2_array(h, 0.9, tau, eta)
        c, s = math.cos(math.pi / p), math.sin(math.pi / p)
        assert ell_minus(tau, h, eta, p) == pytest.approx(x[3] * c - x[0] * s, abs=1e-14)
        assert ell_plus(tau, h, eta, p) == pytest.approx(x[3] * c + x[0] * s, abs=1e-14)


def test_ell_reflection_identity():
    for p in (1, 2, 5):
        for tau in np.linspace(0, 5, 11):
            for x in (0.1, 0.6, 1.0):
                assert ell_minus(tau, -x, 0.8, p) == pytest.approx(-ell_plus(tau, x, 0.8, p), abs=1e-14)


def test_ell_p3_half_pi():
    assert ell_minus(math.pi / 2, 0.0, 1.7, 3) == pytest.approx(0.0, abs=1e-15)


@pytest.mark.parametrize("p", [2, 3, 6])
@pytest.mark.parametrize("eta", [-0.9, -0.3, 0.0, 1.5])
def test_tau_ell_at_equator(p, eta):
    assert tau_ell_minus(0.0, eta, p) == pytest.approx(math.pi / 2, abs=1e-10)
    assert tau_ell_plus(0.0, eta, p) == pytest.approx(math.pi / 2, abs=1e-10)


def test_tau_ell_against_fine_scan():
    for p, eta, h in [(3, 2.0, 0.7), (2, -0.9, 0.4), (5, -0.95, 0.9), (4, 0.5, -0.3), (7, 3.0, 0.05)]:
        got_m = tau_ell_minus(h, eta, p)
        got_p = tau_ell_plus(h, eta, p)
        cap = 3 * max(got_m, got_p)
        ref_m = brute_first_root(lambda t: ell_minus(t, h, eta, p), cap)
        ref_p = brute_first_root(lambda t: ell_plus(t, h, eta, p), cap)
        assert got_m == pytest.approx(ref_m, abs=1e-9)
        assert got_p == pytest.approx(ref_p, abs=1e-9)


def test_tau_ell_p3_eta2_in_range():
    v = tau_ell_minus(0.7, 2.0, 3)
    assert 0 < v <= math.pi / 2


def test_tau_ell_endpoint_closed_form_matches_numeric():
    # close to the pole the numeric root must approach the closed form
    for p in (2, 3, 5):
        for eta in (-0.6, 0.0, 1.0):
            num = tau_ell_minus(1 - 1e-13, eta, p)
            assert num == pytest.approx(math.pi / (p * (1 + eta)), abs=1e-9)
            num = tau_ell_plus(1 - 1e-13, eta, p)
            assert num == pytest.approx((p - 1) * math.pi / (p * (1 + eta)), abs=1e-9)


def test_tau_ell_special_cases():
    for h in (-0.8, 0.0, 0.3, 1.0):
        assert tau_ell(h, 0.0, 2) == pytest.approx(math.pi / 2, abs=1e-10)
    assert tau_ell(0.5, 0.0, 1) == pytest.approx(math.pi, abs=1e-10)
    # p = 1 root of q3 / h3bar is smooth through h3bar = 0
    a, b, c = tau_ell(-1e-7, 1.0, 1), tau_ell(0.0, 1.0, 1), tau_ell(1e-7, 1.0, 1)
    assert a == pytest.approx(b, abs=1e-9) and c == pytest.approx(b, abs=1e-9)


def test_tau_ell_even():
    x = np.linspace(-1, 1, 201)
    for p, eta in [(2, 0.5), (3, -0.8), (1, 2.0)]:
        assert np.allclose(tau_ell_array(x, eta, p), tau_ell_array(-x, eta, p), atol=1e-12)


def test_tau_ell_array_agrees_with_scalar():
    x = np.linspace(-1, 1, 17)
    arr = tau_ell_array(x, -0.7, 4)
    for xi, ai in zip(x, arr):
        assert ai == tau_ell(float(xi), -0.7, 4)


def test_input_checks():
    with pytest.raises(ValueError):
        tau_ell(1.2, 0.0, 2)
    with pytest.raises(ValueError):
        tau_ell(0.2, -1.0, 2)
    with pytest.raises(ValueError):
        tau_ell(0.2, 0.0, 0)
    with pytest.raises(ValueError):
        conjugate_tau(0.0, -1.5)


def test_conjugate():
    assert conjugate_tau(0.3, -0.5) == math.pi
    assert conjugate_tau(1.0, 1.0) == math.pi
    assert conjugate_tau(-1.0, 1.0) == math.pi
    assert conjugate_tau(0.0, 1.0) == pytest.approx(2.028757838, abs=1e-9)
    # tan(tau) = -tau at eta = 1, h3bar = 0
    r = conjugate_tau(0.0, 1.0)
    assert math.tan(r) == pytest.approx(-r, abs=1e-9)
    for h in np.linspace(-0.99, 0.99, 23):
        for eta in (0.1, 1.0, 5.0):
            c = conjugate_tau(float(h), eta)
            assert math.pi / 2 < c < math.pi
            assert abs(conjugate_equation(c, h, eta)) < 1e-9


def test_maxwell_regimes():
    pr = MetricParams.from_eta(3, 1, 1.0, -0.8)
    assert maxwell_tau(0.9, pr) == (math.pi, Regime.ROTATION)
    tau, reg = maxwell_tau(0.1, pr)
    assert reg is Regime.BOUNDARY and tau == tau_ell(0.1, -0.8, 3)
    pr = MetricParams.from_eta(2, 1, 1.0, 1.0)
    assert all(maxwell_tau(h, pr)[1] is Regime.BOUNDARY for h in (-1, 0, 0.5, 1))
    # threshold value itself belongs to the rotation branch
    pr = MetricParams.from_eta(3, 1, 1.0, -0.8)
    assert maxwell_tau(pr.rotation_threshold, pr)[1] is Regime.ROTATION


def test_regime_boundary_eta():
    pr = MetricParams.from_eta(2, 1, 1.0, -0.5)
    assert not pr.deep_oblate
    assert maxwell_tau(1.0, pr)[1] is Regime.BOUNDARY
    assert maxwell_tau(1.0, pr)[0] == pytest.approx(math.pi)


def test_cut_time_values():
    pr = MetricParams.from_eta(3, 1, 1.0, -0.8)
    assert cut_time(0.0, pr).t_cut == pytest.approx(math.pi, abs=1e-10)
    cd = cut_time(0.9, pr)
    assert cd.regime is Regime.ROTATION
    assert cd.t_cut == pytest.approx(2 * math.pi * math.sqrt(0.352), abs=1e-12)
    for p, eta in [(2, 0.0), (4, 1.0), (3, -0.5)]:
        pr = MetricParams.from_eta(p, 1, 1.0, eta)
        assert cut_time(1.0, pr).t_cut == pytest.approx(2 * math.pi / (p * math.sqrt(1 + eta)), abs=1e-12)


def test_cut_data_fields_consistent():
    pr = MetricParams.from_eta(5, 2, 1.2, 0.4)
    for h in (-0.6, 0.0, 0.6):
        cd = cut_time(h, pr)
        assert cd.tau_ell == (cd.tau_ell_minus if h >= 0 else cd.tau_ell_plus)
        assert cd.tau <= cd.tau_conj + 1e-9
        assert cd.t_cut == pytest.approx(t_cut(h, pr), abs=0)


def test_cut_time_even_and_array():
    pr = MetricParams.from_eta(3, 1, 1.0, -0.8)
    x = np.linspace(-1, 1, 41)
    tc, tau, rot = cut_time_array(x, pr)
    assert np.allclose(tc, tc[::-1], atol=1e-12)
    assert rot.sum() > 0 and (~rot).sum() > 0
    for xi, ti in zip(x, tc):
        assert ti == pytest.approx(cut_time(float(xi), pr).t_cut, abs=1e-13)


def test_boundary_endpoint_on_face():
    for p, eta in [(2, 1.0), (3, -0.5), (5, 0.2)]:
        for h in (0.0, 0.3, 0.8):
            tau = tau_ell(h, eta, p)
            x = SpherePoint.from_array(exp_su2_array(h, 0.4, tau, eta))
            assert min(abs(v) for v in boundary_defect(x, p)) < 1e-9
