import math

import numpy as np
import pytest

from lenscut.diameter import critical_points, cut_time_max_numeric, diameter_bound
from lenscut.metric import MetricParams
from lenscut.times import cut_time_array


def P(p, eta, q=1, I1=1.0):
    return MetricParams.from_eta(p, q, I1, eta)


def numeric_extrema(pr, n=4001):
    """Interior extrema of t_cut on (0, 1) from sign changes of the finite-difference slope."""
    x = np.linspace(0, 1, n)
    t, _, rot = cut_time_array(x, pr)
    d = np.diff(t)
    out = []
    for i in range(1, len(d)):
        if rot[i - 1] != rot[i + 1]:
            continue  # kink at the rotation threshold
        if d[i - 1] < -1e-12 and d[i] > 1e-12:
            out.append((x[i], "min"))
        elif d[i - 1] > 1e-12 and d[i] < -1e-12:
            out.append((x[i], "max"))
    return out


def test_critical_point_examples():
    assert critical_points(P(1, 2.0)) == [(0.5, "max")]
    [(x, kind)] = critical_points(P(3, -0.8))
    assert x == pytest.approx(1 / 2.4) and kind == "min"
    assert critical_points(P(4, 0.3)) == []


@pytest.mark.parametrize(
    "p,eta",
    [(1, 2.0), (1, 0.5), (1, 4.0), (3, -0.8), (5, -0.9), (2, -0.9), (2, -0.3), (2, 1.5), (3, 1.0), (4, 0.6), (6, -0.95)],
)
def test_critical_points_match_finite_differences(p, eta):
    pr = P(p, eta)
    got = critical_points(pr)
    ref = numeric_extrema(pr)
    assert len(got) == len(ref)
    for (a, ka), (b, kb) in zip(got, ref):
        assert ka == kb
        assert a == pytest.approx(b, abs=2e-3)


def test_bound_examples():
    b = diameter_bound(P(1, 0.0))
    assert (b.value, b.case_tag) == (pytest.approx(2 * math.pi), "c")
    b = diameter_bound(MetricParams(1, 1, 1.0, 1 / 3))
    assert b.case_tag == "e" and b.exact
    assert b.value == pytest.approx(math.pi * math.sqrt(1.5), abs=1e-12)
    assert b.value == pytest.approx(3.8476494904855, abs=1e-12)
    b = diameter_bound(P(2, -0.9))
    assert b.case_tag == "a"
    assert b.value == pytest.approx(2 * math.pi * math.sqrt(1 + 0.25 / -0.9), abs=1e-12)


def test_case_dispatch():
    assert diameter_bound(P(3, -0.5)).case_tag == "b"
    assert diameter_bound(P(2, 0.0)).case_tag == "c"
    assert diameter_bound(P(4, 0.5)).case_tag == "d"
    assert diameter_bound(P(1, 0.5)).case_tag == "e"
    # threshold eta = -(p-1)/p belongs to b
    assert diameter_bound(P(4, -0.75)).case_tag == "b"


def test_exactness_flag():
    assert diameter_bound(P(5, 0.2, q=1)).exact
    assert diameter_bound(P(5, 0.2, q=4)).exact  # q = -1 mod p
    assert not diameter_bound(P(5, 0.2, q=2)).exact


@pytest.mark.parametrize("p", [1, 2, 3, 4, 5, 6])
def test_bound_continuous_in_eta(p):
    eps = 1e-9
    edges = [-(p - 1) / p, 0.0, 4 / p**2 - 1]
    if p == 1:
        edges.append(1.0)
    for e in edges:
        if e <= -1 + 1e-6:
            continue
        lo = diameter_bound(P(p, e - eps)).value
        hi = diameter_bound(P(p, e + eps)).value
        assert lo == pytest.approx(hi, abs=1e-6)


@pytest.mark.parametrize("p", [2, 3, 4, 5])
def test_endpoint_comparison_law(p):
    for eta in np.linspace(-(p - 1) / p, 3.0, 37):
        pr = P(p, float(eta))
        t, _, _ = cut_time_array(np.array([0.0, 1.0]), pr)
        if abs(eta - (4 / p**2 - 1)) < 1e-9:
            continue
        assert (t[0] >= t[1]) == (eta >= 4 / p**2 - 1)


@pytest.mark.parametrize("p,eta", [(2, -0.9), (3, -0.5), (1, 0.0), (2, 0.0), (4, 0.5), (1, 0.5), (1, 2.0), (3, -0.8), (5, -0.95)])
def test_numeric_max_agrees(p, eta):
    pr = P(p, eta, I1=1.3)
    b = diameter_bound(pr)
    val, arg = cut_time_max_numeric(pr)
    assert val == pytest.approx(b.value, abs=1e-6)
    t, _, _ = cut_time_array(np.array([arg, b.argmax_h3bar]), pr)
    assert t[0] == pytest.approx(t[1], abs=1e-6)


def test_numeric_examples():
    v, h = cut_time_max_numeric(P(1, 2.0))
    assert v == pytest.approx(math.pi * math.sqrt(1.5), abs=1e-8) and h == pytest.approx(0.5, abs=1e-4)
    v, h = cut_time_max_numeric(P(4, 0.5))
    assert v == pytest.approx(math.pi, abs=1e-10) and h == 0.0
    with pytest.raises(ValueError):
        cut_time_max_numeric(P(2, 0.0), n=10)
