import math

import pytest

from lenscut.metric import InitialCovector, MetricParams, covector_norm, hamiltonian, t_of_tau, tau_of_t


def test_eta_derived():
    pr = MetricParams(2, 1, 1.0, 5.0)
    assert pr.eta == pytest.approx(-0.8)
    assert pr.deep_oblate
    assert pr.rotation_threshold == pytest.approx(1 / 1.6)


def test_from_eta_keeps_eta_exact():
    pr = MetricParams.from_eta(3, 2, 1.5, -0.9)
    assert pr.eta == -0.9
    assert pr.I3 == pytest.approx(15.0)


@pytest.mark.parametrize(
    "args",
    [(0, 1, 1.0, 1.0), (4, 2, 1.0, 1.0), (2, 1, -1.0, 1.0), (2, 1, 1.0, 0.0), (2.0, 1, 1.0, 1.0)],
)
def test_invalid_params(args):
    with pytest.raises(ValueError):
        MetricParams(*args)


def test_inconsistent_eta():
    with pytest.raises(ValueError):
        MetricParams(2, 1, 1.0, 1.0, eta=0.5)
    with pytest.raises(ValueError):
        MetricParams.from_eta(2, 1, 1.0, -1.0)


def test_covector_on_energy_level():
    pr = MetricParams(3, 1, 1.3, 0.4)
    for h3 in (-1.0, -0.3, 0.0, 0.55, 1.0):
        h = InitialCovector(h3, 0.7).covector(pr)
        assert hamiltonian(h, pr) == pytest.approx(0.5, abs=1e-14)


def test_covector_range():
    with pytest.raises(ValueError):
        InitialCovector(1.5)


def test_time_change_roundtrip():
    pr = MetricParams.from_eta(3, 1, 2.0, 0.7)
    for h3 in (0.0, 0.4, -1.0):
        for t in (0.0, 0.3, 5.0):
            assert t_of_tau(tau_of_t(t, h3, pr), h3, pr) == pytest.approx(t, abs=1e-14)
    with pytest.raises(ValueError):
        t_of_tau(-1.0, 0.0, pr)
    with pytest.raises(ValueError):
        tau_of_t(-1.0, 0.0, pr)


def test_time_change_direction():
    # tau grows as |h| t / (2 I1); at h3bar = 0, |h| = sqrt(I1)
    pr = MetricParams.from_eta(2, 1, 1.0, 0.0)
    assert tau_of_t(math.pi, 0.0, pr) == pytest.approx(math.pi / 2)
    assert covector_norm(0.0, pr) == 1.0
