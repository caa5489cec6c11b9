import math

import numpy as np
import pytest

from lenscut.roots import NoRootInRange, RootConfig, bisect_bracket, ell_tau_cap, first_positive_root


def test_finds_first_of_several():
    r = first_positive_root(np.sin, RootConfig(tau_cap=10.0))
    assert r == pytest.approx(math.pi, abs=1e-11)


def test_scalar_only_callable():
    r = first_positive_root(lambda t: math.cos(t) - 0.5, RootConfig(tau_cap=3.0))
    assert r == pytest.approx(math.pi / 3, abs=1e-11)


def test_exact_zero_on_grid():
    step = 0.25
    r = first_positive_root(lambda t: t - 0.75, RootConfig(scan_step=step, tau_cap=2.0))
    assert r == 0.75


def test_chunk_boundary():
    # root straddling two scan chunks
    step = 0.01
    root = 1024.5 * step
    r = first_positive_root(lambda t: t - root, RootConfig(scan_step=step, tau_cap=20.0), chunk=1024)
    assert r == pytest.approx(root, abs=1e-11)


def test_no_root():
    with pytest.raises(NoRootInRange):
        first_positive_root(lambda t: 1.0 + 0 * t, RootConfig(tau_cap=3.0))


def test_bisect():
    r = bisect_bracket(lambda t: t * t - 2, 1.0, 2.0, -1.0, 1e-13)
    assert r == pytest.approx(math.sqrt(2), abs=1e-12)


def test_config_validation():
    with pytest.raises(ValueError):
        RootConfig(scan_step=0.0)
    with pytest.raises(ValueError):
        RootConfig(tol=-1.0)
    with pytest.raises(ValueError):
        RootConfig(scan_step=1.0, tau_cap=0.5)


def test_cap_grows_toward_limit():
    assert ell_tau_cap(0.5) == pytest.approx(3.5 * math.pi)
    assert ell_tau_cap(-0.9) > ell_tau_cap(-0.5) > ell_tau_cap(0.0)
