import numpy as np
import pytest

from hardyopa.atomquad import (
    atom_projection_residuals,
    atom_taylor_coefficients,
    atomic_mean,
)
from hardyopa.errors import InvalidArgumentError


def test_taylor_coefficients_against_series_recursion():
    # exp(-s(1+z)/(1-z)) = exp(-s) * exp(sum_j (-2s) z^j); exponentiate the
    # series with the standard convolution recurrence as an oracle
    for s in (0.5, 1.0, 3.0):
        count = 40
        c = np.zeros(count)
        c[0] = 1.0
        for n in range(1, count):
            c[n] = sum(j * (-2.0 * s) * c[n - j] for j in range(1, n + 1)) / n
        c *= np.exp(-s)
        got = atom_taylor_coefficients(s, count)
        assert np.max(np.abs(got - c)) < 1e-12


def test_taylor_validation():
    with pytest.raises(InvalidArgumentError):
        atom_taylor_coefficients(0.0, 4)
    with pytest.raises(InvalidArgumentError):
        atom_taylor_coefficients(1.0, 100000)


def test_atomic_mean_of_atom_itself():
    value = atomic_mean(lambda psi: np.exp(-1j * psi), 1.0, 0)
    assert value == pytest.approx(np.exp(-1.0), abs=1e-13)


def test_atomic_mean_constant_profile():
    assert atomic_mean(lambda psi: np.ones_like(psi), 2.0, 0) == pytest.approx(1.0)
    assert abs(atomic_mean(lambda psi: np.ones_like(psi), 2.0, 3)) < 1e-13


def test_atomic_mean_distance_identity():
    # mean |1 - e^{-s} S|^2 = 1 - e^{-2s}
    for s in (0.5, 1.0):
        a = np.exp(-s)
        value = atomic_mean(
            lambda psi: np.abs(1.0 - a * np.exp(-1j * psi)) ** 2, s, 0
        )
        assert value.real == pytest.approx(1.0 - a * a, abs=1e-13)


def test_atomic_mean_matches_coarse_quadrature():
    # a heavily smoothed profile: agreement with grid quadrature to its
    # own accuracy level (~1e-5) is all the grid can deliver
    s = 1.0
    n = 1 << 18
    theta = 2.0 * np.pi * (np.arange(n) + 0.5) / n
    psi = s / np.tan(theta / 2.0)
    profile = lambda x: np.cos(x) * 0.3 + 1.0
    direct = np.mean(profile(psi) * np.exp(2j * theta))
    exact = atomic_mean(profile, s, 2)
    assert abs(direct - exact) < 1e-3


def test_projection_residuals_all_p():
    for p in (1.5, 2.0, 3.0, 4.0):
        out = atom_projection_residuals(1.0, p)
        assert out["norm_error"] < 1e-12
        assert out["bj_max"] < 1e-12
        assert out["distance"] == pytest.approx((1 - np.exp(-2.0)) ** (1.0 / p))
