import numpy as np
import pytest

from hardyopa.grid import BoundarySamples, lp_norm, make_grid
from hardyopa.orthogonality import (
    PythagoreanParams,
    bj_residual,
    lower_pythagorean_params,
    power_dual,
    pythagorean_report,
    upper_pythagorean_params,
)


@pytest.fixture
def grid():
    return make_grid(1024)


def test_power_dual_constant(grid):
    f = BoundarySamples(grid=grid, values=np.ones(grid.size))
    out = power_dual(f, 3.0)
    assert np.allclose(out.values, 1.0)


def test_power_dual_scaled_rotation(grid):
    f = BoundarySamples(grid=grid, values=2.0 * grid.nodes)
    out = power_dual(f, 2.0)
    assert np.allclose(out.values, 4.0 * np.conj(grid.nodes))


def test_power_dual_zero_convention(grid):
    vals = grid.nodes.copy()
    vals[0] = 0.0
    f = BoundarySamples(grid=grid, values=vals)
    out = power_dual(f, 0.5)
    assert out.values[0] == 0.0
    assert not np.any(np.isnan(out.values))


def test_power_dual_norm_identity(grid):
    rng = np.random.default_rng(5)
    f = BoundarySamples(
        grid=grid,
        values=rng.standard_normal(grid.size) + 1j * rng.standard_normal(grid.size),
    )
    for p in (1.5, 2.0, 3.0):
        q = p / (p - 1.0)
        lhs = lp_norm(power_dual(f, p - 1.0), q)
        assert lhs == pytest.approx(lp_norm(f, p) ** (p - 1.0), abs=1e-10)


def test_bj_residual_mean_zero(grid):
    one = BoundarySamples(grid=grid, values=np.ones(grid.size))
    z = BoundarySamples(grid=grid, values=grid.nodes)
    for p in (1.5, 2.0, 4.0):
        assert bj_residual(one, z, p) < 1e-14
        assert bj_residual(one, one, p) == pytest.approx(1.0)


def test_bj_pairing_linear(grid):
    rng = np.random.default_rng(9)
    f = BoundarySamples(
        grid=grid,
        values=1.0 + 0.3 * rng.standard_normal(grid.size),
    )
    g1 = BoundarySamples(grid=grid, values=grid.nodes)
    g2 = BoundarySamples(grid=grid, values=grid.nodes**2)
    combo = BoundarySamples(grid=grid, values=2.0 * g1.values - 1j * g2.values)
    assert bj_residual(f, combo, 2.5) <= (
        2.0 * bj_residual(f, g1, 2.5) + bj_residual(f, g2, 2.5) + 1e-14
    )


def test_bj_minimality_consequence(grid):
    # orthogonality means adding any multiple of g cannot shrink the norm
    one = BoundarySamples(grid=grid, values=np.ones(grid.size))
    z = BoundarySamples(grid=grid, values=grid.nodes)
    for p in (1.5, 3.0):
        assert bj_residual(one, z, p) < 1e-12
        base = lp_norm(one, p)
        for t in (1.0, -1.0, 0.5, -0.5, 0.1, -0.1):
            shifted = BoundarySamples(grid=grid, values=one.values + t * z.values)
            assert lp_norm(shifted, p) >= base - 1e-8


def test_pythagorean_parameter_table():
    r, k = upper_pythagorean_params(1.5)
    assert (r, k) == (1.5, pytest.approx(1.0 / (2.0**0.5 - 1.0)))
    r, k = lower_pythagorean_params(1.5)
    assert (r, k) == (2.0, pytest.approx(0.5))
    r, k = upper_pythagorean_params(3.0)
    assert (r, k) == (2.0, 2.0)
    r, k = lower_pythagorean_params(3.0)
    assert (r, k) == (3.0, pytest.approx(1.0 / 3.0))
    params = PythagoreanParams.for_regime("upper", 2.0)
    assert params.r == 2.0 and params.K == pytest.approx(1.0)


def test_pythagorean_hilbert_equality(grid):
    one = BoundarySamples(grid=grid, values=np.ones(grid.size))
    z = BoundarySamples(grid=grid, values=grid.nodes)
    report = pythagorean_report(one, z, 2.0)
    assert report.orthogonal
    for check in report.inequalities:
        assert check.holds
        assert abs(check.lhs - check.rhs) < 1e-10


def test_pythagorean_p3(grid):
    one = BoundarySamples(grid=grid, values=np.ones(grid.size))
    z = BoundarySamples(grid=grid, values=grid.nodes)
    report = pythagorean_report(one, z, 3.0)
    assert report.orthogonal
    nsum = lp_norm(BoundarySamples(grid=grid, values=1.0 + grid.nodes), 3.0)
    assert nsum**3 >= 1.0 + 1.0 / 3.0 - 1e-12
    assert nsum**2 <= 1.0 + 2.0 - 1e-12
    assert all(c.holds for c in report.inequalities)


def test_pythagorean_p_below_two(grid):
    one = BoundarySamples(grid=grid, values=np.ones(grid.size))
    g = BoundarySamples(grid=grid, values=0.5 * grid.nodes)
    report = pythagorean_report(one, g, 1.5)
    assert report.orthogonal
    assert all(c.holds for c in report.inequalities)


def test_pythagorean_non_orthogonal_report(grid):
    one = BoundarySamples(grid=grid, values=np.ones(grid.size))
    report = pythagorean_report(one, one, 2.0)
    assert not report.orthogonal
    assert report.inequalities == ()
    assert report.residual == pytest.approx(1.0)
