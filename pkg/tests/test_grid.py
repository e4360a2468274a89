import numpy as np
import pytest

from hardyopa.errors import GridMismatchError, InvalidArgumentError
from hardyopa.grid import (
    BoundarySamples,
    cauchy_functional,
    dual_pair,
    fourier_coefficient,
    fourier_coefficients,
    lp_norm,
    make_grid,
)


def test_node_formula():
    grid = make_grid(16)
    assert grid.nodes[0] == pytest.approx(np.exp(1j * np.pi / 16))


def test_nodes_unimodular_and_distinct():
    grid = make_grid(4096)
    assert np.max(np.abs(np.abs(grid.nodes) - 1.0)) < 1e-15
    assert len(np.unique(np.round(grid.nodes, 12))) == 4096


def test_no_node_at_one():
    for n in (16, 17, 100, 4096):
        grid = make_grid(n)
        assert np.min(np.abs(grid.nodes - 1.0)) > 1e-4 / n


def test_weights_sum_to_one():
    grid = make_grid(64)
    assert grid.weight * grid.size == pytest.approx(1.0)


def test_min_size_rejected():
    with pytest.raises(InvalidArgumentError):
        make_grid(8)


def test_lp_norm_constant():
    grid = make_grid(256)
    f = BoundarySamples(grid=grid, values=np.ones(256))
    for p in (1.5, 2.0, 3.0, 7.0):
        assert lp_norm(f, p) == pytest.approx(1.0)


def test_lp_norm_unimodular():
    grid = make_grid(256)
    f = BoundarySamples(grid=grid, values=grid.nodes)
    assert lp_norm(f, 3.0) == pytest.approx(1.0)


def test_lp_norm_one_plus_z():
    grid = make_grid(4096)
    f = BoundarySamples(grid=grid, values=1.0 + grid.nodes)
    assert abs(lp_norm(f, 2.0) - np.sqrt(2.0)) < 1e-12


def test_lp_norm_homogeneous():
    grid = make_grid(128)
    rng = np.random.default_rng(0)
    vals = rng.standard_normal(128) + 1j * rng.standard_normal(128)
    f = BoundarySamples(grid=grid, values=vals)
    g = BoundarySamples(grid=grid, values=3.5j * vals)
    assert lp_norm(g, 2.7) == pytest.approx(3.5 * lp_norm(f, 2.7), rel=1e-14)


def test_lp_norm_p_range():
    grid = make_grid(16)
    f = BoundarySamples(grid=grid, values=np.ones(16))
    with pytest.raises(InvalidArgumentError):
        lp_norm(f, 1.0)


def test_dual_pair_basics():
    grid = make_grid(256)
    one = BoundarySamples(grid=grid, values=np.ones(256))
    z = BoundarySamples(grid=grid, values=grid.nodes)
    z2 = BoundarySamples(grid=grid, values=grid.nodes**2)
    assert dual_pair(one, one) == pytest.approx(1.0)
    assert abs(dual_pair(z, one)) < 1e-14
    assert dual_pair(z2, z2) == pytest.approx(1.0)


def test_dual_pair_grid_mismatch():
    a = make_grid(64)
    b = make_grid(128)
    f = BoundarySamples(grid=a, values=np.ones(64))
    g = BoundarySamples(grid=b, values=np.ones(128))
    with pytest.raises(GridMismatchError):
        dual_pair(f, g)


def test_cauchy_functional_residues():
    grid = make_grid(512)
    one = BoundarySamples(grid=grid, values=np.ones(512))
    inv_z = BoundarySamples(grid=grid, values=np.conj(grid.nodes))
    z = BoundarySamples(grid=grid, values=grid.nodes)
    inv_z2 = BoundarySamples(grid=grid, values=grid.nodes ** (-2))
    assert cauchy_functional(one, inv_z) == pytest.approx(1.0)
    assert abs(cauchy_functional(one, one)) < 1e-14
    assert cauchy_functional(z, inv_z2) == pytest.approx(1.0)


def test_cauchy_matches_fourier_minus_one():
    grid = make_grid(128)
    rng = np.random.default_rng(7)
    g = BoundarySamples(
        grid=grid, values=rng.standard_normal(128) + 1j * rng.standard_normal(128)
    )
    psi = BoundarySamples(
        grid=grid, values=rng.standard_normal(128) + 1j * rng.standard_normal(128)
    )
    prod = BoundarySamples(grid=grid, values=g.values * psi.values)
    assert cauchy_functional(g, psi) == pytest.approx(
        fourier_coefficient(prod, -1), abs=1e-14
    )


def test_fourier_coefficient_monomials():
    grid = make_grid(256)
    z3 = BoundarySamples(grid=grid, values=grid.nodes**3)
    assert fourier_coefficient(z3, 3) == pytest.approx(1.0)
    assert abs(fourier_coefficient(z3, 2)) < 1e-14
    f = BoundarySamples(grid=grid, values=1.0 + 2.0 * grid.nodes)
    assert fourier_coefficient(f, 1) == pytest.approx(2.0)


def test_fourier_fast_path_agrees():
    grid = make_grid(512)
    rng = np.random.default_rng(3)
    f = BoundarySamples(
        grid=grid, values=rng.standard_normal(512) + 1j * rng.standard_normal(512)
    )
    for n in (-5, 0, 1, 17):
        slow = fourier_coefficient(f, n)
        fast = fourier_coefficient(f, n, fast=True)
        assert abs(slow - fast) < 1e-12


def test_fourier_aliasing_rejected():
    grid = make_grid(32)
    f = BoundarySamples(grid=grid, values=np.ones(32))
    with pytest.raises(InvalidArgumentError):
        fourier_coefficient(f, 16)


def test_fourier_batch_matches_single():
    grid = make_grid(256)
    rng = np.random.default_rng(11)
    f = BoundarySamples(
        grid=grid, values=rng.standard_normal(256) + 1j * rng.standard_normal(256)
    )
    batch = fourier_coefficients(f, 10)
    for n in range(11):
        assert abs(batch[n] - fourier_coefficient(f, n)) < 1e-12


def test_parseval_for_trig_polynomial():
    grid = make_grid(128)
    vals = 1.0 + 0.5 * grid.nodes**3 - 2j * grid.nodes**10
    f = BoundarySamples(grid=grid, values=vals)
    expect = np.sqrt(1.0 + 0.25 + 4.0)
    assert abs(lp_norm(f, 2.0) - expect) < 1e-12


def test_samples_length_checked():
    grid = make_grid(64)
    with pytest.raises(InvalidArgumentError):
        BoundarySamples(grid=grid, values=np.ones(63))
