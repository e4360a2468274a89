"""Optimal polynomial approximants in H^p.

At p = 2 the minimizer of ||1 - q f||_2 over degree-n polynomials solves a
Hermitian Toeplitz system.  For general p in (1, infinity) the strictly
convex objective mean |1 - q f|^p is minimized over the real coordinates of
the coefficients with a quasi-Newton method, warm-started from the p = 2
solution, with epsilon-smoothing continuation for p < 2 and a final Newton
polish on the analytic gradient.  Termination is certified by the
Birkhoff-James residuals of 1 - q f against z^k f.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import optimize as sp_optimize

from . import kernels
from .errors import InvalidArgumentError
from .functions import FunctionSpec, sample, value_at_zero
from .grid import (
    BoundarySamples,
    CircleGrid,
    default_grid,
    fourier_coefficients,
    lp_norm,
)
from .orthogonality import bj_residual

CONDITION_WARNING_THRESHOLD = 1e12


@dataclass(frozen=True)
class SolverOptions:
    grid_size: int = 4096
    tol: float = 1e-10
    max_iter: int = 500
    smoothing_eps: tuple = (1e-2, 1e-4, 1e-6, 0.0)
    newton_steps: int = 8

    def __post_init__(self):
        if not self.tol > 0:
            raise InvalidArgumentError("tol must be positive")
        eps = tuple(self.smoothing_eps)
        if any(b >= a for a, b in zip(eps, eps[1:])):
            raise InvalidArgumentError("smoothing_eps must be strictly decreasing")
        object.__setattr__(self, "smoothing_eps", eps)


@dataclass(frozen=True)
class OpaResult:
    coefficients: np.ndarray = field(repr=False)
    error: float
    certificate: float
    iterations: int
    converged: bool
    condition_warning: bool = False

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


def _basis_matrix(f_samples: BoundarySamples, n: int) -> np.ndarray:
    """Columns zeta^j * f(zeta), j = 0..n."""
    nodes = f_samples.grid.nodes
    powers = nodes[:, None] ** np.arange(n + 1)[None, :]
    return np.ascontiguousarray(powers * f_samples.values[:, None])


def _certificate(
    residual: BoundarySamples, basis: np.ndarray, p: float
) -> float:
    cols = [
        BoundarySamples(grid=residual.grid, values=basis[:, j])
        for j in range(basis.shape[1])
    ]
    return max(bj_residual(residual, col, p) for col in cols)


def _residual_samples(
    grid: CircleGrid, basis: np.ndarray, coeffs: np.ndarray
) -> BoundarySamples:
    return BoundarySamples(grid=grid, values=1.0 - basis @ coeffs)


def _zero_opa_result(f: FunctionSpec, n: int, grid: CircleGrid, p: float) -> OpaResult:
    # f(0) = 0: every OPA vanishes identically and the error is exactly 1.
    coeffs = np.zeros(n + 1, dtype=np.complex128)
    return OpaResult(
        coefficients=coeffs, error=1.0, certificate=0.0, iterations=0, converged=True
    )


def solve_opa_p2(
    f: FunctionSpec, n: int, grid: CircleGrid | None = None
) -> OpaResult:
    """Closed-form H^2 OPA via the Toeplitz normal equations."""
    if n < 0:
        raise InvalidArgumentError("degree must be nonnegative")
    grid = grid or default_grid()
    f_samples = sample(f, grid)
    if not np.any(np.abs(f_samples.values) > 0):
        raise InvalidArgumentError("f must not be identically zero")
    f0 = value_at_zero(f)
    if f0 == 0:
        return _zero_opa_result(f, n, grid, 2.0)

    sq = BoundarySamples(grid=grid, values=np.abs(f_samples.values) ** 2)
    coeffs_fft = fourier_coefficients(sq, n)
    # G[k, j] = c_{k-j}(|f|^2), Hermitian Toeplitz.
    idx = np.arange(n + 1)
    diff = idx[:, None] - idx[None, :]
    gram = np.where(diff >= 0, coeffs_fft[np.abs(diff)], np.conj(coeffs_fft[np.abs(diff)]))
    rhs = np.zeros(n + 1, dtype=np.complex128)
    rhs[0] = np.conj(f0)
    cond_warning = bool(np.linalg.cond(gram) > CONDITION_WARNING_THRESHOLD)
    coeffs = np.linalg.solve(gram, rhs)

    basis = _basis_matrix(f_samples, n)
    residual = _residual_samples(grid, basis, coeffs)
    return OpaResult(
        coefficients=coeffs,
        error=lp_norm(residual, 2.0),
        certificate=_certificate(residual, basis, 2.0),
        iterations=0,
        converged=True,
        condition_warning=cond_warning,
    )


def _objective_and_grad_real(v, basis, p, eps):
    m = basis.shape[1]
    coeffs = v[:m] + 1j * v[m:]
    residual = np.ascontiguousarray(1.0 - basis @ coeffs)
    f_val, grad_c = kernels.lp_objective_gradient(residual, basis, p, eps)
    return f_val, np.concatenate([grad_c.real, grad_c.imag])


def _newton_polish(v, basis, p, opts):
    """Newton on the analytic gradient, Jacobian by central differences."""
    dim = v.size
    step = 1e-6
    for _ in range(opts.newton_steps):
        _, g = _objective_and_grad_real(v, basis, p, 0.0)
        gnorm = np.max(np.abs(g))
        if gnorm <= 1e-14:
            break
        jac = np.empty((dim, dim))
        for i in range(dim):
            vp = v.copy()
            vp[i] += step
            vm = v.copy()
            vm[i] -= step
            _, gp = _objective_and_grad_real(vp, basis, p, 0.0)
            _, gm = _objective_and_grad_real(vm, basis, p, 0.0)
            jac[:, i] = (gp - gm) / (2 * step)
        try:
            delta = np.linalg.solve(jac, g)
        except np.linalg.LinAlgError:
            break
        v_new = v - delta
        _, g_new = _objective_and_grad_real(v_new, basis, p, 0.0)
        if np.max(np.abs(g_new)) >= gnorm:
            break
        v = v_new
    return v


def solve_opa(
    f: FunctionSpec,
    n: int,
    p: float,
    opts: SolverOptions | None = None,
    initial_coefficients: np.ndarray | None = None,
) -> OpaResult:
    """Degree-n OPA minimizing ||1 - q f||_p on the grid."""
    if not 1.0 < p < np.inf:
        raise InvalidArgumentError(f"p must lie in (1, inf), got {p}")
    if n < 0:
        raise InvalidArgumentError("degree must be nonnegative")
    opts = opts or SolverOptions()
    grid = default_grid(opts.grid_size)

    f0 = value_at_zero(f)
    if f0 == 0:
        return _zero_opa_result(f, n, grid, p)

    p2 = solve_opa_p2(f, n, grid)
    if initial_coefficients is not None:
        start = np.zeros(n + 1, dtype=np.complex128)
        init = np.asarray(initial_coefficients, dtype=np.complex128)
        start[: min(len(init), n + 1)] = init[: n + 1]
    else:
        start = p2.coefficients

    f_samples = sample(f, grid)
    basis = _basis_matrix(f_samples, n)
    v = np.concatenate([start.real, start.imag])

    eps_schedule = opts.smoothing_eps if p < 2.0 else (0.0,)
    total_iters = 0
    for eps in eps_schedule:
        res = sp_optimize.minimize(
            _objective_and_grad_real,
            v,
            args=(basis, p, eps),
            jac=True,
            method="L-BFGS-B",
            options={"maxiter": opts.max_iter, "ftol": 1e-18, "gtol": 1e-14},
        )
        v = res.x
        total_iters += res.nit

    v = _newton_polish(v, basis, p, opts)

    coeffs = v[: n + 1] + 1j * v[n + 1 :]
    residual = _residual_samples(grid, basis, coeffs)
    certificate = _certificate(residual, basis, p)
    return OpaResult(
        coefficients=coeffs,
        error=lp_norm(residual, p),
        certificate=certificate,
        iterations=total_iters,
        converged=bool(certificate <= opts.tol),
        condition_warning=p2.condition_warning,
    )


def opa_error_sequence(
    f: FunctionSpec, p: float, n_max: int, opts: SolverOptions | None = None
) -> list[tuple[int, float, float]]:
    """(n, error, certificate) for n = 0..n_max, warm-started in n."""
    opts = opts or SolverOptions()
    rows = []
    prev = None
    for n in range(n_max + 1):
        result = solve_opa(f, n, p, opts, initial_coefficients=prev)
        alt = solve_opa(f, n, p, opts)
        if alt.error < result.error:
            result = alt
        rows.append((n, result.error, result.certificate))
        prev = result.coefficients
    return rows


@dataclass(frozen=True)
class ConjectureEntry:
    lhs: float
    rhs: float
    rhs_coefficient: complex

    @property
    def margin(self) -> float:
        return self.lhs - self.rhs


def conjecture_scan(
    f: FunctionSpec,
    inner_family: list[FunctionSpec],
    p: float,
    opts: SolverOptions | None = None,
) -> list[ConjectureEntry]:
    """Compare ||1 - J f||_p against min over constants c of ||1 - c f||_p.

    A negative margin would be a counterexample to the constant-beats-inner
    conjecture and is reported as-is, never clipped.
    """
    opts = opts or SolverOptions()
    grid = default_grid(opts.grid_size)
    if value_at_zero(f) == 0:
        raise InvalidArgumentError("f(0) must be nonzero")
    f_samples = sample(f, grid)

    best_const = solve_opa(f, 0, p, opts)
    rhs = best_const.error
    rhs_c = complex(best_const.coefficients[0])

    entries = []
    for j_spec in inner_family:
        if j_spec.is_trivial_inner():
            raise InvalidArgumentError("family members must be non-constant inner")
        if value_at_zero(j_spec.inner_part()) == 0:
            raise InvalidArgumentError("family members must satisfy J(0) != 0")
        j_samples = sample(j_spec.inner_part(), grid)
        combined = BoundarySamples(
            grid=grid, values=1.0 - j_samples.values * f_samples.values
        )
        entries.append(
            ConjectureEntry(lhs=lp_norm(combined, p), rhs=rhs, rhs_coefficient=rhs_c)
        )
    return entries
