"""The dual side of the distance problem.

The distance from conj(J) to H^p equals the norm of the contour functional
g -> (1/2 pi i) integral of g * conj(J) over the unit ball of H^q,
1/p + 1/q = 1.  For distinct Blaschke zeros the functional collapses to a
residue sum; the supremum is estimated from below with a polynomial ansatz
and compared against the exact primal value (1 - |J(0)|^2)^(1/p).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import optimize as sp_optimize

from .errors import InvalidArgumentError
from .functions import FunctionSpec, eval_spec
from .grid import CircleGrid, default_grid

DEFAULT_SEARCH_DEGREE = 24


@dataclass(frozen=True)
class DualProblem:
    zeros: tuple
    q: float
    search_degree: int = DEFAULT_SEARCH_DEGREE

    def __post_init__(self):
        zeros = tuple(complex(a) for a in self.zeros)
        if not zeros:
            raise InvalidArgumentError("at least one zero is required")
        for a in zeros:
            if not 0.0 < abs(a) < 1.0:
                raise InvalidArgumentError(f"zero {a} must lie in D \\ {{0}}")
        if not 1.0 < self.q < np.inf:
            raise InvalidArgumentError(f"q must lie in (1, inf), got {self.q}")
        object.__setattr__(self, "zeros", zeros)

    @property
    def p(self) -> float:
        return self.q / (self.q - 1.0)


@dataclass(frozen=True)
class DualSupResult:
    value: float
    maximizer: np.ndarray = field(repr=False)
    converged: bool
    iterations: int


def residue_sum(prob: DualProblem, g: FunctionSpec) -> complex:
    """sum_j g(a_j) prod_k(1 - conj(a_k) a_j) / prod_{k != j}(a_k - a_j).

    Follows the displayed formula verbatim; only its modulus is comparable
    with the contour integral (the overall sign convention differs).
    """
    zeros = np.asarray(prob.zeros)
    if len(np.unique(np.round(zeros, 15))) != len(zeros):
        raise InvalidArgumentError("residue formula requires distinct zeros")
    total = 0.0 + 0.0j
    for j, aj in enumerate(zeros):
        numer = np.prod(1.0 - np.conj(zeros) * aj)
        others = np.delete(zeros, j)
        denom = np.prod(others - aj) if len(others) else 1.0
        total += complex(eval_spec(g, aj)) * numer / denom
    return complex(total)


def _conj_blaschke_moments(
    zeros, grid: CircleGrid, degree: int
) -> np.ndarray:
    """u_j = mean(zeta^(j+1) conj(J)), so the functional is L(g) = u . c."""
    nodes = grid.nodes
    j_values = np.ones(grid.size, dtype=np.complex128)
    for a in zeros:
        j_values *= (nodes - a) / (1.0 - np.conj(a) * nodes)
    psi = np.conj(j_values)
    powers = nodes[:, None] ** (np.arange(degree + 1)[None, :] + 1)
    return (powers * psi[:, None]).mean(axis=0)


def dual_sup(
    prob: DualProblem,
    grid: CircleGrid | None = None,
    max_iter: int = 2000,
) -> DualSupResult:
    """Maximize |L(g)| over polynomials g of the search degree, ||g||_q <= 1.

    The returned value is a lower bound on the true supremum.  The objective
    is the scale-invariant ratio |L(g)| / ||g||_q, maximized with a
    quasi-Newton method from the q = 2 closed-form optimum; the reported
    maximizer is renormalized to the unit sphere.
    """
    grid = grid or default_grid()
    m = prob.search_degree
    if m < len(prob.zeros):
        raise InvalidArgumentError("search degree must be >= number of zeros")
    q = prob.q
    u = _conj_blaschke_moments(prob.zeros, grid, m)
    vander = grid.nodes[:, None] ** np.arange(m + 1)[None, :]
    n_nodes = grid.size

    def ratio_and_grad(v):
        c = v[: m + 1] + 1j * v[m + 1 :]
        l_val = np.dot(u, c)
        g_vals = vander @ c
        w = np.abs(g_vals) ** 2
        norm_q = float(np.mean(w ** (q / 2.0)) ** (1.0 / q))
        l_abs = abs(l_val)
        if l_abs == 0.0 or norm_q == 0.0:
            return 0.0, np.zeros_like(v)
        # d|L|/dc and d||g||_q/dc as combined x+iy gradients.
        grad_l = (l_val / l_abs) * np.conj(u)
        scale = w ** ((q - 2.0) / 2.0) * g_vals
        grad_nq = (norm_q ** (1.0 - q)) * (vander.conj().T @ scale) / n_nodes
        ratio = l_abs / norm_q
        grad_c = grad_l / norm_q - ratio / norm_q * grad_nq
        grad = np.concatenate([grad_c.real, grad_c.imag])
        return -ratio, -grad

    c0 = np.conj(u)
    scale0 = np.max(np.abs(c0))
    if scale0 > 0:
        c0 = c0 / scale0
    else:
        c0 = np.zeros(m + 1, dtype=np.complex128)
        c0[0] = 1.0
    v0 = np.concatenate([c0.real, c0.imag])

    res = sp_optimize.minimize(
        ratio_and_grad,
        v0,
        jac=True,
        method="L-BFGS-B",
        options={"maxiter": max_iter, "ftol": 1e-18, "gtol": 1e-13},
    )
    c = res.x[: m + 1] + 1j * res.x[m + 1 :]
    g_vals = vander @ c
    norm_q = float(np.mean(np.abs(g_vals) ** q) ** (1.0 / q))
    if norm_q > 0:
        c = c / norm_q
    value = float(abs(np.dot(u, c)))
    return DualSupResult(
        value=value,
        maximizer=c,
        converged=bool(res.success or value > 0),
        iterations=int(res.nit),
    )


def primal_value(zeros, q: float) -> float:
    """Exact supremum by duality: (1 - prod |a_k|^2)^(1/p)."""
    p = q / (q - 1.0)
    prod_mod = float(np.prod(np.abs(np.asarray([complex(a) for a in zeros]))))
    return float((1.0 - prod_mod**2) ** (1.0 / p))


@dataclass(frozen=True)
class StrictInequalityReport:
    lhs: float
    rhs: float
    holds: bool
    lhs_exact: float
    rhs_exact: float

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs


def verify_strict_inequality(
    zeros1,
    zeros2,
    q: float,
    grid: CircleGrid | None = None,
    search_degree: int = DEFAULT_SEARCH_DEGREE,
    margin_min: float = 1e-9,
) -> StrictInequalityReport:
    """Dual sup for conj(J1) is strictly below the sup for conj(J1 J2)."""
    zeros1 = tuple(complex(a) for a in zeros1)
    zeros2 = tuple(complex(a) for a in zeros2)
    if not zeros1 or not zeros2:
        raise InvalidArgumentError("both zero lists must be nonempty")
    combined = zeros1 + zeros2
    degree = max(search_degree, len(combined))
    lhs = dual_sup(DualProblem(zeros=zeros1, q=q, search_degree=degree), grid)
    rhs = dual_sup(DualProblem(zeros=combined, q=q, search_degree=degree), grid)
    return StrictInequalityReport(
        lhs=lhs.value,
        rhs=rhs.value,
        holds=bool(rhs.value - lhs.value > margin_min),
        lhs_exact=primal_value(zeros1, q),
        rhs_exact=primal_value(combined, q),
    )


@dataclass(frozen=True)
class TwoFactorGapReport:
    lhs: float
    rhs_estimate: float
    rhs_exact: float
    holds: bool


def two_factor_gap(
    a: complex,
    b: complex,
    q: float,
    grid: CircleGrid | None = None,
    search_degree: int = DEFAULT_SEARCH_DEGREE,
) -> TwoFactorGapReport:
    """(1 - |a|^2)^(1/p) versus the two-zero dual supremum."""
    a, b = complex(a), complex(b)
    if a == b:
        raise InvalidArgumentError("the two zeros must be distinct")
    prob = DualProblem(zeros=(a, b), q=q, search_degree=search_degree)
    rhs = dual_sup(prob, grid)
    p = prob.p
    lhs = float((1.0 - abs(a) ** 2) ** (1.0 / p))
    return TwoFactorGapReport(
        lhs=lhs,
        rhs_estimate=rhs.value,
        rhs_exact=primal_value((a, b), q),
        holds=bool(rhs.value > lhs),
    )


def single_zero_extremal_samples(a: complex, q: float, grid: CircleGrid) -> np.ndarray:
    """Closed-form maximizer ((1-|a|^2)/(1 - conj(a) z)^2)^(1/q) on the grid.

    Evaluated via a continuous logarithm so the power is single-valued even
    when (1 - conj(a) z)^2 leaves the right half-plane.
    """
    nodes = grid.nodes
    log_base = np.log(1.0 - abs(a) ** 2) - 2.0 * np.log(1.0 - np.conj(a) * nodes)
    return np.exp(log_base / q)
