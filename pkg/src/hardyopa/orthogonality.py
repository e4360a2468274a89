"""Birkhoff-James orthogonality in L^p and the Pythagorean inequalities.

f is orthogonal to g in L^p (1 < p < infinity) exactly when the integral
of |f|^(p-2) * conj(f) * g against normalized Lebesgue measure vanishes;
bj_residual returns the modulus of that integral on the grid.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import GridMismatchError, InvalidArgumentError
from .grid import BoundarySamples, lp_norm

DEFAULT_ORTH_TOL = 1e-10


def power_dual(f: BoundarySamples, s: float) -> BoundarySamples:
    """The map f -> |f|^(s-1) conj(f), zero wherever f vanishes."""
    if not s > 0:
        raise InvalidArgumentError(f"s must be positive, got {s}")
    return BoundarySamples(
        grid=f.grid,
        values=kernels.power_dual_values(np.ascontiguousarray(f.values), float(s)),
    )


def bj_residual(f: BoundarySamples, g: BoundarySamples, p: float) -> float:
    """|mean(|f|^(p-2) conj(f) g)|; zero iff f is orthogonal to g in L^p."""
    if f.grid != g.grid:
        raise GridMismatchError("samples live on different grids")
    if not 1.0 < p < np.inf:
        raise InvalidArgumentError(f"p must lie in (1, inf), got {p}")
    dual = power_dual(f, p - 1.0)
    return float(abs(np.mean(dual.values * g.values)))


def upper_pythagorean_params(p: float) -> tuple[float, float]:
    """(r, K) for the upper inequality ||f+g||^r <= ||f||^r + K ||g||^r."""
    if not 1.0 < p < np.inf:
        raise InvalidArgumentError(f"p must lie in (1, inf), got {p}")
    if p <= 2.0:
        return p, 1.0 / (2.0 ** (p - 1.0) - 1.0)
    return 2.0, p - 1.0


def lower_pythagorean_params(p: float) -> tuple[float, float]:
    """(r, K) for the lower inequality ||f+g||^r >= ||f||^r + K ||g||^r."""
    if not 1.0 < p < np.inf:
        raise InvalidArgumentError(f"p must lie in (1, inf), got {p}")
    if p <= 2.0:
        return 2.0, p - 1.0
    return p, 1.0 / (2.0 ** (p - 1.0) - 1.0)


@dataclass(frozen=True)
class PythagoreanParams:
    regime: str  # "upper" or "lower"
    p: float
    r: float
    K: float

    @classmethod
    def for_regime(cls, regime: str, p: float) -> "PythagoreanParams":
        if regime == "upper":
            r, K = upper_pythagorean_params(p)
        elif regime == "lower":
            r, K = lower_pythagorean_params(p)
        else:
            raise InvalidArgumentError(f"regime must be upper/lower, got {regime}")
        return cls(regime=regime, p=p, r=r, K=K)


@dataclass(frozen=True)
class InequalityCheck:
    name: str
    lhs: float
    rhs: float
    holds: bool

    @property
    def slack(self) -> float:
        return self.lhs - self.rhs


@dataclass(frozen=True)
class PythagoreanReport:
    orthogonal: bool
    residual: float
    inequalities: tuple


def pythagorean_report(
    f: BoundarySamples,
    g: BoundarySamples,
    p: float,
    tol: float = DEFAULT_ORTH_TOL,
) -> PythagoreanReport:
    """Check both applicable Pythagorean inequalities for an orthogonal pair.

    The report carries slack values; non-orthogonal inputs produce an
    informative report with the inequality checks skipped.
    """
    res = bj_residual(f, g, p)
    if res > tol:
        return PythagoreanReport(orthogonal=False, residual=res, inequalities=())

    sum_samples = BoundarySamples(grid=f.grid, values=f.values + g.values)
    nf, ng, nsum = lp_norm(f, p), lp_norm(g, p), lp_norm(sum_samples, p)

    ru, ku = upper_pythagorean_params(p)
    rl, kl = lower_pythagorean_params(p)
    upper = InequalityCheck(
        name=f"upper(r={ru:g})",
        lhs=nf**ru + ku * ng**ru,
        rhs=nsum**ru,
        holds=nsum**ru <= nf**ru + ku * ng**ru + 1e-12,
    )
    lower = InequalityCheck(
        name=f"lower(r={rl:g})",
        lhs=nsum**rl,
        rhs=nf**rl + kl * ng**rl,
        holds=nsum**rl >= nf**rl + kl * ng**rl - 1e-12,
    )
    return PythagoreanReport(orthogonal=True, residual=res, inequalities=(upper, lower))
