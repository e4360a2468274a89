"""Polynomial root finding and the OPA root bounds.

Roots come from the balanced companion matrix with one Newton polish each;
every reported root set is validated by reconstructing the polynomial.
The bound checks implement the product bound from the achieved OPA error,
the simpler min-modulus radius, and the p-dependent a priori bounds that
need only f itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import InvalidArgumentError
from .functions import FunctionSpec, inner_value_at_zero, sample, value_at_zero
from .grid import BoundarySamples, CircleGrid, default_grid, lp_norm
from .opa import OpaResult, SolverOptions, solve_opa
from .orthogonality import upper_pythagorean_params


IN_DISK_THRESHOLD = 1.0 - 1e-12
RECONSTRUCTION_TOL = 1e-8
BOUND_SLACK = 1e-9


def _leja_order(roots: np.ndarray) -> np.ndarray:
    """Order points so successive pairwise distance products stay balanced."""
    remaining = list(roots)
    if not remaining:
        return np.array([], dtype=np.complex128)
    ordered = [max(remaining, key=abs)]
    remaining.remove(ordered[0])
    while remaining:
        scores = [
            float(np.prod(np.abs(np.asarray(ordered) - r))) for r in remaining
        ]
        pick = int(np.argmax(scores))
        ordered.append(remaining.pop(pick))
    return np.asarray(ordered, dtype=np.complex128)


def poly_roots(coeffs) -> np.ndarray:
    """All complex roots (with multiplicity) of an ascending-coefficient poly."""
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    cutoff = 1e-14 * max(float(np.max(np.abs(coeffs))), 1e-300)
    deg = len(coeffs) - 1
    while deg > 0 and abs(coeffs[deg]) <= cutoff:
        deg -= 1
    coeffs = coeffs[: deg + 1]
    if deg == 0:
        if abs(coeffs[0]) <= cutoff:
            raise InvalidArgumentError("zero polynomial has no well-defined roots")
        raise InvalidArgumentError("constant polynomial has degree < 1")

    roots = np.roots(coeffs[::-1])
    deriv = npoly.polyder(coeffs)
    values = npoly.polyval(roots, coeffs)
    slopes = npoly.polyval(roots, deriv)
    # One Newton step; skipped near multiple roots where the slope degenerates.
    ok = np.abs(slopes) > 1e-8 * np.max(np.abs(coeffs))
    roots = np.where(ok, roots - values / np.where(ok, slopes, 1.0), roots)

    # Leja ordering keeps the partial products of the reconstruction from
    # growing, which would otherwise swamp the soundness check near degree 40.
    rebuilt = np.array([coeffs[-1]], dtype=np.complex128)
    for r in _leja_order(roots):
        rebuilt = npoly.polymul(rebuilt, np.array([-r, 1.0]))
    rel = np.max(np.abs(rebuilt - coeffs)) / np.max(np.abs(coeffs))
    if rel > RECONSTRUCTION_TOL:
        raise InvalidArgumentError(
            f"root finder failed to reconstruct polynomial (residual {rel:.3e})"
        )
    return roots


@dataclass(frozen=True)
class BoundCheck:
    name: str
    lhs: float
    rhs: float
    satisfied: bool

    @property
    def slack(self) -> float:
        return self.lhs - self.rhs


@dataclass(frozen=True)
class RootReport:
    roots: np.ndarray = field(repr=False)
    in_disk: np.ndarray = field(repr=False)
    boundary_ambiguous: np.ndarray = field(repr=False)
    product_modulus: float
    bounds: tuple = ()


def root_report(coeffs, bounds: tuple = ()) -> RootReport:
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    nonzero = np.abs(coeffs) > 1e-14 * max(float(np.max(np.abs(coeffs))), 1e-300)
    if not np.any(nonzero) or np.max(np.nonzero(nonzero)[0]) == 0:
        roots = np.array([], dtype=np.complex128)
    else:
        roots = poly_roots(coeffs)
    moduli = np.abs(roots)
    in_disk = roots[moduli < IN_DISK_THRESHOLD]
    boundary = roots[(moduli >= IN_DISK_THRESHOLD) & (moduli <= 1.0 + 1e-12)]
    product = float(np.prod(np.abs(in_disk))) if len(in_disk) else 1.0
    return RootReport(
        roots=roots,
        in_disk=in_disk,
        boundary_ambiguous=boundary,
        product_modulus=product,
        bounds=bounds,
    )


def check_product_bound(f: FunctionSpec, opa: OpaResult, p: float) -> BoundCheck:
    """|w_1...w_k| >= sqrt(1 - error^p)/|J(0)| over in-disk OPA roots."""
    j0 = abs(inner_value_at_zero(f))
    if j0 == 0:
        raise InvalidArgumentError("J(0) must be nonzero")
    report = root_report(opa.coefficients)
    rhs = float(np.sqrt(max(1.0 - opa.error**p, 0.0)) / j0)
    lhs = report.product_modulus
    return BoundCheck(
        name="product_bound", lhs=lhs, rhs=rhs, satisfied=lhs >= rhs - BOUND_SLACK
    )


def check_centner_bound(opa: OpaResult, p: float) -> BoundCheck:
    """Every in-disk root has modulus >= sqrt(1 - error^p)."""
    report = root_report(opa.coefficients)
    rhs = float(np.sqrt(max(1.0 - opa.error**p, 0.0)))
    if len(report.in_disk) == 0:
        return BoundCheck(name="centner_radius", lhs=1.0, rhs=rhs, satisfied=True)
    lhs = float(np.min(np.abs(report.in_disk)))
    return BoundCheck(
        name="centner_radius", lhs=lhs, rhs=rhs, satisfied=lhs >= rhs - BOUND_SLACK
    )


def bound_p_less_2(
    f: FunctionSpec, p: float, grid: CircleGrid | None = None
) -> float:
    """A priori in-disk root product bound for 1 < p < 2."""
    if not 1.0 < p < 2.0:
        raise InvalidArgumentError(f"p must lie in (1, 2), got {p}")
    grid = grid or default_grid()
    f0 = value_at_zero(f)
    if f0 == 0:
        raise InvalidArgumentError("f(0) must be nonzero")
    j0 = abs(inner_value_at_zero(f))
    norm2 = lp_norm(sample(f, grid), 2.0)
    ratio = min(abs(f0) ** 2 / norm2**2, 1.0)
    return float(np.sqrt(1.0 - (1.0 - ratio) ** (p / 2.0)) / j0)


def bound_p_greater_2(
    f: FunctionSpec, p: float, grid: CircleGrid | None = None
) -> float:
    """A priori in-disk root product bound for 2 < p < infinity."""
    if not 2.0 < p < np.inf:
        raise InvalidArgumentError(f"p must lie in (2, inf), got {p}")
    grid = grid or default_grid()
    f0 = value_at_zero(f)
    if f0 == 0:
        raise InvalidArgumentError("f(0) must be nonzero")
    j0 = abs(inner_value_at_zero(f))
    shifted = sample(f, grid)
    centered = BoundarySamples(grid=grid, values=shifted.values - f0)
    a_val = (p - 1.0) * lp_norm(centered, p) ** 2 / abs(f0) ** 2
    return float(np.sqrt(1.0 - (a_val / (1.0 + a_val)) ** (p / 2.0)) / j0)


def lemma_0opa_bound(
    f: FunctionSpec, p: float, grid: CircleGrid | None = None
) -> dict:
    """Upper bound on the degree-0 OPA error via the Pythagorean parameters.

    Returns A, the applicable (r, K), and the bound on error^r.  For
    f(0) = 0 the degenerate flag is set and the error is exactly 1.
    """
    if not 1.0 < p < np.inf:
        raise InvalidArgumentError(f"p must lie in (1, inf), got {p}")
    grid = grid or default_grid()
    f0 = value_at_zero(f)
    if f0 == 0:
        return {"degenerate": True, "error": 1.0}
    r, k_const = upper_pythagorean_params(p)
    samples = sample(f, grid)
    centered = BoundarySamples(grid=grid, values=samples.values - f0)
    # |z| = 1 on the circle, so dividing by z*f(0) only rescales the norm.
    a_val = k_const * (lp_norm(centered, p) / abs(f0)) ** r
    if a_val == 0.0:
        bound = 0.0
    else:
        b = a_val ** (1.0 / (r - 1.0))
        bound = (a_val ** (r / (r - 1.0)) + a_val) / (1.0 + b) ** r
    return {
        "degenerate": False,
        "A": float(a_val),
        "r": r,
        "K": k_const,
        "bound_on_error_to_the_r": float(bound),
    }


def escape_tracker(
    f: FunctionSpec,
    p: float,
    n_max: int,
    radii=(),
    opts: SolverOptions | None = None,
) -> dict:
    """Track in-disk OPA roots as the degree grows.

    Returns per-degree rows and, for each requested radius, the first degree
    after which no in-disk root has modulus <= radius (None if the roots
    have not escaped within the computed range).  Eventual escape is a
    theorem; monotone escape is not, so no trend is asserted here.
    """
    opts = opts or SolverOptions()
    if value_at_zero(f) == 0:
        raise InvalidArgumentError("f(0) must be nonzero")
    rows = []
    trajectories = []
    for n in range(n_max + 1):
        result = solve_opa(f, n, p, opts)
        report = root_report(result.coefficients)
        min_mod = (
            float(np.min(np.abs(report.in_disk))) if len(report.in_disk) else np.inf
        )
        rows.append(
            {
                "n": n,
                "min_in_disk_modulus": min_mod,
                "num_in_disk": int(len(report.in_disk)),
                "error": result.error,
            }
        )
        for root in report.roots:
            trajectories.append(
                {
                    "n": n,
                    "p": p,
                    "root_re": float(root.real),
                    "root_im": float(root.imag),
                    "modulus": float(abs(root)),
                    "in_disk": bool(abs(root) < IN_DISK_THRESHOLD),
                }
            )
    escapes = {}
    for radius in radii:
        first = None
        for row in rows:
            if row["min_in_disk_modulus"] > radius:
                if first is None:
                    first = row["n"]
            else:
                first = None
        escapes[float(radius)] = first
    return {"rows": rows, "trajectories": trajectories, "escape_degrees": escapes}
