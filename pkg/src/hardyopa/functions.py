"""Finite descriptions of Hardy-space functions and their evaluation.

A function is described as (Blaschke product) x (atomic singular inner
factors) x (polynomial outer candidate).  Boundary values on a grid are the
universal computational representation; fractional powers of right-half-plane
functions are taken with the principal logarithm.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import BranchViolationError, DomainError, InvalidArgumentError
from .grid import BoundarySamples, CircleGrid

_UNIT_TOL = 1e-14
_ATOM_NODE_TOL = 1e-12


@dataclass(frozen=True)
class BlaschkeProduct:
    """Product of factors (z - a_k)/(1 - conj(a_k) z) times a rotation.

    Repetition in `zeros` encodes multiplicity.  Zeros at the origin are
    rejected: every result downstream requires J(0) != 0.
    """

    zeros: tuple = ()
    rotation: complex = 1.0 + 0.0j

    def __post_init__(self):
        zeros = tuple(complex(a) for a in self.zeros)
        for a in zeros:
            if not 0.0 < abs(a) < 1.0:
                raise InvalidArgumentError(
                    f"Blaschke zero must satisfy 0 < |a| < 1, got {a}"
                )
        rot = complex(self.rotation)
        if abs(abs(rot) - 1.0) > _UNIT_TOL:
            raise InvalidArgumentError(f"rotation must be unimodular, got {rot}")
        object.__setattr__(self, "zeros", zeros)
        object.__setattr__(self, "rotation", rot)

    def __call__(self, z):
        z = np.asarray(z, dtype=np.complex128)
        out = np.full(z.shape, self.rotation, dtype=np.complex128)
        for a in self.zeros:
            out *= (z - a) / (1.0 - np.conj(a) * z)
        return out if out.shape else complex(out)

    def value_at_zero(self) -> complex:
        out = self.rotation
        for a in self.zeros:
            out *= -a
        return complex(out)


@dataclass(frozen=True)
class SingularAtom:
    """Atomic singular inner factor exp(-mass*(point+z)/(point-z))."""

    mass: float
    point: complex = 1.0 + 0.0j

    def __post_init__(self):
        if not self.mass > 0:
            raise InvalidArgumentError(f"atom mass must be positive, got {self.mass}")
        pt = complex(self.point)
        if abs(abs(pt) - 1.0) > _UNIT_TOL:
            raise InvalidArgumentError(f"atom point must be unimodular, got {pt}")
        object.__setattr__(self, "point", pt)

    def __call__(self, z):
        z = np.asarray(z, dtype=np.complex128)
        diff = self.point - z
        if np.any(np.abs(diff) < _ATOM_NODE_TOL):
            raise DomainError(f"evaluation at singular point {self.point}")
        out = np.exp(-self.mass * (self.point + z) / diff)
        return out if out.shape else complex(out)


@dataclass(frozen=True)
class FunctionSpec:
    """Inner part (Blaschke x atoms) times a polynomial outer candidate.

    `outer_poly` holds coefficients in ascending degree; callers that need
    the polynomial to be outer must check its roots separately.
    """

    blaschke: BlaschkeProduct | None = None
    atoms: tuple = ()
    outer_poly: tuple = (1.0 + 0.0j,)

    def __post_init__(self):
        atoms = tuple(self.atoms)
        poly = tuple(complex(c) for c in self.outer_poly)
        if not poly:
            poly = (1.0 + 0.0j,)
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "outer_poly", poly)

    def inner_part(self) -> "FunctionSpec":
        return FunctionSpec(blaschke=self.blaschke, atoms=self.atoms)

    def is_trivial_inner(self) -> bool:
        no_blaschke = self.blaschke is None or not self.blaschke.zeros
        return no_blaschke and not self.atoms


def eval_spec(f: FunctionSpec, z):
    """Evaluate the full product at z (scalar or array, |z| <= 1)."""
    z = np.asarray(z, dtype=np.complex128)
    out = np.polynomial.polynomial.polyval(z, np.asarray(f.outer_poly))
    out = np.asarray(out, dtype=np.complex128)
    if f.blaschke is not None:
        out = out * f.blaschke(z)
    for atom in f.atoms:
        out = out * atom(z)
    return out if out.shape else complex(out)


def sample(f: FunctionSpec, grid: CircleGrid) -> BoundarySamples:
    """Boundary samples of f at the grid nodes."""
    for atom in f.atoms:
        if np.min(np.abs(grid.nodes - atom.point)) < _ATOM_NODE_TOL:
            raise DomainError(f"grid node collides with atom point {atom.point}")
    return BoundarySamples(grid=grid, values=np.asarray(eval_spec(f, grid.nodes)))


def value_at_zero(f: FunctionSpec) -> complex:
    """Closed-form f(0): rotation * prod(-a_k) * prod(exp(-sigma_j)) * c_0."""
    out = complex(f.outer_poly[0])
    if f.blaschke is not None:
        out *= f.blaschke.value_at_zero()
    for atom in f.atoms:
        out *= np.exp(-atom.mass)
    return complex(out)


def inner_value_at_zero(f: FunctionSpec) -> complex:
    """J(0) for the inner part of f; 1 by convention when f is outer."""
    if f.is_trivial_inner():
        return 1.0 + 0.0j
    return value_at_zero(f.inner_part())


def fractional_power(
    base: BoundarySamples, base_at_zero: complex, exponent: float
) -> BoundarySamples:
    """Pointwise base**exponent on the principal branch.

    Requires every value (and the value at the origin) to lie in the open
    right half-plane, which pins the single-valued analytic branch that is
    positive at 0.
    """
    if not 0.0 < exponent < 2.0:
        raise InvalidArgumentError(f"exponent must lie in (0, 2), got {exponent}")
    vals = base.values
    if np.real(base_at_zero) <= 0 or np.any(np.real(vals) <= 0):
        raise BranchViolationError(
            "fractional power requires values in the open right half-plane"
        )
    return BoundarySamples(
        grid=base.grid, values=np.exp(exponent * np.log(vals))
    )


def truncate_blaschke(zeros: Iterable[complex], n: int) -> BlaschkeProduct:
    """Finite product of the first n factors in the normalized convention.

    Each factor is (|a|/a)(a - z)/(1 - conj(a) z), so the truncation has
    J_n(0) = prod |a_k| > 0.  In the canonical (z - a)/(1 - conj(a) z) form
    this is a rotation by prod(-|a_k|/a_k).
    """
    if n < 0:
        raise InvalidArgumentError("truncation length must be nonnegative")
    taken = []
    it: Iterator[complex] = iter(zeros)
    for _ in range(n):
        a = complex(next(it))
        if not 0.0 < abs(a) < 1.0:
            raise InvalidArgumentError(f"generated zero {a} is not in D \\ {{0}}")
        taken.append(a)
    rotation = 1.0 + 0.0j
    for a in taken:
        rotation *= -abs(a) / a
    return BlaschkeProduct(zeros=tuple(taken), rotation=rotation)


# --- JSON schema -----------------------------------------------------------


def _c2j(z: complex) -> dict:
    return {"re": float(np.real(z)), "im": float(np.imag(z))}


def _j2c(obj) -> complex:
    if isinstance(obj, dict):
        return complex(obj.get("re", 0.0), obj.get("im", 0.0))
    return complex(obj)


def spec_to_dict(f: FunctionSpec) -> dict:
    out: dict = {"outer_poly": [_c2j(c) for c in f.outer_poly]}
    if f.blaschke is not None:
        out["blaschke"] = {
            "zeros": [_c2j(a) for a in f.blaschke.zeros],
            "rotation": _c2j(f.blaschke.rotation),
        }
    if f.atoms:
        out["atoms"] = [
            {"mass": atom.mass, "point": _c2j(atom.point)} for atom in f.atoms
        ]
    return out


def spec_from_dict(data: dict) -> FunctionSpec:
    blaschke = None
    if "blaschke" in data and data["blaschke"] is not None:
        b = data["blaschke"]
        blaschke = BlaschkeProduct(
            zeros=tuple(_j2c(a) for a in b.get("zeros", [])),
            rotation=_j2c(b.get("rotation", {"re": 1.0, "im": 0.0})),
        )
    atoms = tuple(
        SingularAtom(mass=float(a["mass"]), point=_j2c(a.get("point", {"re": 1.0})))
        for a in data.get("atoms", [])
    )
    poly = tuple(_j2c(c) for c in data.get("outer_poly", [{"re": 1.0, "im": 0.0}]))
    return FunctionSpec(blaschke=blaschke, atoms=atoms, outer_poly=poly)


def spec_from_json(text: str) -> FunctionSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidArgumentError(f"invalid FunctionSpec JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InvalidArgumentError("FunctionSpec JSON must be an object")
    return spec_from_dict(data)


def blaschke_spec(zeros: Sequence[complex], rotation: complex = 1.0) -> FunctionSpec:
    """Convenience constructor for a pure finite Blaschke product."""
    return FunctionSpec(blaschke=BlaschkeProduct(zeros=tuple(zeros), rotation=rotation))
