"""Exception types shared across the package."""


class InvalidArgumentError(ValueError):
    """An argument violates a documented precondition."""


class GridMismatchError(InvalidArgumentError):
    """Two sample sets do not live on the same quadrature grid."""


class DomainError(ValueError):
    """Evaluation requested at a point where the function is undefined."""


class BranchViolationError(ValueError):
    """A fractional power was requested outside the right half-plane branch."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed (usually indicates a root-finder problem)."""


class OuternessError(RuntimeError):
    """A polynomial expected to be outer has a root inside the open unit disk."""
