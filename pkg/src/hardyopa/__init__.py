"""Optimal polynomial approximants and metric projections in H^p (1 < p < inf)."""

from .errors import (
    BranchViolationError,
    ConsistencyError,
    DomainError,
    GridMismatchError,
    InvalidArgumentError,
    OuternessError,
)
from .functions import (
    BlaschkeProduct,
    FunctionSpec,
    SingularAtom,
    blaschke_spec,
    eval_spec,
    fractional_power,
    sample,
    spec_from_json,
    spec_to_dict,
    truncate_blaschke,
    value_at_zero,
)
from .grid import (
    BoundarySamples,
    CircleGrid,
    cauchy_functional,
    default_grid,
    dual_pair,
    fourier_coefficient,
    lp_norm,
    make_grid,
)
from .kernels import BACKEND
from .opa import OpaResult, SolverOptions, conjecture_scan, opa_error_sequence, solve_opa, solve_opa_p2
from .orthogonality import bj_residual, power_dual, pythagorean_report
from .projection import (
    ExtremalFbpResult,
    ProjectionResult,
    distance_formula,
    finite_blaschke_extremal,
    project_one,
    spicyham_check,
    truncation_distance_experiment,
)
from .dual import (
    DualProblem,
    dual_sup,
    primal_value,
    residue_sum,
    two_factor_gap,
    verify_strict_inequality,
)
from .roots import (
    BoundCheck,
    RootReport,
    bound_p_greater_2,
    bound_p_less_2,
    check_centner_bound,
    check_product_bound,
    escape_tracker,
    lemma_0opa_bound,
    poly_roots,
    root_report,
)

__version__ = "0.1.0"
