"""Command-line front end.

Every command emits a JSON (default) or CSV report; complex numbers are
serialized as {"re": ..., "im": ...} objects.  Exit codes: 0 success,
2 invalid input, 3 solver non-convergence, 4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from pathlib import Path

import numpy as np

from . import dual as dual_mod
from . import opa as opa_mod
from . import projection as proj_mod
from . import roots as roots_mod
from .errors import (
    ConsistencyError,
    DomainError,
    InvalidArgumentError,
    OuternessError,
)
from .functions import (
    blaschke_spec,
    inner_value_at_zero,
    sample,
    spec_from_json,
    spec_to_dict,
)
from .grid import BoundarySamples, make_grid
from .orthogonality import pythagorean_report

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_NO_CONVERGENCE = 3
EXIT_INTERNAL = 4

DEFAULT_GRID = int(os.environ.get("HARDY_OPA_GRID", "4096"))


def _c2j(z) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _load_spec(text: str):
    if text is None:
        raise InvalidArgumentError("an --input FunctionSpec is required")
    candidate = text.strip()
    if not candidate.startswith("{"):
        path = Path(candidate)
        if not path.exists():
            raise InvalidArgumentError(f"input file not found: {candidate}")
        candidate = path.read_text()
    return spec_from_json(candidate)


def _parse_zeros(text: str):
    if text is None:
        raise InvalidArgumentError("--zeros is required for this command")
    stripped = text.strip()
    if stripped.startswith("["):
        data = json.loads(stripped)
        return [complex(item.get("re", 0.0), item.get("im", 0.0)) for item in data]
    return [complex(float(part), 0.0) for part in stripped.split(",") if part]


def _emit(report, fmt: str, out_path: str | None, csv_rows=None, csv_fields=None):
    if fmt == "csv":
        if csv_rows is None:
            raise InvalidArgumentError("this command has no CSV representation")
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=csv_fields)
        writer.writeheader()
        writer.writerows(csv_rows)
        text = buf.getvalue()
    else:
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


def _opa_report(result) -> dict:
    return {
        "coefficients": [_c2j(c) for c in result.coefficients],
        "error": result.error,
        "certificate": result.certificate,
        "iterations": result.iterations,
        "converged": result.converged,
        "condition_warning": result.condition_warning,
    }


def cmd_opa(args):
    f = _load_spec(args.input)
    opts = opa_mod.SolverOptions(
        grid_size=args.grid, tol=args.tol, max_iter=args.max_iter
    )
    result = opa_mod.solve_opa(f, args.degree, args.p, opts)
    _emit(_opa_report(result), args.format, args.out)
    return EXIT_OK if result.converged else EXIT_NO_CONVERGENCE


def cmd_project(args):
    f = _load_spec(args.input)
    grid = make_grid(args.grid)
    result = proj_mod.project_one(f, args.p, grid)
    report = {
        "distance": result.distance,
        "j_at_zero": _c2j(result.j_at_zero),
        "residual_norm_matches": True,
        "input": spec_to_dict(f),
        "p": args.p,
    }
    _emit(report, args.format, args.out)
    return EXIT_OK


def cmd_extremal_fbp(args):
    zeros = _parse_zeros(args.zeros)
    grid = make_grid(args.grid)
    result = proj_mod.finite_blaschke_extremal(zeros, args.p, grid)
    spicy = proj_mod.spicyham_check(result, zeros, args.p, grid)
    report = {
        "c": result.c,
        "d": result.d,
        "w": [_c2j(w) for w in result.w],
        "outer_poly": [_c2j(c) for c in result.outer_poly_coeffs],
        "max_consistency_residual": float(np.max(result.consistency_residuals)),
        "spicyham_max": spicy,
        "p": args.p,
    }
    _emit(report, args.format, args.out)
    return EXIT_OK


def cmd_distance(args):
    f = _load_spec(args.input)
    report = {
        "distance": proj_mod.distance_formula(f, args.p),
        "j_at_zero": _c2j(inner_value_at_zero(f)),
        "p": args.p,
    }
    _emit(report, args.format, args.out)
    return EXIT_OK


def cmd_dual(args):
    zeros = _parse_zeros(args.zeros)
    prob = dual_mod.DualProblem(
        zeros=tuple(zeros), q=args.q, search_degree=args.degree
    )
    grid = make_grid(args.grid)
    result = dual_mod.dual_sup(prob, grid, max_iter=args.max_iter)
    report = {
        "value": result.value,
        "primal_exact": dual_mod.primal_value(zeros, args.q),
        "maximizer": [_c2j(c) for c in result.maximizer],
        "converged": result.converged,
        "q": args.q,
    }
    _emit(report, args.format, args.out)
    return EXIT_OK if result.converged else EXIT_NO_CONVERGENCE


def cmd_roots(args):
    f = _load_spec(args.input)
    opts = opa_mod.SolverOptions(
        grid_size=args.grid, tol=args.tol, max_iter=args.max_iter
    )
    result = opa_mod.solve_opa(f, args.degree, args.p, opts)
    grid = make_grid(args.grid)
    checks = [
        roots_mod.check_product_bound(f, result, args.p),
        roots_mod.check_centner_bound(result, args.p),
    ]
    if args.p < 2.0:
        checks.append(
            roots_mod.BoundCheck(
                name="a_priori_p_less_2",
                lhs=roots_mod.root_report(result.coefficients).product_modulus,
                rhs=roots_mod.bound_p_less_2(f, args.p, grid),
                satisfied=True,
            )
        )
    elif args.p > 2.0:
        checks.append(
            roots_mod.BoundCheck(
                name="a_priori_p_greater_2",
                lhs=roots_mod.root_report(result.coefficients).product_modulus,
                rhs=roots_mod.bound_p_greater_2(f, args.p, grid),
                satisfied=True,
            )
        )
    report_obj = roots_mod.root_report(result.coefficients)
    report = {
        "roots": [_c2j(r) for r in report_obj.roots],
        "in_disk": [_c2j(r) for r in report_obj.in_disk],
        "product_modulus": report_obj.product_modulus,
        "bounds": [
            {"name": c.name, "lhs": c.lhs, "rhs": c.rhs, "satisfied": c.satisfied}
            for c in checks
        ],
        "opa": _opa_report(result),
    }
    _emit(report, args.format, args.out)
    return EXIT_OK


def cmd_pythag(args):
    f = _load_spec(args.input)
    g = _load_spec(args.input2)
    grid = make_grid(args.grid)
    report_obj = pythagorean_report(sample(f, grid), sample(g, grid), args.p)
    report = {
        "orthogonal": report_obj.orthogonal,
        "residual": report_obj.residual,
        "inequalities": [
            {"name": c.name, "lhs": c.lhs, "rhs": c.rhs, "holds": c.holds}
            for c in report_obj.inequalities
        ],
        "p": args.p,
    }
    _emit(report, args.format, args.out)
    return EXIT_OK


def cmd_scan_conjecture(args):
    f = _load_spec(args.input)
    zeros = _parse_zeros(args.zeros)
    opts = opa_mod.SolverOptions(
        grid_size=args.grid, tol=args.tol, max_iter=args.max_iter
    )
    entries = opa_mod.conjecture_scan(f, [blaschke_spec(zeros)], args.p, opts)
    entry = entries[0]
    report = {
        "lhs": entry.lhs,
        "rhs": entry.rhs,
        "margin": entry.margin,
        "counterexample": entry.margin < 0,
        "p": args.p,
    }
    if entry.margin < 0:
        print("CONJECTURE COUNTEREXAMPLE: margin is negative", file=sys.stderr)
    _emit(report, args.format, args.out)
    return EXIT_OK


def cmd_escape(args):
    f = _load_spec(args.input)
    opts = opa_mod.SolverOptions(
        grid_size=args.grid, tol=args.tol, max_iter=args.max_iter
    )
    radii = [float(r) for r in args.radii.split(",")] if args.radii else []
    result = roots_mod.escape_tracker(f, args.p, args.degree, radii, opts)
    fields = ["n", "p", "root_re", "root_im", "modulus", "in_disk"]
    _emit(result, args.format, args.out, csv_rows=result["trajectories"], csv_fields=fields)
    return EXIT_OK


def cmd_truncation(args):
    n_list = list(range(1, args.degree + 1))
    if args.family == "geometric":
        zeros = [1.0 - 2.0 ** (-k) for k in range(1, args.degree + 1)]
        rows = proj_mod.truncation_distance_experiment(zeros, args.p, n_list)
        report_rows = [
            {"n": n, "j_at_zero_modulus": j0, "distance": dist}
            for n, j0, dist in rows
        ]
        report = {"family": "geometric", "rows": report_rows}
    else:
        family = proj_mod.multiplicity_family_report(
            [n for n in n_list if n >= 2], args.p
        )
        report_rows = family
        report = {
            "family": "multiplicity",
            "rows": family,
            "note": (
                "|B_n(0)| = (1-1/n)^n increases with n; the claimed decrease "
                "does not match the computed values"
            ),
        }
    fields = list(report_rows[0].keys()) if report_rows else []
    _emit(report, args.format, args.out, csv_rows=report_rows, csv_fields=fields)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hardy-opa",
        description="Optimal polynomial approximants and metric projections in H^p",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, needs_input=False):
        sp.add_argument("--p", type=float, default=2.0)
        sp.add_argument("--q", type=float, default=2.0)
        sp.add_argument("--degree", type=int, default=8)
        sp.add_argument("--grid", type=int, default=DEFAULT_GRID)
        sp.add_argument("--tol", type=float, default=1e-10)
        sp.add_argument("--max-iter", type=int, default=500, dest="max_iter")
        sp.add_argument("--input", type=str, default=None)
        sp.add_argument("--input2", type=str, default=None)
        sp.add_argument("--zeros", type=str, default=None)
        sp.add_argument("--radii", type=str, default=None)
        sp.add_argument("--family", type=str, default="geometric",
                        choices=["geometric", "multiplicity"])
        sp.add_argument("--format", type=str, default="json", choices=["json", "csv"])
        sp.add_argument("--out", type=str, default=None)
        sp.add_argument("--seed", type=int, default=0)

    for name, fn in [
        ("opa", cmd_opa),
        ("project", cmd_project),
        ("extremal-fbp", cmd_extremal_fbp),
        ("distance", cmd_distance),
        ("dual", cmd_dual),
        ("roots", cmd_roots),
        ("pythag", cmd_pythag),
        ("scan-conjecture", cmd_scan_conjecture),
        ("escape", cmd_escape),
        ("truncation", cmd_truncation),
    ]:
        sp = sub.add_parser(name)
        add_common(sp)
        sp.set_defaults(handler=fn)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    random.seed(args.seed)
    np.random.seed(args.seed % (2**32))
    try:
        return args.handler(args)
    except (InvalidArgumentError, DomainError, json.JSONDecodeError) as exc:
        print(f"error: invalid-input: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except (ConsistencyError, OuternessError) as exc:
        print(f"error: internal-consistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
