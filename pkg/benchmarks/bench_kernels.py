"""Benchmark the compiled kernels against the numpy fallback.

Times the L^p objective/gradient evaluation (the solver's inner loop) and
the power-dual map on representative problem sizes.  Run from the repo
root:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --nodes 4096 16384 --repeats 200
"""

import argparse
import time

import numpy as np

from hardyopa import _kernels_py

try:
    from hardyopa import _kernels
except ImportError:
    _kernels = None


def _case(rng, n_nodes, n_basis):
    residual = np.ascontiguousarray(
        1.0 + 0.3 * (rng.standard_normal(n_nodes) + 1j * rng.standard_normal(n_nodes))
    )
    basis = np.ascontiguousarray(
        rng.standard_normal((n_nodes, n_basis))
        + 1j * rng.standard_normal((n_nodes, n_basis))
    )
    return residual, basis


def _time(fn, repeats):
    fn()  # warm up
    start = time.perf_counter()
    for _ in range(repeats):
        fn()
    return (time.perf_counter() - start) / repeats


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nodes", type=int, nargs="+", default=[1024, 4096, 16384])
    parser.add_argument("--basis", type=int, default=17)
    parser.add_argument("--repeats", type=int, default=100)
    parser.add_argument("--p", type=float, default=2.5)
    args = parser.parse_args()

    if _kernels is None:
        print("compiled extension not available; timing the fallback only")

    rng = np.random.default_rng(0)
    header = f"{'nodes':>8} {'kernel':>22} {'python (us)':>12}"
    if _kernels is not None:
        header += f" {'cython (us)':>12} {'speedup':>8}"
    print(header)

    for n in args.nodes:
        residual, basis = _case(rng, n, args.basis)

        t_py = _time(
            lambda: _kernels_py.lp_objective_gradient(residual, basis, args.p, 0.0),
            args.repeats,
        )
        row = f"{n:>8} {'lp_objective_gradient':>22} {t_py * 1e6:>12.1f}"
        if _kernels is not None:
            t_cy = _time(
                lambda: _kernels.lp_objective_gradient(residual, basis, args.p, 0.0),
                args.repeats,
            )
            f_py, _ = _kernels_py.lp_objective_gradient(residual, basis, args.p, 0.0)
            f_cy, _ = _kernels.lp_objective_gradient(residual, basis, args.p, 0.0)
            assert abs(f_py - f_cy) < 1e-12 * max(1.0, abs(f_py))
            row += f" {t_cy * 1e6:>12.1f} {t_py / t_cy:>7.2f}x"
        print(row)

        t_py = _time(
            lambda: _kernels_py.power_dual_values(residual, args.p - 1.0),
            args.repeats,
        )
        row = f"{n:>8} {'power_dual_values':>22} {t_py * 1e6:>12.1f}"
        if _kernels is not None:
            t_cy = _time(
                lambda: _kernels.power_dual_values(residual, args.p - 1.0),
                args.repeats,
            )
            row += f" {t_cy * 1e6:>12.1f} {t_py / t_cy:>7.2f}x"
        print(row)


if __name__ == "__main__":
    main()
