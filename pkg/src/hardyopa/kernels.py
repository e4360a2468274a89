"""Backend selection for the hot inner loops.

Prefers the compiled extension when it is built; falls back to numpy.
Set HARDY_OPA_BACKEND=python to force the fallback (e.g. for benchmarking).
"""

import os

from . import _kernels_py

if os.environ.get("HARDY_OPA_BACKEND", "").lower() == "python":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

lp_objective_gradient = _impl.lp_objective_gradient
power_dual_values = _impl.power_dual_values
