"""Pure-numpy implementations of the hot inner loops.

Kept signature-compatible with the compiled extension so either backend can
be selected at import time.
"""

import numpy as np


def lp_objective_gradient(residual, basis, p, eps):
    """Smoothed L^p objective and its complex coefficient gradient.

    residual: complex array of length N, r = 1 - basis @ c.
    basis:    complex (N, m) matrix, column j holds zeta^j * f(zeta).
    Returns (F, g) with F = mean (|r|^2 + eps^2)^(p/2) and
    g_j = dF/dx_j + i dF/dy_j = -p * mean(w^((p-2)/2) * r * conj(basis_j)).
    """
    w = residual.real * residual.real + residual.imag * residual.imag + eps * eps
    f_val = float(np.mean(w ** (0.5 * p)))
    scale = w ** (0.5 * (p - 2.0)) * residual
    grad = (-p / residual.shape[0]) * (basis.conj().T @ scale)
    return f_val, grad


def power_dual_values(values, s):
    """|v|^(s-1) * conj(v) pointwise, with 0 wherever v = 0."""
    mag = np.abs(values)
    out = np.zeros_like(values)
    nz = mag > 0.0
    out[nz] = mag[nz] ** (s - 1.0) * np.conj(values[nz])
    return out
