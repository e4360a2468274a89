# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops for the L^p solvers.

Mirrors _kernels_py; selected automatically when the extension is built.
The weight w^((p-2)/2) is computed once per node (with closed forms for the
exponents the solvers actually use) and reused for the objective term
w^(p/2) = w * w^((p-2)/2).
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport pow, sqrt
from libc.stdlib cimport free, malloc

cnp.import_array()


cdef inline double _weight_scale(double w, double p) noexcept nogil:
    # w^((p-2)/2) with fast paths for the solver's standard exponents
    if p == 2.0:
        return 1.0
    if p == 3.0:
        return sqrt(w)
    if p == 4.0:
        return w
    if p == 1.5:
        return 1.0 / sqrt(sqrt(w))
    return pow(w, 0.5 * (p - 2.0))


def lp_objective_gradient(
    cnp.complex128_t[::1] residual,
    cnp.complex128_t[:, ::1] basis,
    double p,
    double eps,
):
    cdef Py_ssize_t n = residual.shape[0]
    cdef Py_ssize_t m = basis.shape[1]
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] grad = np.empty(m, dtype=np.complex128)
    cdef double f_val = 0.0
    cdef double eps2 = eps * eps
    cdef double w, wscale, sr, si, br, bi
    cdef double complex r
    cdef Py_ssize_t i, j
    cdef double *acc = <double *> malloc(2 * m * sizeof(double))
    if acc == NULL:
        raise MemoryError()

    try:
        with nogil:
            for j in range(2 * m):
                acc[j] = 0.0
            for i in range(n):
                r = residual[i]
                w = r.real * r.real + r.imag * r.imag + eps2
                wscale = _weight_scale(w, p)
                f_val += wscale * w
                sr = wscale * r.real
                si = wscale * r.imag
                for j in range(m):
                    # s * conj(basis[i, j]) accumulated as real/imag parts
                    br = basis[i, j].real
                    bi = basis[i, j].imag
                    acc[2 * j] += sr * br + si * bi
                    acc[2 * j + 1] += si * br - sr * bi
        f_val /= n
        factor = -p / n
        for j in range(m):
            grad[j] = factor * (acc[2 * j] + 1j * acc[2 * j + 1])
    finally:
        free(acc)
    return f_val, grad


def power_dual_values(cnp.complex128_t[::1] values, double s):
    cdef Py_ssize_t n = values.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] out = np.zeros(n, dtype=np.complex128)
    cdef cnp.complex128_t[::1] oview = out
    cdef double w, scale
    cdef double complex v
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            v = values[i]
            w = v.real * v.real + v.imag * v.imag
            if w > 0.0:
                # |v|^(s-1) = w^((s-1)/2), one pow instead of sqrt + pow
                if s == 1.0:
                    scale = 1.0
                elif s == 2.0:
                    scale = sqrt(w)
                elif s == 3.0:
                    scale = w
                elif s == 0.5:
                    scale = 1.0 / sqrt(sqrt(w))
                else:
                    scale = pow(w, 0.5 * (s - 1.0))
                oview[i].real = scale * v.real
                oview[i].imag = -scale * v.imag
    return out
