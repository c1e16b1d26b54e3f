# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled power-iteration kernel for lp operator norms.

Twin of _kernels_py.power_iterate; the whole iterate loop runs in C so
the many-restart norm estimation stays cheap on small dense matrices.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport pow, sqrt

cnp.import_array()

BACKEND = "cython"


cdef inline double _cabs(double complex z) nogil:
    return sqrt(z.real * z.real + z.imag * z.imag)


cdef double _pnorm(double complex[::1] v, double p) nogil:
    cdef Py_ssize_t i
    cdef double acc = 0.0, m
    for i in range(v.shape[0]):
        m = _cabs(v[i])
        if m > 0.0:
            acc += pow(m, p)
    if acc == 0.0:
        return 0.0
    return pow(acc, 1.0 / p)


cdef void _dual_power(double complex[::1] v, double e, double complex[::1] out) nogil:
    cdef Py_ssize_t i
    cdef double m
    for i in range(v.shape[0]):
        m = _cabs(v[i])
        if m > 0.0:
            out[i] = (v[i] / m) * pow(m, e)
        else:
            out[i] = 0.0


def power_iterate(A, p, x0, max_iter, rel_tol):
    """See _kernels_py.power_iterate for the contract."""
    cdef cnp.ndarray[cnp.complex128_t, ndim=2, mode="c"] Am = \
        np.ascontiguousarray(A, dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] xv = \
        np.array(x0, dtype=np.complex128)
    cdef Py_ssize_t nrow = Am.shape[0], ncol = Am.shape[1]
    cdef double pp = float(p)
    if not 1.0 < pp < float("inf"):
        raise ValueError("power iteration needs 1 < p < inf; endpoints have closed forms")
    cdef double qq = pp / (pp - 1.0)
    cdef double tol = float(rel_tol)
    cdef long maxit = int(max_iter)

    cdef cnp.ndarray[cnp.complex128_t, ndim=1] y = np.zeros(nrow, dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] xi = np.zeros(nrow, dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] z = np.zeros(ncol, dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] bx = np.zeros(ncol, dtype=np.complex128)

    cdef double complex[:, ::1] Av = Am
    cdef double complex[::1] x = xv
    cdef double complex[::1] yv = y
    cdef double complex[::1] xiv = xi
    cdef double complex[::1] zv = z
    cdef double complex[::1] bxv = bx

    cdef double nx, est, best, prev, zq, inner, scale
    cdef double complex acc
    cdef Py_ssize_t i, j
    cdef long it = 0
    cdef bint converged = 0

    nx = _pnorm(x, pp)
    if nx == 0.0:
        return 0.0, xv, 0, True
    for i in range(ncol):
        x[i] = x[i] / nx

    best = 0.0
    prev = -1.0
    for i in range(ncol):
        bxv[i] = x[i]

    with nogil:
        while it < maxit:
            it += 1
            for i in range(nrow):
                acc = 0.0
                for j in range(ncol):
                    acc = acc + Av[i, j] * x[j]
                yv[i] = acc
            est = _pnorm(yv, pp)
            if est > best:
                best = est
                for i in range(ncol):
                    bxv[i] = x[i]
            if est == 0.0:
                converged = 1
                break
            _dual_power(yv, pp - 1.0, xiv)
            scale = pow(est, pp - 1.0)
            for i in range(nrow):
                xiv[i] = xiv[i] / scale
            for j in range(ncol):
                acc = 0.0
                for i in range(nrow):
                    acc = acc + Av[i, j].conjugate() * xiv[i]
                zv[j] = acc
            zq = _pnorm(zv, qq)
            inner = 0.0
            for j in range(ncol):
                inner += zv[j].real * x[j].real + zv[j].imag * x[j].imag
            if zq <= inner * (1.0 + tol) + 1e-300:
                converged = 1
                break
            _dual_power(zv, qq - 1.0, x)
            nx = _pnorm(x, pp)
            if nx == 0.0:
                converged = 1
                break
            for j in range(ncol):
                x[j] = x[j] / nx
            if prev >= 0.0 and (est - prev if est > prev else prev - est) <= tol * est:
                converged = 1
                break
            prev = est

    return best, bx, int(it), bool(converged)
