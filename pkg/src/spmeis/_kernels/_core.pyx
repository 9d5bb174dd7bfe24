# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementation of the hot numerical kernels.

Branch boundaries and arithmetic must stay in lock-step with
``spmeis._kernels._pure``.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef extern from "complex.h" nogil:
    double complex cexp(double complex)
    double complex csqrt(double complex)
    double cabs(double complex)
    double creal(double complex)
    double cimag(double complex)

cdef double SERIES_BOUND = 1e-4
cdef double SATURATION_BOUND = 20.0


def backend_name():
    return "compiled"


cdef inline double complex _f_one(double complex s, double tau) noexcept nogil:
    cdef double complex z = s * tau
    cdef double complex x, e, th
    if cabs(z) < SERIES_BOUND:
        return -1.0 / s - tau / 15.0 + tau * z / 525.0 - 2.0 * tau * (z * z) / 23625.0
    x = csqrt(z)
    if creal(x) > SATURATION_BOUND:
        return (tau / 3.0) / (1.0 - x)
    e = cexp(-2.0 * x)
    th = (1.0 - e) / (1.0 + e)
    return (tau / 3.0) * th / (th - x)


def f_eval(s, double tau):
    """Evaluate f(s, tau) for a 1-D complex array ``s`` and scalar ``tau > 0``."""
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] sv = np.ascontiguousarray(
        s, dtype=np.complex128)
    cdef Py_ssize_t n = sv.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] out = np.empty(n, dtype=np.complex128)
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = _f_one(sv[i], tau)
    return out


def loss_spectrum(omega, z_re, z_im, double beta_plus, double beta_minus,
                  double r_ct, double tau_plus, double tau_minus):
    """Sum of squared real and imaginary impedance residuals for one spectrum."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] w = np.ascontiguousarray(
        omega, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] zr = np.ascontiguousarray(
        z_re, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] zi = np.ascontiguousarray(
        z_im, dtype=np.float64)
    cdef Py_ssize_t n = w.shape[0]
    cdef Py_ssize_t i
    cdef double complex s, fp, fm, model
    cdef double d_re, d_im, acc = 0.0
    for i in range(n):
        s = w[i] * 1j
        fp = _f_one(s, tau_plus)
        fm = _f_one(s, tau_minus)
        model = (-beta_plus * fp + beta_minus * fm) + r_ct
        d_re = zr[i] - creal(model)
        d_im = zi[i] - cimag(model)
        acc += d_re * d_re + d_im * d_im
    return acc


def loss_grid(omega, z_re, z_im, double beta_plus, double beta_minus,
              double r_ct, tau_plus_axis, tau_minus_axis, out):
    """Accumulate per-cell squared-residual sums for one spectrum into ``out``."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] w = np.ascontiguousarray(
        omega, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] zr = np.ascontiguousarray(
        z_re, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] zi = np.ascontiguousarray(
        z_im, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] tp = np.ascontiguousarray(
        tau_plus_axis, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] tm = np.ascontiguousarray(
        tau_minus_axis, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] acc = out
    cdef Py_ssize_t n = w.shape[0], n_p = tp.shape[0], n_m = tm.shape[0]
    cdef Py_ssize_t a, b, i
    cdef double complex s, resid
    cdef double d_re, d_im, cell
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] fp = np.empty((n_p, n), dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] fm = np.empty((n_m, n), dtype=np.complex128)
    for a in range(n_p):
        for i in range(n):
            fp[a, i] = _f_one(w[i] * 1j, tp[a])
    for b in range(n_m):
        for i in range(n):
            fm[b, i] = _f_one(w[i] * 1j, tm[b])
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] u = np.empty((n_p, n), dtype=np.complex128)
    for a in range(n_p):
        for i in range(n):
            u[a, i] = (zr[i] + 1j * zi[i] - r_ct) + beta_plus * fp[a, i]
    for a in range(n_p):
        for b in range(n_m):
            cell = 0.0
            for i in range(n):
                resid = u[a, i] - beta_minus * fm[b, i]
                d_re = creal(resid)
                d_im = cimag(resid)
                cell += d_re * d_re + d_im * d_im
            acc[a, b] += cell
