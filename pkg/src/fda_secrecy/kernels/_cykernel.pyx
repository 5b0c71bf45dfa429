# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Fused Cython implementation of the Monte Carlo sampling kernel.

Same contract as :func:`fda_secrecy.kernels.numpy_backend.rho_an_samples`;
see that module for the math.  The loops here fuse phase evaluation, the
null-space projection identity and the reductions, avoiding the fallback's
intermediate (T, N) complex arrays.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, sin, sqrt

cnp.import_array()


def rho_an_samples(
    double[::1] phi_b0,
    double[::1] phi_e0,
    double range_coef_b,
    double range_coef_e,
    double[:, ::1] k,
    double[:, ::1] z,
):
    cdef Py_ssize_t trials = z.shape[0]
    cdef Py_ssize_t n = phi_b0.shape[0]
    cdef Py_ssize_t k_rows = k.shape[0]
    if phi_e0.shape[0] != n or k.shape[1] != n or z.shape[1] != 2 * n:
        raise ValueError("kernel input shapes are inconsistent")
    if k_rows != trials and k_rows != 1:
        raise ValueError("k must have one row or one row per trial")

    out_rho = np.empty(trials, dtype=np.float64)
    out_gain = np.empty(trials, dtype=np.float64)
    cdef double[::1] rho_sq = out_rho
    cdef double[::1] gain = out_gain

    cdef double inv_n = 1.0 / n
    cdef double inv_sqrt_n = 1.0 / sqrt(<double> n)
    cdef Py_ssize_t t, j, krow
    cdef double kk, pb, pe, cb, sb, ce, se, zr, zi
    cdef double rho_re, rho_im, zb_re, zb_im, ze_re, ze_im, znorm
    cdef double num_re, num_im, denom

    with nogil:
        _sample_loop(phi_b0, phi_e0, range_coef_b, range_coef_e, k, z,
                     rho_sq, gain, trials, n, k_rows, inv_n, inv_sqrt_n)
    return out_rho, out_gain


cdef void _sample_loop(
    double[::1] phi_b0,
    double[::1] phi_e0,
    double range_coef_b,
    double range_coef_e,
    double[:, ::1] k,
    double[:, ::1] z,
    double[::1] rho_sq,
    double[::1] gain,
    Py_ssize_t trials,
    Py_ssize_t n,
    Py_ssize_t k_rows,
    double inv_n,
    double inv_sqrt_n,
) noexcept nogil:
    cdef Py_ssize_t t, j, krow
    cdef double kk, pb, pe, cb, sb, ce, se, zr, zi
    cdef double rho_re, rho_im, zb_re, zb_im, ze_re, ze_im, znorm
    cdef double num_re, num_im, denom

    for t in range(trials):
        krow = t if k_rows > 1 else 0
        rho_re = rho_im = 0.0
        zb_re = zb_im = ze_re = ze_im = 0.0
        znorm = 0.0
        for j in range(n):
            kk = k[krow, j]
            pb = phi_b0[j] + range_coef_b * kk
            pe = phi_e0[j] + range_coef_e * kk
            cb = cos(pb); sb = sin(pb)
            ce = cos(pe); se = sin(pe)
            # rho += conj(e^{j pe}) * e^{j pb}
            rho_re += ce * cb + se * sb
            rho_im += ce * sb - se * cb
            zr = z[t, j]
            zi = z[t, n + j]
            # zb += conj(e^{j pb}) * (zr + j zi)
            zb_re += cb * zr + sb * zi
            zb_im += cb * zi - sb * zr
            ze_re += ce * zr + se * zi
            ze_im += ce * zi - se * zr
            znorm += zr * zr + zi * zi
        rho_re *= inv_n
        rho_im *= inv_n
        zb_re *= inv_sqrt_n
        zb_im *= inv_sqrt_n
        ze_re *= inv_sqrt_n
        ze_im *= inv_sqrt_n
        rho_sq[t] = rho_re * rho_re + rho_im * rho_im
        num_re = ze_re - (rho_re * zb_re - rho_im * zb_im)
        num_im = ze_im - (rho_re * zb_im + rho_im * zb_re)
        denom = znorm - (zb_re * zb_re + zb_im * zb_im)
        gain[t] = (num_re * num_re + num_im * num_im) / denom
