# cython: language_level=3
"""Compiled twin of the reference kernels in ``_ref``.

Same contract as ``_ref.eg_entries`` / ``_ref.ee_entries``: occupied photon
numbers with ensemble weights, a scaled-time grid, and the interaction
parameters in; ensemble-summed populations and the corner coherence out.
Scalar loops with the per-photon-number constants hoisted out of the inner
time loop.  Must agree with the reference backend to a few ulp.
"""

import numpy as np

from libc.math cimport cos, sin, sqrt
from libc.stdint cimport int64_t

__all__ = ["eg_entries", "ee_entries"]


cdef inline double _bracket(double m, double chi, double r, bint stark) noexcept nogil:
    cdef double b = chi * (2.0 * m + 1.0)
    if stark:
        b = b + (m * (r * r - 1.0) + 2.0 * r * r) / (2.0 * r)
    return b


cdef inline double complex _cis(double x) noexcept nogil:
    return cos(x) + 1j * sin(x)


cdef inline double _abs2(double complex z) noexcept nogil:
    return z.real * z.real + z.imag * z.imag


def _prepare(ns, ws, ts):
    ns_arr = np.ascontiguousarray(ns, dtype=np.int64)
    ws_arr = np.ascontiguousarray(ws, dtype=np.float64)
    ts_arr = np.ascontiguousarray(ts, dtype=np.float64)
    if ns_arr.ndim != 1 or ws_arr.shape != ns_arr.shape:
        raise ValueError("ns and ws must be matching 1-d arrays")
    if np.any(ns_arr < 0):
        raise ValueError("photon numbers must be non-negative")
    return ns_arr, ws_arr, ts_arr


def eg_entries(ns, ws, ts, double chi, double r, bint stark):
    """Excited-ground reduced state entries over a time grid.

    Returns (p11, p22, p33, p44, coh): populations of the basis
    (e1 g2, e1 e2, g1 g2, g1 e2) and the corner coherence rho_14.
    """
    ns_arr, ws_arr, ts_arr = _prepare(ns, ws, ts)

    cdef Py_ssize_t nn = ns_arr.shape[0]
    cdef Py_ssize_t nt = ts_arr.shape[0]
    p11 = np.zeros(nt)
    p22 = np.zeros(nt)
    p33 = np.zeros(nt)
    p44 = np.zeros(nt)
    coh = np.zeros(nt, dtype=np.complex128)

    cdef const int64_t[::1] nv = ns_arr
    cdef const double[::1] wv = ws_arr
    cdef const double[::1] tv = ts_arr
    cdef double[::1] o11 = p11
    cdef double[::1] o22 = p22
    cdef double[::1] o33 = p33
    cdef double[::1] o44 = p44
    cdef double complex[::1] oc = coh

    cdef Py_ssize_t i, j
    cdef bint low
    cdef double n, w, b_n, y_n, g_n, b_d, y_d, g_d, idle_rate, rate, t, sn, sd
    cdef double complex k_n, r_n2, k_dn, r_dn, w_amp, x_amp, y_amp, z_amp

    with nogil:
        for i in range(nn):
            n = <double> nv[i]
            w = wv[i]
            low = nv[i] < 2
            b_n = _bracket(n, chi, r, stark)
            g_n = sqrt((n + 1.0) * (n + 2.0))
            y_n = sqrt(b_n * b_n + (n + 1.0) * (n + 2.0))
            idle_rate = 0.0
            b_d = 0.0
            g_d = 0.0
            y_d = 1.0
            if low:
                # ground atom below the two-photon rung only accumulates the
                # linear part of the level shift
                if stark:
                    idle_rate = n * r
            else:
                b_d = _bracket(n - 2.0, chi, r, stark)
                g_d = sqrt((n - 1.0) * n)
                y_d = sqrt(b_d * b_d + (n - 1.0) * n)
            if nv[i] >= 2:
                rate = 2.0 * chi * (2.0 * n - 1.0)
                if stark:
                    rate = rate + (r * r + 1.0) / r
            elif nv[i] == 1:
                rate = 3.0 * chi
                if stark:
                    rate = rate + (1.0 - r * r) / (2.0 * r)
            else:
                rate = chi
                if stark:
                    rate = rate + r

            for j in range(nt):
                t = tv[j]
                sn = sin(y_n * t)
                k_n = cos(y_n * t) + 1j * (b_n / y_n) * sn
                r_n2 = -1j * (g_n / y_n) * sn
                if low:
                    w_amp = k_n * _cis(idle_rate * t)
                    x_amp = 0.0
                else:
                    sd = sin(y_d * t)
                    k_dn = cos(y_d * t) + 1j * (b_d / y_d) * sd
                    r_dn = -1j * (g_d / y_d) * sd
                    w_amp = k_n * k_dn.conjugate()
                    x_amp = k_n * r_dn
                y_amp = k_n.conjugate() * r_n2
                z_amp = r_n2 * r_n2
                o11[j] += w * _abs2(w_amp)
                o22[j] += w * _abs2(x_amp)
                o33[j] += w * _abs2(y_amp)
                o44[j] += w * _abs2(z_amp)
                oc[j] += w * _cis(rate * t) * w_amp * z_amp.conjugate()

    return p11, p22, p33, p44, coh


def ee_entries(ns, ws, ts, double chi, double r, bint stark):
    """Excited-excited reduced state entries over a time grid.

    Returns (p11, p22, p33, p44, coh): populations of the basis
    (e1 e2, e1 g2, g1 e2, g1 g2) and the inner coherence rho_23.
    """
    ns_arr, ws_arr, ts_arr = _prepare(ns, ws, ts)

    cdef Py_ssize_t nn = ns_arr.shape[0]
    cdef Py_ssize_t nt = ts_arr.shape[0]
    p11 = np.zeros(nt)
    p22 = np.zeros(nt)
    p33 = np.zeros(nt)
    p44 = np.zeros(nt)
    coh = np.zeros(nt, dtype=np.complex128)

    cdef const int64_t[::1] nv = ns_arr
    cdef const double[::1] wv = ws_arr
    cdef const double[::1] tv = ts_arr
    cdef double[::1] o11 = p11
    cdef double[::1] o22 = p22
    cdef double[::1] o33 = p33
    cdef double[::1] o44 = p44
    cdef double complex[::1] oc = coh

    cdef Py_ssize_t i, j
    cdef double n, w, b_n, y_n, g_n, b_u, y_u, g_u, rate, t, sn, su
    cdef double complex k_n, k_up, r_n2, r_n4, h_amp, t_amp, j_amp, v_amp

    with nogil:
        for i in range(nn):
            n = <double> nv[i]
            w = wv[i]
            b_n = _bracket(n, chi, r, stark)
            g_n = sqrt((n + 1.0) * (n + 2.0))
            y_n = sqrt(b_n * b_n + (n + 1.0) * (n + 2.0))
            b_u = _bracket(n + 2.0, chi, r, stark)
            g_u = sqrt((n + 3.0) * (n + 4.0))
            y_u = sqrt(b_u * b_u + (n + 3.0) * (n + 4.0))
            rate = 2.0 * chi * (2.0 * n + 3.0)
            if stark:
                rate = rate + (r * r + 1.0) / r

            for j in range(nt):
                t = tv[j]
                sn = sin(y_n * t)
                su = sin(y_u * t)
                k_n = cos(y_n * t) + 1j * (b_n / y_n) * sn
                k_up = cos(y_u * t) + 1j * (b_u / y_u) * su
                r_n2 = -1j * (g_n / y_n) * sn
                r_n4 = -1j * (g_u / y_u) * su
                h_amp = k_n * k_n
                t_amp = k_n * r_n2
                j_amp = k_up * r_n2
                v_amp = r_n2 * r_n4
                o11[j] += w * _abs2(h_amp)
                o22[j] += w * _abs2(t_amp)
                o33[j] += w * _abs2(j_amp)
                o44[j] += w * _abs2(v_amp)
                oc[j] += w * _cis(rate * t) * t_amp * j_amp.conjugate()

    return p11, p22, p33, p44, coh
