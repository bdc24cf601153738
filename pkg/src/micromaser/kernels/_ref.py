"""Vectorized numpy implementation of the density-entry kernels.

This is the pure-Python fallback backend and the readable reference for the
compiled twin in ``_fast.pyx``.  Both backends must produce the same arrays
to within a few ulp; the test suite pins that, and also pins agreement with
the scalar construction in `cascade`.

Inputs are the occupied photon numbers ``ns`` with ensemble weights ``ws``
and a grid of scaled times ``ts``; outputs are the four populations and the
single coherence of the reduced two-atom state at every time, already
summed over the ensemble.
"""

from __future__ import annotations

import numpy as np

__all__ = ["eg_entries", "ee_entries"]


def _bracket(m, chi, r, stark):
    b = chi * (2.0 * m + 1.0)
    if stark:
        b = b + (m * (r * r - 1.0) + 2.0 * r * r) / (2.0 * r)
    return b


def _upsilon(m, chi, r, stark):
    b = _bracket(m, chi, r, stark)
    return np.sqrt(b * b + (m + 1.0) * (m + 2.0))


def _surv(m, ts, chi, r, stark):
    """K_m(t) on the (m, t) grid: survival amplitude of the m-photon block."""
    b = _bracket(m, chi, r, stark)
    y = _upsilon(m, chi, r, stark)
    arg = y * ts
    return np.cos(arg) + 1j * (b / y) * np.sin(arg)


def _trans(m, ts, chi, r, stark):
    """R_{m+2}(t) on the (m, t) grid: two-photon emission amplitude."""
    y = _upsilon(m, chi, r, stark)
    g = np.sqrt((m + 1.0) * (m + 2.0))
    return -1j * (g / y) * np.sin(y * ts)


def _prepare(ns, ws, ts):
    ns = np.asarray(ns, dtype=np.int64)
    ws = np.asarray(ws, dtype=np.float64)
    ts = np.asarray(ts, dtype=np.float64)
    if ns.ndim != 1 or ws.shape != ns.shape:
        raise ValueError("ns and ws must be matching 1-d arrays")
    if np.any(ns < 0):
        raise ValueError("photon numbers must be non-negative")
    n = ns.astype(np.float64)[:, None]
    t = ts[None, :]
    return ns, ws, ts, n, t


def eg_entries(ns, ws, ts, chi, r, stark):
    """Excited-ground reduced state entries over a time grid.

    Returns (p11, p22, p33, p44, coh): populations of the basis
    (e1 g2, e1 e2, g1 g2, g1 e2) and the corner coherence rho_14.
    """
    ns, ws, ts, n, t = _prepare(ns, ws, ts)

    k_n = _surv(n, t, chi, r, stark)
    r_n2 = _trans(n, t, chi, r, stark)           # R_{n+2}

    low = ns < 2                                  # blocks without a lower rung
    m_safe = np.where(low[:, None], 0.0, n - 2.0)
    k_dn = _surv(m_safe, t, chi, r, stark)        # K_{n-2} where defined
    r_dn = _trans(m_safe, t, chi, r, stark)       # R_n where defined

    # ground atom idle phase for n < 2 (Kerr part vanishes there)
    idle_rate = (n * r) if stark else np.zeros_like(n)
    idle = np.exp(-1j * idle_rate * t)

    w_amp = np.where(low[:, None], k_n * idle.conj(), k_n * k_dn.conj())
    x_amp = np.where(low[:, None], 0.0, k_n * r_dn)
    y_amp = k_n.conj() * r_n2
    z_amp = r_n2 * r_n2

    if stark:
        rate = np.where(
            ns >= 2,
            2.0 * chi * (2.0 * ns - 1.0) + (r * r + 1.0) / r,
            np.where(ns == 1, 3.0 * chi + (1.0 - r * r) / (2.0 * r), chi + r),
        )
    else:
        rate = np.where(ns >= 2, 2.0 * chi * (2.0 * ns - 1.0), np.where(ns == 1, 3.0 * chi, chi))
    phase = np.exp(1j * rate[:, None] * t)

    p11 = ws @ np.abs(w_amp) ** 2
    p22 = ws @ np.abs(x_amp) ** 2
    p33 = ws @ np.abs(y_amp) ** 2
    p44 = ws @ np.abs(z_amp) ** 2
    coh = ws @ (phase * w_amp * z_amp.conj())
    return p11, p22, p33, p44, coh


def ee_entries(ns, ws, ts, chi, r, stark):
    """Excited-excited reduced state entries over a time grid.

    Returns (p11, p22, p33, p44, coh): populations of the basis
    (e1 e2, e1 g2, g1 e2, g1 g2) and the inner coherence rho_23.
    """
    ns, ws, ts, n, t = _prepare(ns, ws, ts)

    k_n = _surv(n, t, chi, r, stark)
    k_up = _surv(n + 2.0, t, chi, r, stark)
    r_n2 = _trans(n, t, chi, r, stark)            # R_{n+2}
    r_n4 = _trans(n + 2.0, t, chi, r, stark)      # R_{n+4}

    h_amp = k_n * k_n
    t_amp = k_n * r_n2
    j_amp = k_up * r_n2
    v_amp = r_n2 * r_n4

    rate = 2.0 * chi * (2.0 * ns + 3.0)
    if stark:
        rate = rate + (r * r + 1.0) / r
    phase = np.exp(1j * rate[:, None] * t)

    p11 = ws @ np.abs(h_amp) ** 2
    p22 = ws @ np.abs(t_amp) ** 2
    p33 = ws @ np.abs(j_amp) ** 2
    p44 = ws @ np.abs(v_amp) ** 2
    coh = ws @ (phase * t_amp * j_amp.conj())
    return p11, p22, p33, p44, coh
