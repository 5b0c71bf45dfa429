"""Vectorized NumPy implementation of the Monte Carlo sampling kernel."""

from __future__ import annotations

import numpy as np


def rho_an_samples(
    phi_b0: np.ndarray,
    phi_e0: np.ndarray,
    range_coef_b: float,
    range_coef_e: float,
    k: np.ndarray,
    z: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    """Per-trial |h_E^H h_B|^2 and |h_E^H w|^2 for one (Bob, Eve) geometry.

    Parameters
    ----------
    phi_b0, phi_e0 : (N,) float
        Allocation-independent phase parts, -b_n * (2*pi/c) * f_c * d * cos(theta).
    range_coef_b, range_coef_e : float
        Allocation coefficients (2*pi/c) * df * R, so that the element phase
        is phi0[n] + coef * k[t, n].
    k : (T, N) or (1, N) float
        Frequency multipliers per trial (a single row is broadcast, used for
        the deterministic schemes).
    z : (T, 2N) float
        Standard normals seeding the artificial noise: row t holds the N real
        parts then the N imaginary parts of the Gaussian vector z_t.  The
        noise vector w_t is the unit-norm projection of z_t onto the
        complement of h_B, and |h_E^H w|^2 is evaluated through the exact
        algebraic identity

            |h_E^H w|^2 = |h_E^H z - rho (h_B^H z)|^2 / (||z||^2 - |h_B^H z|^2),

        which equals building w explicitly up to rounding.  The identity is
        invariant to the overall scale of z, so the 1/sqrt(2) of the complex
        standard normal convention is omitted.

    Returns
    -------
    (T,) float arrays ``abs_rho_sq`` and ``an_gain``.
    """
    n = phi_b0.shape[0]
    psi_b = phi_b0 + range_coef_b * k
    psi_e = phi_e0 + range_coef_e * k
    h_b = np.exp(1j * psi_b)
    h_e = np.exp(1j * psi_e)
    zc = z[:, :n] + 1j * z[:, n:]

    rho = np.sum(np.conj(h_e) * h_b, axis=1) / n
    if rho.shape[0] == 1 and zc.shape[0] > 1:
        rho = np.broadcast_to(rho, (zc.shape[0],))
        h_b = np.broadcast_to(h_b, zc.shape)
        h_e = np.broadcast_to(h_e, zc.shape)
    zb = np.sum(np.conj(h_b) * zc, axis=1) / np.sqrt(n)
    ze = np.sum(np.conj(h_e) * zc, axis=1) / np.sqrt(n)
    znorm_sq = np.sum(z * z, axis=1)

    abs_rho_sq = np.abs(rho) ** 2
    an_gain = np.abs(ze - rho * zb) ** 2 / (znorm_sq - np.abs(zb) ** 2)
    return abs_rho_sq, an_gain
