"""Artificial-noise beamforming, link SNR/SINR, and received-symbol synthesis.

The transmitted vector is s = sqrt(alpha*P_s) h_B x + sqrt((1-alpha)*P_s) w,
with the artificial-noise vector w drawn in the null space of Bob's steering
vector: w = (I - h_B h_B^H) z / ||(I - h_B h_B^H) z||, z ~ CN(0, I_N).
Noise powers are normalized so sigma_B^2 = 1, hence P_s = mu_b and Eve's
noise power equals beta; only the ratios ever enter the formulas.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .arraymodel import ArrayConfig, Location, SteeringVector, steering_vector

__all__ = [
    "LinkParams",
    "AnVector",
    "make_artificial_noise",
    "snr_bob",
    "sinr_eve",
    "received_symbols",
    "complex_normal",
]


@dataclass(frozen=True)
class LinkParams:
    """Power split and noise budget: alpha in [0,1], mu_b = P_s/sigma_B^2 > 0,
    beta = sigma_E^2/sigma_B^2 > 0 (all linear)."""

    alpha: float
    mu_b: float
    beta: float = 1.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must be in [0, 1], got {self.alpha}")
        if self.mu_b <= 0:
            raise ValueError(f"mu_b must be positive, got {self.mu_b}")
        if self.beta <= 0:
            raise ValueError(f"beta must be positive, got {self.beta}")

    @classmethod
    def from_db(cls, alpha: float, mu_b_db: float, beta: float = 1.0) -> "LinkParams":
        return cls(alpha, 10.0 ** (mu_b_db / 10.0), beta)


@dataclass(frozen=True, eq=False)
class AnVector:
    """Unit-norm artificial-noise vector, orthogonal to the Bob steering
    vector it was built from."""

    entries: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        ent = np.asarray(self.entries, dtype=np.complex128)
        object.__setattr__(self, "entries", ent)
        norm = np.linalg.norm(ent)
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"artificial-noise vector must have unit norm, got {norm!r}")


def complex_normal(rng: np.random.Generator, n: int) -> np.ndarray:
    """n i.i.d. CN(0,1) values: 2n standard normals (reals first, then
    imaginaries), each component variance 1/2.  The draw layout is part of
    the reproducibility contract shared with the Monte Carlo kernels."""
    v = rng.standard_normal(2 * n)
    return (v[:n] + 1j * v[n:]) / np.sqrt(2.0)


def make_artificial_noise(h_b: SteeringVector, rng: np.random.Generator) -> AnVector:
    """Draw z ~ CN(0, I_N), project onto the complement of h_b, normalize."""
    h = h_b.entries
    n = h.size
    while True:
        z = complex_normal(rng, n)
        projected = z - h * np.vdot(h, z)
        norm = np.linalg.norm(projected)
        if norm >= 1e-12:  # zero-probability degenerate draw: retry
            return AnVector(projected / norm)


def snr_bob(params: LinkParams) -> float:
    """Bob's SNR alpha*mu_b; the AN term vanishes at Bob by construction."""
    return params.alpha * params.mu_b


def sinr_eve(h_e: SteeringVector, h_b: SteeringVector, w: AnVector, params: LinkParams) -> float:
    """Eve's SINR: alpha*mu_b*|h_E^H h_B|^2 / ((1-alpha)*mu_b*|h_E^H w|^2 + beta)."""
    rho_sq = abs(np.vdot(h_e.entries, h_b.entries)) ** 2
    an_sq = abs(np.vdot(h_e.entries, w.entries)) ** 2
    return params.alpha * params.mu_b * rho_sq / ((1.0 - params.alpha) * params.mu_b * an_sq + params.beta)


def received_symbols(
    symbols,
    loc: Location,
    h_b: SteeringVector,
    cfg: ArrayConfig,
    alloc,
    params: LinkParams,
    rng: np.random.Generator,
    *,
    side: str = "eve",
    fixed_an: AnVector | None = None,
    include_noise: bool = True,
) -> np.ndarray:
    """Complex baseband samples observed at ``loc`` for a symbol sequence.

    Per symbol: sqrt(alpha*P_s) * h^H(loc) h_B * x
                + sqrt((1-alpha)*P_s) * h^H(loc) w + n,
    with P_s = mu_b, a fresh AN vector per symbol (dynamic transmission)
    unless ``fixed_an`` is given, and noise variance 1 on the Bob side or
    beta on the Eve side.  ``include_noise=False`` suppresses the additive
    noise for constellation inspection.
    """
    x = np.asarray(symbols, dtype=np.complex128)
    if x.size == 0:
        return np.empty(0, dtype=np.complex128)
    if side not in ("bob", "eve"):
        raise ValueError(f"side must be 'bob' or 'eve', got {side!r}")
    mean_power = float(np.mean(np.abs(x) ** 2))
    if abs(mean_power - 1.0) > 0.1:
        warnings.warn(
            f"constellation mean power {mean_power:.3f} deviates from the unit-power "
            "convention E[|x|^2] = 1",
            stacklevel=2,
        )

    h_loc = steering_vector(loc, cfg, alloc).entries
    gain = np.vdot(h_loc, h_b.entries)
    sig_scale = np.sqrt(params.alpha * params.mu_b)
    an_scale = np.sqrt((1.0 - params.alpha) * params.mu_b)
    sigma = 1.0 if side == "bob" else np.sqrt(params.beta)

    out = np.empty(x.size, dtype=np.complex128)
    for i, sym in enumerate(x):
        w = fixed_an if fixed_an is not None else make_artificial_noise(h_b, rng)
        an_term = an_scale * np.vdot(h_loc, w.entries)
        noise = sigma * complex_normal(rng, 1)[0] if include_noise else 0.0
        out[i] = sig_scale * gain * sym + an_term + noise
    return out
