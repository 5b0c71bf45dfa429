"""Uniform linear array geometry, per-element phase shifts and steering vectors.

The array is a ULA of N elements with the phase reference at its geometric
center, element offsets b_n = n - (N-1)/2.  Element n transmits at
f_n = f_c + k_n * df, where the multipliers k_n come from a frequency
allocation (see :mod:`fda_secrecy.freqalloc`).  The phase shift of element n
towards a far-field point (theta, R) relative to the reference is

    exact:        (2*pi/c) * (-b_n f_c d cos(theta) + k_n df R
                              - b_n k_n df d cos(theta))
    approximate:  (2*pi/c) * (-b_n f_c d cos(theta) + k_n df R)

The approximate form drops the cross term, which is negligible whenever
N*df << f_c and d is on the order of the wavelength; it is the default and
is what every closed form in :mod:`fda_secrecy.secrecy` assumes.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

SPEED_OF_LIGHT = 299792458.0

__all__ = [
    "SPEED_OF_LIGHT",
    "ArrayConfig",
    "Location",
    "SteeringVector",
    "element_offset",
    "element_offsets",
    "phase_shift",
    "phase_shifts",
    "steering_vector",
    "cross_correlation",
]


@dataclass(frozen=True)
class ArrayConfig:
    """Physical description of the transmit array.

    Parameters
    ----------
    n_elements : int
        Number of elements N (>= 2).
    carrier_hz : float
        Central carrier frequency f_c in Hz.
    increment_hz : float
        Frequency increment df in Hz (>= 0).
    spacing_m : float, optional
        Element spacing d in meters.  Defaults to half the carrier
        wavelength, c / (2 f_c).
    wave_speed : float, optional
        Propagation speed in m/s; overridable for testing only.
    """

    n_elements: int
    carrier_hz: float
    increment_hz: float
    spacing_m: float | None = None
    wave_speed: float = SPEED_OF_LIGHT

    def __post_init__(self) -> None:
        if self.n_elements < 2:
            raise ValueError(f"n_elements must be >= 2, got {self.n_elements}")
        if self.carrier_hz <= 0:
            raise ValueError(f"carrier_hz must be positive, got {self.carrier_hz}")
        if self.increment_hz < 0:
            raise ValueError(f"increment_hz must be >= 0, got {self.increment_hz}")
        if self.wave_speed <= 0:
            raise ValueError(f"wave_speed must be positive, got {self.wave_speed}")
        if self.spacing_m is None:
            object.__setattr__(self, "spacing_m", self.wave_speed / (2.0 * self.carrier_hz))
        if self.spacing_m <= 0:
            raise ValueError(f"spacing_m must be positive, got {self.spacing_m}")
        if not self.far_field_ok:
            warnings.warn(
                f"N*df = {self.n_elements * self.increment_hz:.3g} Hz exceeds "
                f"f_c/10 = {self.carrier_hz / 10:.3g} Hz; the approximate phase "
                "model may be inaccurate",
                stacklevel=2,
            )

    @property
    def far_field_ok(self) -> bool:
        """True when N*df <= f_c/10, the validity regime of the phase model."""
        return self.n_elements * self.increment_hz <= self.carrier_hz / 10.0


@dataclass(frozen=True)
class Location:
    """Polar target coordinate relative to the array center.

    theta_rad is measured from the array axis, in [0, pi]; range_m > 0.
    """

    theta_rad: float
    range_m: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.theta_rad <= np.pi:
            raise ValueError(f"theta_rad must be in [0, pi], got {self.theta_rad}")
        if self.range_m <= 0:
            raise ValueError(f"range_m must be positive, got {self.range_m}")

    @classmethod
    def from_degrees(cls, theta_deg: float, range_m: float) -> "Location":
        return cls(float(np.deg2rad(theta_deg)), float(range_m))

    @property
    def theta_deg(self) -> float:
        return float(np.rad2deg(self.theta_rad))


@dataclass(frozen=True, eq=False)
class SteeringVector:
    """Length-N unit-norm complex steering vector."""

    entries: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        ent = np.asarray(self.entries, dtype=np.complex128)
        object.__setattr__(self, "entries", ent)
        if ent.ndim != 1 or ent.size < 2:
            raise ValueError("entries must be a 1-D vector of length >= 2")
        norm = np.linalg.norm(ent)
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"steering vector must have unit norm, got {norm!r}")

    def __len__(self) -> int:
        return self.entries.size


def element_offsets(n_elements: int) -> np.ndarray:
    """Offsets b_n = n - (N-1)/2 for n = 0..N-1, symmetric about zero."""
    if n_elements < 1:
        raise ValueError(f"n_elements must be >= 1, got {n_elements}")
    return np.arange(n_elements, dtype=float) - (n_elements - 1) / 2.0


def element_offset(n: int, n_elements: int) -> float:
    if not 0 <= n < n_elements:
        raise IndexError(f"element index {n} out of range for N={n_elements}")
    return float(n) - (n_elements - 1) / 2.0


def _check_alloc(alloc, cfg: ArrayConfig) -> np.ndarray:
    values = np.asarray(alloc.values, dtype=float)
    if values.shape != (cfg.n_elements,):
        raise ValueError(
            f"allocation has {values.size} values, array has {cfg.n_elements} elements"
        )
    return values


def phase_shifts(loc: Location, cfg: ArrayConfig, alloc, mode: str = "approximate") -> np.ndarray:
    """All N per-element phase shifts (radians) relative to the reference."""
    k = _check_alloc(alloc, cfg)
    b = element_offsets(cfg.n_elements)
    scale = 2.0 * np.pi / cfg.wave_speed
    cos_t = np.cos(loc.theta_rad)
    psi = scale * (-b * cfg.carrier_hz * cfg.spacing_m * cos_t + k * cfg.increment_hz * loc.range_m)
    if mode == "exact":
        psi = psi - scale * b * k * cfg.increment_hz * cfg.spacing_m * cos_t
    elif mode != "approximate":
        raise ValueError(f"mode must be 'exact' or 'approximate', got {mode!r}")
    return psi


def phase_shift(n: int, loc: Location, cfg: ArrayConfig, alloc, mode: str = "approximate") -> float:
    if not 0 <= n < cfg.n_elements:
        raise IndexError(f"element index {n} out of range for N={cfg.n_elements}")
    return float(phase_shifts(loc, cfg, alloc, mode)[n])


def steering_vector(loc: Location, cfg: ArrayConfig, alloc, mode: str = "approximate") -> SteeringVector:
    """Normalized steering vector h(theta, R): entry n is exp(j*psi_n)/sqrt(N)."""
    psi = phase_shifts(loc, cfg, alloc, mode)
    return SteeringVector(np.exp(1j * psi) / np.sqrt(cfg.n_elements))


def cross_correlation(loc_e: Location, loc_b: Location, cfg: ArrayConfig, alloc) -> complex:
    """Cross-correlation h^H(loc_e) h(loc_b) of two approximate-mode steering vectors."""
    h_e = steering_vector(loc_e, cfg, alloc).entries
    h_b = steering_vector(loc_b, cfg, alloc).entries
    return complex(np.vdot(h_e, h_b))
