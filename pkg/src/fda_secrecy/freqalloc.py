"""Frequency-allocation schemes and their characteristic functions.

Four ways of assigning the per-element frequency multipliers k_n:

* ``pa``        -- k_n = 0 (classic phased array, no frequency diversity)
* ``lfda``      -- k_n = b_n (linear ramp across the aperture)
* ``rfda-cont`` -- k_n i.i.d. uniform on the interval [-M/2, M/2]
* ``rfda-disc`` -- k_n i.i.d. uniform on the M-point unit lattice
                   {-(M-1)/2, ..., (M-1)/2}

For the random schemes the range decorrelation is governed by the moment
generating function of k_n evaluated on the imaginary axis,
Phi(j*2*pi*p) = E[exp(-j*2*pi*k*p)]:

    continuous:  sin(M*pi*p) / (M*pi*p)
    discrete:    sin(M*pi*p) / (M*sin(pi*p))

Both are real (the distributions are symmetric) and bounded by 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .arraymodel import element_offsets

__all__ = [
    "SchemeKind",
    "AllocationScheme",
    "FrequencyAllocation",
    "draw_allocation",
    "draw_multipliers",
    "mgf_on_imaginary_axis",
    "dirichlet_kernel",
]

# Nearest-integer window inside which removable singularities are replaced
# by their analytic limit (avoids catastrophic cancellation in sin(pi*x)).
_SINGULARITY_EPS = 1e-9


class SchemeKind(enum.Enum):
    PA = "pa"
    LFDA = "lfda"
    RFDA_CONT = "rfda-cont"
    RFDA_DISC = "rfda-disc"

    @classmethod
    def from_name(cls, name: str) -> "SchemeKind":
        for kind in cls:
            if kind.value == name:
                return kind
        valid = ", ".join(k.value for k in cls)
        raise ValueError(f"unknown scheme {name!r}; expected one of: {valid}")


@dataclass(frozen=True)
class AllocationScheme:
    """A frequency-allocation law: the scheme kind plus bandwidth parameter M.

    M is required for the RFDA kinds (any positive real for the continuous
    one, an integer >= 2 for the discrete one) and must be omitted for the
    deterministic kinds.
    """

    kind: SchemeKind
    bandwidth_param: float | None = None

    def __post_init__(self) -> None:
        m = self.bandwidth_param
        if self.kind in (SchemeKind.RFDA_CONT, SchemeKind.RFDA_DISC):
            if m is None:
                raise ValueError(f"scheme {self.kind.value!r} requires the bandwidth parameter M")
            if m <= 0:
                raise ValueError(f"M must be positive, got {m}")
            if self.kind is SchemeKind.RFDA_DISC and (m != int(m) or m < 2):
                raise ValueError(f"M must be an integer >= 2 for rfda-disc, got {m}")
        elif m is not None:
            raise ValueError(f"scheme {self.kind.value!r} takes no bandwidth parameter")

    # Convenience constructors
    @classmethod
    def pa(cls) -> "AllocationScheme":
        return cls(SchemeKind.PA)

    @classmethod
    def lfda(cls) -> "AllocationScheme":
        return cls(SchemeKind.LFDA)

    @classmethod
    def rfda_cont(cls, m: float) -> "AllocationScheme":
        return cls(SchemeKind.RFDA_CONT, float(m))

    @classmethod
    def rfda_disc(cls, m: int) -> "AllocationScheme":
        return cls(SchemeKind.RFDA_DISC, float(m))

    @property
    def is_random(self) -> bool:
        return self.kind in (SchemeKind.RFDA_CONT, SchemeKind.RFDA_DISC)

    def support_bounds(self, n_elements: int) -> tuple[float, float]:
        """Closed interval that contains every admissible k_n."""
        if self.kind is SchemeKind.PA:
            return (0.0, 0.0)
        if self.kind is SchemeKind.LFDA:
            half = (n_elements - 1) / 2.0
            return (-half, half)
        m = float(self.bandwidth_param)
        if self.kind is SchemeKind.RFDA_CONT:
            return (-m / 2.0, m / 2.0)
        return (-(m - 1) / 2.0, (m - 1) / 2.0)


@dataclass(frozen=True, eq=False)
class FrequencyAllocation:
    """One realization of the multipliers k_0..k_{N-1} plus its generating scheme."""

    scheme: AllocationScheme
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "values", vals)
        if vals.ndim != 1 or vals.size < 2:
            raise ValueError("values must be a 1-D sequence of length >= 2")
        lo, hi = self.scheme.support_bounds(vals.size)
        if np.any(vals < lo) or np.any(vals > hi):
            raise ValueError(f"allocation values outside scheme support [{lo}, {hi}]")

    def __len__(self) -> int:
        return self.values.size


def draw_multipliers(scheme: AllocationScheme, shape, rng: np.random.Generator) -> np.ndarray:
    """Raw k_n draws with the given shape (trials x elements for Monte Carlo).

    Deterministic schemes consume nothing from the stream; the last axis is
    the element axis.  Continuous draws are uniform on [-M/2, M/2) (half-open,
    a measure-zero deviation from the closed support); discrete draws map
    uniform integers 0..M-1 onto the centered lattice.
    """
    shape = tuple(shape)
    n = shape[-1]
    if scheme.kind is SchemeKind.PA:
        return np.zeros(shape)
    if scheme.kind is SchemeKind.LFDA:
        return np.broadcast_to(element_offsets(n), shape).copy()
    m = float(scheme.bandwidth_param)
    if scheme.kind is SchemeKind.RFDA_CONT:
        return (rng.random(shape) - 0.5) * m
    return rng.integers(0, int(m), size=shape).astype(float) - (m - 1) / 2.0


def draw_allocation(scheme: AllocationScheme, n_elements: int, rng: np.random.Generator) -> FrequencyAllocation:
    """Draw one allocation of N multipliers (deterministic for pa/lfda)."""
    if n_elements < 2:
        raise ValueError(f"n_elements must be >= 2, got {n_elements}")
    return FrequencyAllocation(scheme, draw_multipliers(scheme, (n_elements,), rng))


def mgf_on_imaginary_axis(scheme: AllocationScheme, p):
    """Phi(j*2*pi*p) = E[exp(-j*2*pi*k*p)] for the scheme's k_n law.

    Accepts a scalar or array p and returns a real result of the same shape.
    Removable singularities (p = 0 for both kinds; integer p for the
    discrete lattice) are resolved to their analytic limits.
    """
    p_arr = np.asarray(p, dtype=float)
    if scheme.kind is SchemeKind.LFDA:
        raise ValueError("lfda multipliers are deterministic and have no MGF-based closed form")
    if scheme.kind is SchemeKind.PA:
        out = np.ones_like(p_arr)
        return float(out) if np.isscalar(p) else out
    m = float(scheme.bandwidth_param)
    if scheme.kind is SchemeKind.RFDA_CONT:
        out = np.sinc(m * p_arr)  # sin(M*pi*p)/(M*pi*p) with Phi(0)=1
    else:
        out = dirichlet_kernel(p_arr, int(m)) / m
    return float(out) if np.isscalar(p) else out


def dirichlet_kernel(x, n: int):
    """S_N(x) = sin(N*pi*x)/sin(pi*x) with integer singularities resolved.

    At integer x = m the limit is N*(-1)^((N-1)*m); the nearest-integer
    window is +/-1e-9.  |S_N(x)| <= N everywhere.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    x_arr = np.asarray(x, dtype=float)
    nearest = np.round(x_arr)
    at_integer = np.abs(x_arr - nearest) < _SINGULARITY_EPS
    denom = np.where(at_integer, 1.0, np.sin(np.pi * x_arr))
    regular = np.sin(n * np.pi * x_arr) / denom
    # (-1)^((N-1)*m) for integer m, without overflowing large exponents
    parity = np.where((np.abs(nearest * (n - 1)) % 2) == 1, -1.0, 1.0)
    out = np.where(at_integer, float(n) * parity, regular)
    return float(out) if np.isscalar(x) else out
