"""Artificial-noise directional modulation over random frequency diverse
arrays: steering-vector models, secrecy-capacity estimation (Monte Carlo and
closed form), and optimal signal/noise power allocation."""

__version__ = "0.1.0"

from .arraymodel import (
    SPEED_OF_LIGHT,
    ArrayConfig,
    Location,
    SteeringVector,
    cross_correlation,
    element_offset,
    element_offsets,
    phase_shift,
    phase_shifts,
    steering_vector,
)
from .beamform import AnVector, LinkParams, make_artificial_noise, received_symbols, sinr_eve, snr_bob
from .freqalloc import (
    AllocationScheme,
    FrequencyAllocation,
    SchemeKind,
    dirichlet_kernel,
    draw_allocation,
    mgf_on_imaginary_axis,
)
from .powalloc import AlphaResult, AlphaSearchSpec, optimize_alpha
from .secrecy import (
    EveRegion,
    NumericError,
    OffsetPair,
    SecrecyReport,
    average_over_region,
    capacity_lfda,
    capacity_pa,
    esc_asymptotic,
    esc_lower_bound,
    esc_monte_carlo,
    mean_rho_sq,
    offsets,
    projector_trace_eta,
    shannon_capacity,
)

__all__ = [
    "SPEED_OF_LIGHT",
    "ArrayConfig",
    "Location",
    "SteeringVector",
    "AllocationScheme",
    "FrequencyAllocation",
    "SchemeKind",
    "LinkParams",
    "AnVector",
    "OffsetPair",
    "SecrecyReport",
    "EveRegion",
    "AlphaSearchSpec",
    "AlphaResult",
    "NumericError",
    "element_offset",
    "element_offsets",
    "phase_shift",
    "phase_shifts",
    "steering_vector",
    "cross_correlation",
    "draw_allocation",
    "mgf_on_imaginary_axis",
    "dirichlet_kernel",
    "make_artificial_noise",
    "snr_bob",
    "sinr_eve",
    "received_symbols",
    "shannon_capacity",
    "offsets",
    "projector_trace_eta",
    "mean_rho_sq",
    "esc_lower_bound",
    "esc_asymptotic",
    "esc_monte_carlo",
    "capacity_pa",
    "capacity_lfda",
    "average_over_region",
    "optimize_alpha",
]
