"""Optimal signal/noise power split maximizing region-averaged secrecy.

The objective C_bar(alpha) is evaluated on a coarse grid over [0, 1] (it is
smooth but not proven unimodal, so the grid guards against multimodality);
for the closed-form objective the best bracket is then refined by
golden-section search.  The Monte Carlo objective reuses one set of common
random numbers across all alpha values, which keeps the curve smooth and
the grid argmax stable, but is too noisy to refine further.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arraymodel import ArrayConfig, Location
from .beamform import LinkParams
from .freqalloc import AllocationScheme
from .secrecy import (
    EveRegion,
    _closed_form_over_cells,
    _region_grid,
    esc_curve_from_samples,
    region_samples,
)

__all__ = ["AlphaSearchSpec", "AlphaResult", "optimize_alpha", "OBJECTIVES"]

OBJECTIVES = ("avg_esc_mc", "avg_esc_lb")

_INV_PHI = (np.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class AlphaSearchSpec:
    """How to search for the optimal power-allocation factor."""

    objective: str = "avg_esc_lb"
    grid_step: float = 0.01
    refine: bool = True
    refine_tol: float = 1e-4

    def __post_init__(self) -> None:
        if self.objective not in OBJECTIVES:
            raise ValueError(f"objective must be one of {OBJECTIVES}, got {self.objective!r}")
        if not 0.0 < self.grid_step <= 0.5:
            raise ValueError(f"grid_step must be in (0, 0.5], got {self.grid_step}")
        if self.refine_tol <= 0:
            raise ValueError(f"refine_tol must be positive, got {self.refine_tol}")


@dataclass(frozen=True)
class AlphaResult:
    alpha_star: float
    value: float
    alphas: np.ndarray
    values: np.ndarray
    stderrs: np.ndarray | None  # only for the Monte Carlo objective


def _alpha_grid(step: float) -> np.ndarray:
    count = int(round(1.0 / step))
    return np.minimum(np.arange(count + 1) * step, 1.0)


def _argmax_prefer_larger(values: np.ndarray) -> int:
    """Grid argmax with ties broken toward larger alpha."""
    rev = values[::-1]
    return values.size - 1 - int(np.argmax(rev))


def optimize_alpha(
    spec: AlphaSearchSpec,
    region: EveRegion,
    loc_b: Location,
    cfg: ArrayConfig,
    scheme: AllocationScheme,
    mu_b: float,
    beta: float,
    trials: int = 10_000,
    seed: int = 0,
    threads: int = 1,
) -> AlphaResult:
    """Maximize the region-averaged secrecy objective over alpha in [0, 1]."""
    if region.contains(loc_b.theta_deg, loc_b.range_m):
        raise ValueError("region must exclude Bob's location")
    alphas = _alpha_grid(spec.grid_step)

    if spec.objective == "avg_esc_mc":
        samples = region_samples(region, loc_b, cfg, scheme, trials, seed, threads)
        esc, stderr = esc_curve_from_samples(samples, alphas, mu_b, beta)
        values, stderrs = esc[:, 0], stderr[:, 0]
        best = _argmax_prefer_larger(values)
        return AlphaResult(float(alphas[best]), float(values[best]), alphas, values, stderrs)

    _, _, q, p = _region_grid(region, loc_b, cfg)

    def objective(alpha: float) -> float:
        params = LinkParams(alpha=float(alpha), mu_b=mu_b, beta=beta)
        return float(np.mean(_closed_form_over_cells("esc_lb", q, p, scheme, params, cfg.n_elements)))

    values = np.array([objective(a) for a in alphas])
    best = _argmax_prefer_larger(values)
    alpha_star, value = float(alphas[best]), float(values[best])

    if spec.refine and 0 < best < alphas.size - 1:
        lo, hi = alphas[best - 1], alphas[best + 1]
        a_ref, v_ref = _golden_section(objective, float(lo), float(hi), spec.refine_tol)
        if v_ref >= value:
            alpha_star, value = a_ref, v_ref
    return AlphaResult(alpha_star, value, alphas, values, None)


def _golden_section(f, lo: float, hi: float, tol: float) -> tuple[float, float]:
    """Maximize f on [lo, hi]; returns (argmax, value) at resolution tol."""
    c = hi - _INV_PHI * (hi - lo)
    d = lo + _INV_PHI * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > tol:
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - _INV_PHI * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INV_PHI * (hi - lo)
            fd = f(d)
    mid = (lo + hi) / 2.0
    return mid, f(mid)
