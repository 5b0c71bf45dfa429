"""Secrecy-capacity formulas, Monte Carlo estimation, and region averaging.

Let rho = h^H(eve) h(bob) be the steering-vector cross-correlation, eta the
artificial-noise power factor 1/(N-1), and Phi the allocation MGF on the
imaginary axis.  Everything here derives from Eve's SINR

    gamma_E = alpha*mu_b*|rho|^2 / ((1-alpha)*mu_b*|h_E^H w|^2 + beta)

with C = log2(1 + alpha*mu_b) - E[log2(1 + gamma_E)], the expectation over
both the frequency draw and the noise-vector draw.  The closed-form lower
bound replaces the per-trial quantities by their means

    E[|rho|^2]      = (N(1 - Phi^2) + S_N(q)^2 Phi^2) / N^2
    E[|h_E^H w|^2]  = eta * (1 - E[|rho|^2])

(a ratio-of-means step conventionally read as a Jensen lower bound; it is
exact in the large-N limit and one-sided at moderate-to-large alpha, but
can overshoot the ESC at small alpha, where the mean-plugging error beats
the log-concavity slack).  The equivalent single-ratio form uses
F = 1 / (eta (1 - E[|rho|^2])); both are evaluated and must agree, which
pins the sign of the S_N^2 Phi^2 term in F's denominator.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from ._rng import ALLOCATION, ARTIFICIAL_NOISE, substream
from .arraymodel import ArrayConfig, Location, element_offsets
from .beamform import LinkParams
from .freqalloc import AllocationScheme, SchemeKind, dirichlet_kernel, draw_multipliers, mgf_on_imaginary_axis

__all__ = [
    "NumericError",
    "OffsetPair",
    "SecrecyReport",
    "EveRegion",
    "RegionSamples",
    "shannon_capacity",
    "offsets",
    "projector_trace_eta",
    "mean_rho_sq",
    "capacity_from_mean_sq",
    "esc_lower_bound",
    "esc_asymptotic",
    "esc_monte_carlo",
    "capacity_pa",
    "capacity_lfda",
    "mc_pair_samples",
    "region_samples",
    "esc_curve_from_samples",
    "average_over_region",
    "REGION_METRICS",
]

# Trials are processed in blocks capped at this many trial*element entries,
# keeping peak memory flat; blocking does not change the random streams.
_BLOCK_ELEMENTS = 1 << 21

# Switch to the analytic e -> 1 limit instead of dividing by 1 - e.
_DEGENERATE_EPS = 1e-12

# Production guard on the two algebraically equal closed-form paths.
_DUAL_PATH_TOL = 1e-9


class NumericError(ArithmeticError):
    """A numeric invariant failed at runtime (maps to CLI exit code 3)."""


@dataclass(frozen=True)
class OffsetPair:
    """Dimensionless geometry offsets between Eve and Bob.

    q = f_c d (cos(theta_E) - cos(theta_B)) / c   (angle offset)
    p = df (R_E - R_B) / c                        (range offset)
    """

    q: float
    p: float


@dataclass(frozen=True)
class SecrecyReport:
    """Monte Carlo estimate plus the closed forms, all in bits."""

    c_bob: float
    c_eve_mean: float
    esc: float
    esc_stderr: float
    c_lb: float
    c_asym: float
    trials: int

    @property
    def esc_clamped(self) -> float:
        return max(0.0, self.esc)


def shannon_capacity(gamma) -> float:
    """log2(1 + gamma) bits for gamma >= 0."""
    g = np.asarray(gamma, dtype=float)
    if np.any(g < 0):
        raise ValueError("gamma must be nonnegative")
    out = np.log2(1.0 + g)
    return float(out) if np.isscalar(gamma) else out


def offsets(loc_e: Location, loc_b: Location, cfg: ArrayConfig) -> OffsetPair:
    q = cfg.carrier_hz * cfg.spacing_m * (np.cos(loc_e.theta_rad) - np.cos(loc_b.theta_rad)) / cfg.wave_speed
    p = cfg.increment_hz * (loc_e.range_m - loc_b.range_m) / cfg.wave_speed
    return OffsetPair(float(q), float(p))


def projector_trace_eta(n_elements: int) -> float:
    """eta = 1/tr{(I - h h^H)^2} = 1/(N-1): the projector is idempotent with
    rank N-1, so the trace of its square equals its rank."""
    if n_elements < 2:
        raise ValueError(f"n_elements must be >= 2, got {n_elements}")
    return 1.0 / (n_elements - 1)


def mean_rho_sq(op: OffsetPair, scheme: AllocationScheme, n_elements: int):
    """E[|rho|^2] over the allocation draw, in [0, 1].

    Closed form (N(1 - Phi^2) + S_N(q)^2 Phi^2)/N^2 with Phi = Phi(j*2*pi*p).
    Not defined for lfda (deterministic multipliers): use S_N(q-p)^2/N^2 via
    :func:`capacity_lfda` instead.
    """
    if scheme.kind is SchemeKind.LFDA:
        raise ValueError("mean_rho_sq does not apply to lfda; its correlation is S_N(q-p)/N")
    n = n_elements
    phi_sq = float(mgf_on_imaginary_axis(scheme, float(op.p))) ** 2
    s_sq = float(dirichlet_kernel(float(op.q), n)) ** 2
    e = (n * (1.0 - phi_sq) + s_sq * phi_sq) / n**2
    if -1e-12 < e < 0.0:
        e = 0.0
    elif 1.0 < e < 1.0 + 1e-12:
        e = 1.0
    return e


def capacity_from_mean_sq(e, params: LinkParams, n_elements: int):
    """Secrecy capacity in bits with Eve's mean quantities plugged in.

    Evaluates both the two-step Jensen form and the single-ratio form with
    F = 1/(eta(1-e)) and requires them to agree; returns the Jensen value.
    For e -> 1 (fully correlated Eve) the analytic limit
    log2(beta (1 + alpha mu) / (alpha mu + beta)) is used.
    """
    alpha, mu, beta = params.alpha, params.mu_b, params.beta
    eta = projector_trace_eta(n_elements)
    e_arr = np.atleast_1d(np.asarray(e, dtype=float))
    degenerate = (1.0 - e_arr) < _DEGENERATE_EPS
    one_minus_e = np.where(degenerate, 1.0, 1.0 - e_arr)

    c_bob = np.log2(1.0 + alpha * mu)
    jensen = c_bob - np.log2(1.0 + alpha * mu * e_arr / ((1.0 - alpha) * mu * eta * one_minus_e + beta))

    f = 1.0 / (eta * one_minus_e)
    num = -(alpha * mu) ** 2 + alpha * mu * (beta * f + mu - 1.0) + beta * f + mu
    den = alpha * mu * (f - 1.0 / eta - 1.0) + beta * f + mu
    rational = np.log2(num / den)

    mismatch = np.max(np.abs(np.where(degenerate, 0.0, jensen - rational)), initial=0.0)
    if mismatch > _DUAL_PATH_TOL:
        raise NumericError(f"closed-form capacity paths disagree by {mismatch:.3e} bits")

    limit = np.log2(beta * (1.0 + alpha * mu) / (alpha * mu + beta))
    out = np.where(degenerate, limit, jensen)
    return float(out[0]) if np.isscalar(e) or np.asarray(e).ndim == 0 else out.reshape(np.shape(e))


def esc_lower_bound(loc_e: Location, loc_b: Location, cfg: ArrayConfig,
                    scheme: AllocationScheme, params: LinkParams) -> float:
    """Closed-form ESC bound from plugging mean quantities into the SINR.

    Lower-bounds the Monte Carlo ESC at moderate-to-large alpha and tightens
    as N grows; at small alpha the ratio-of-means step can overshoot (see
    the module docstring).
    """
    op = offsets(loc_e, loc_b, cfg)
    e = mean_rho_sq(op, scheme, cfg.n_elements)
    return capacity_from_mean_sq(e, params, cfg.n_elements)


def _mean_sq_asymptotic(op: OffsetPair, scheme: AllocationScheme, n: int):
    phi_sq = np.asarray(mgf_on_imaginary_axis(scheme, op.p), dtype=float) ** 2
    s_sq = np.asarray(dirichlet_kernel(op.q, n), dtype=float) ** 2
    return s_sq * phi_sq / n**2


def esc_asymptotic(loc_e: Location, loc_b: Location, cfg: ArrayConfig,
                   scheme: AllocationScheme, params: LinkParams) -> float:
    """Large-N ESC: |rho|^2 concentrates on E[rho]^2 = S_N(q)^2 Phi^2 / N^2."""
    op = offsets(loc_e, loc_b, cfg)
    e_inf = _mean_sq_asymptotic(op, scheme, cfg.n_elements)
    return capacity_from_mean_sq(e_inf, params, cfg.n_elements)


def capacity_pa(loc_e: Location, loc_b: Location, cfg: ArrayConfig, params: LinkParams) -> float:
    """Phased-array secrecy capacity: r = S_N(q)^2/N^2 (range-independent),
    AN interference at its draw-averaged power eta(1-r)."""
    op = offsets(loc_e, loc_b, cfg)
    n = cfg.n_elements
    r = (dirichlet_kernel(op.q, n) / n) ** 2
    return capacity_from_mean_sq(r, params, n)


def capacity_lfda(loc_e: Location, loc_b: Location, cfg: ArrayConfig, params: LinkParams) -> float:
    """Linear-allocation secrecy capacity: r = S_N(q-p)^2/N^2, so capacity
    vanishes on the coupled direction-range lines q - p in Z."""
    op = offsets(loc_e, loc_b, cfg)
    n = cfg.n_elements
    r = (dirichlet_kernel(op.q - op.p, n) / n) ** 2
    return capacity_from_mean_sq(r, params, n)


# ---------------------------------------------------------------------------
# Monte Carlo machinery


def _phase_parts(loc: Location, cfg: ArrayConfig) -> tuple[np.ndarray, float]:
    """Split the element phase into allocation-independent and k-proportional
    parts: psi_n = phi0[n] + coef * k_n."""
    b = element_offsets(cfg.n_elements)
    scale = 2.0 * np.pi / cfg.wave_speed
    phi0 = -scale * b * cfg.carrier_hz * cfg.spacing_m * np.cos(loc.theta_rad)
    coef = scale * cfg.increment_hz * loc.range_m
    return phi0, float(coef)


def mc_pair_samples(
    loc_e: Location,
    loc_b: Location,
    cfg: ArrayConfig,
    scheme: AllocationScheme,
    trials: int,
    alloc_rng: np.random.Generator,
    an_rng: np.random.Generator,
) -> tuple[np.ndarray, np.ndarray]:
    """Per-trial (|rho|^2, |h_E^H w|^2) pairs for one geometry.

    Each trial draws a fresh allocation (random schemes only) and a fresh
    noise seed vector; draws are consumed in per-trial blocks so a larger
    trial count extends, never reshuffles, earlier trials.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    n = cfg.n_elements
    phi_b0, coef_b = _phase_parts(loc_b, cfg)
    phi_e0, coef_e = _phase_parts(loc_e, cfg)

    abs_rho_sq = np.empty(trials)
    an_gain = np.empty(trials)
    block = max(1, _BLOCK_ELEMENTS // (2 * n))
    fixed_k = None
    if not scheme.is_random:
        fixed_k = np.ascontiguousarray(draw_multipliers(scheme, (1, n), alloc_rng))
    done = 0
    while done < trials:
        t = min(block, trials - done)
        k = fixed_k if fixed_k is not None else draw_multipliers(scheme, (t, n), alloc_rng)
        z = an_rng.standard_normal((t, 2 * n))
        a, u = kernels.rho_an_samples(phi_b0, phi_e0, coef_b, coef_e, k, z)
        abs_rho_sq[done:done + t] = a
        an_gain[done:done + t] = u
        done += t
    return abs_rho_sq, an_gain


def _eve_capacity_samples(abs_rho_sq, an_gain, params: LinkParams) -> np.ndarray:
    gamma = params.alpha * params.mu_b * abs_rho_sq / (
        (1.0 - params.alpha) * params.mu_b * an_gain + params.beta
    )
    return np.log2(1.0 + gamma)


def esc_monte_carlo(
    loc_e: Location,
    loc_b: Location,
    cfg: ArrayConfig,
    scheme: AllocationScheme,
    params: LinkParams,
    trials: int,
    seed: int,
) -> SecrecyReport:
    """Monte Carlo ESC at a single Eve location, with the closed forms attached.

    Deterministic given the seed; the allocation and noise streams are the
    same named substreams a one-cell region average would use.
    """
    a, u = mc_pair_samples(
        loc_e, loc_b, cfg, scheme, trials,
        substream(seed, ALLOCATION, 0), substream(seed, ARTIFICIAL_NOISE, 0),
    )
    c_e = _eve_capacity_samples(a, u, params)
    c_bob = shannon_capacity(params.alpha * params.mu_b)
    c_eve_mean = float(np.mean(c_e))
    stderr = float(np.std(c_e, ddof=1) / np.sqrt(trials)) if trials > 1 else 0.0
    if scheme.is_random or scheme.kind is SchemeKind.PA:
        c_lb = esc_lower_bound(loc_e, loc_b, cfg, scheme, params)
        c_asym = esc_asymptotic(loc_e, loc_b, cfg, scheme, params)
    else:
        c_lb = c_asym = capacity_lfda(loc_e, loc_b, cfg, params)
    return SecrecyReport(
        c_bob=c_bob,
        c_eve_mean=c_eve_mean,
        esc=c_bob - c_eve_mean,
        esc_stderr=stderr,
        c_lb=c_lb,
        c_asym=c_asym,
        trials=trials,
    )


# ---------------------------------------------------------------------------
# Eve-location regions


def _spread_counts(intervals, total: int) -> list[int]:
    """Distribute `total` cells over intervals proportionally to their length
    (at least one per interval), so cell widths are as equal as possible."""
    lengths = [hi - lo for lo, hi in intervals]
    full = sum(lengths)
    counts = [max(1, round(total * ln / full)) for ln in lengths]
    while sum(counts) > total:
        counts[int(np.argmax(counts))] -= 1
    while sum(counts) < total:
        counts[int(np.argmin(counts))] += 1
    return counts


@dataclass(frozen=True)
class EveRegion:
    """Union-of-rectangles region of candidate Eve locations with a midpoint
    evaluation grid (equal cell weights, implementing a uniform density)."""

    theta_intervals_deg: tuple[tuple[float, float], ...]
    range_intervals_m: tuple[tuple[float, float], ...]
    grid_theta: int
    grid_range: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "theta_intervals_deg",
                           tuple((float(lo), float(hi)) for lo, hi in self.theta_intervals_deg))
        object.__setattr__(self, "range_intervals_m",
                           tuple((float(lo), float(hi)) for lo, hi in self.range_intervals_m))
        if not self.theta_intervals_deg or not self.range_intervals_m:
            raise ValueError("region needs at least one theta and one range interval")
        for lo, hi in self.theta_intervals_deg:
            if not (0.0 <= lo < hi <= 180.0):
                raise ValueError(f"degenerate or out-of-range theta interval [{lo}, {hi}]")
        for lo, hi in self.range_intervals_m:
            if not (0.0 <= lo < hi):
                raise ValueError(f"degenerate range interval [{lo}, {hi}]")
        if self.grid_theta < len(self.theta_intervals_deg) or self.grid_range < len(self.range_intervals_m):
            raise ValueError("grid counts must cover every interval with at least one cell")

    def theta_cells(self) -> np.ndarray:
        return self._midpoints(self.theta_intervals_deg, self.grid_theta)

    def range_cells(self) -> np.ndarray:
        mids = self._midpoints(self.range_intervals_m, self.grid_range)
        if mids[0] <= 0.0:
            raise ValueError("range grid midpoints must be positive")
        return mids

    @staticmethod
    def _midpoints(intervals, total: int) -> np.ndarray:
        out = []
        for (lo, hi), cnt in zip(intervals, _spread_counts(intervals, total)):
            width = (hi - lo) / cnt
            out.extend(lo + (i + 0.5) * width for i in range(cnt))
        return np.array(out)

    def contains(self, theta_deg: float, range_m: float) -> bool:
        in_theta = any(lo <= theta_deg <= hi for lo, hi in self.theta_intervals_deg)
        in_range = any(lo <= range_m <= hi for lo, hi in self.range_intervals_m)
        return in_theta and in_range

    @property
    def n_cells(self) -> int:
        return self.grid_theta * self.grid_range


@dataclass(frozen=True, eq=False)
class RegionSamples:
    """Per-cell Monte Carlo samples over a region, reusable across the whole
    (alpha, mu_b) grid thanks to common random numbers."""

    theta_deg: np.ndarray
    range_m: np.ndarray
    q: np.ndarray
    p: np.ndarray
    abs_rho_sq: np.ndarray = field(repr=False)  # (cells, trials)
    an_gain: np.ndarray = field(repr=False)     # (cells, trials)
    n_elements: int


def _region_grid(region: EveRegion, loc_b: Location, cfg: ArrayConfig):
    thetas = region.theta_cells()
    ranges = region.range_cells()
    th = np.repeat(thetas, ranges.size)
    rg = np.tile(ranges, thetas.size)
    q = cfg.carrier_hz * cfg.spacing_m * (np.cos(np.deg2rad(th)) - np.cos(loc_b.theta_rad)) / cfg.wave_speed
    p = cfg.increment_hz * (rg - loc_b.range_m) / cfg.wave_speed
    return th, rg, q, p


def region_samples(
    region: EveRegion,
    loc_b: Location,
    cfg: ArrayConfig,
    scheme: AllocationScheme,
    trials: int,
    seed: int,
    threads: int = 1,
) -> RegionSamples:
    """Sample every region cell; cell i uses substreams keyed by i, so the
    result is independent of the number of worker threads."""
    th, rg, q, p = _region_grid(region, loc_b, cfg)
    cells = th.size
    a = np.empty((cells, trials))
    u = np.empty((cells, trials))

    def work(i: int) -> None:
        loc_e = Location.from_degrees(th[i], rg[i])
        a[i], u[i] = mc_pair_samples(
            loc_e, loc_b, cfg, scheme, trials,
            substream(seed, ALLOCATION, i), substream(seed, ARTIFICIAL_NOISE, i),
        )

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(work, range(cells)))
    else:
        for i in range(cells):
            work(i)
    return RegionSamples(th, rg, q, p, a, u, cfg.n_elements)


def esc_curve_from_samples(samples: RegionSamples, alphas, mu_bs, beta: float):
    """Region-averaged ESC and its standard error on an (alpha, mu_b) grid.

    Standard errors combine the independent per-cell estimator variances;
    evaluation order is fixed, so results do not depend on threading.
    """
    alphas = np.atleast_1d(np.asarray(alphas, dtype=float))
    mu_bs = np.atleast_1d(np.asarray(mu_bs, dtype=float))
    cells, trials = samples.abs_rho_sq.shape
    esc = np.empty((alphas.size, mu_bs.size))
    stderr = np.empty_like(esc)
    for ia, alpha in enumerate(alphas):
        for im, mu in enumerate(mu_bs):
            gamma = alpha * mu * samples.abs_rho_sq / ((1.0 - alpha) * mu * samples.an_gain + beta)
            c_e = np.log2(1.0 + gamma)
            esc[ia, im] = np.log2(1.0 + alpha * mu) - float(np.mean(c_e))
            if trials > 1:
                cell_var = np.var(c_e, axis=1, ddof=1)
                stderr[ia, im] = float(np.sqrt(np.sum(cell_var / trials)) / cells)
            else:
                stderr[ia, im] = 0.0
    return esc, stderr


def _closed_form_over_cells(metric: str, q, p, scheme, params: LinkParams, n: int) -> np.ndarray:
    s_q = dirichlet_kernel(q, n)
    if metric == "pa":
        return capacity_from_mean_sq((s_q / n) ** 2, params, n)
    if metric == "lfda":
        return capacity_from_mean_sq((dirichlet_kernel(np.asarray(q) - np.asarray(p), n) / n) ** 2, params, n)
    phi_sq = np.asarray(mgf_on_imaginary_axis(scheme, p), dtype=float) ** 2
    if metric == "esc_lb":
        e = (n * (1.0 - phi_sq) + s_q**2 * phi_sq) / n**2
    elif metric == "esc_asym":
        e = s_q**2 * phi_sq / n**2
    else:
        raise ValueError(f"unknown metric {metric!r}")
    return capacity_from_mean_sq(e, params, n)


REGION_METRICS = ("esc_mc", "esc_lb", "esc_asym", "pa", "lfda")


def average_over_region(
    metric: str,
    region: EveRegion,
    loc_b: Location,
    cfg: ArrayConfig,
    scheme: AllocationScheme | None,
    params: LinkParams,
    trials: int = 1,
    seed: int = 0,
    threads: int = 1,
) -> float:
    """Equal-weight average of a secrecy metric over the region's cell grid."""
    if metric not in REGION_METRICS:
        raise ValueError(f"metric must be one of {REGION_METRICS}, got {metric!r}")
    if region.contains(loc_b.theta_deg, loc_b.range_m):
        raise ValueError("region must exclude Bob's location")
    if metric in ("esc_mc", "esc_lb", "esc_asym") and scheme is None:
        raise ValueError(f"metric {metric!r} requires an allocation scheme")
    if metric == "esc_mc":
        samples = region_samples(region, loc_b, cfg, scheme, trials, seed, threads)
        esc, _ = esc_curve_from_samples(samples, params.alpha, params.mu_b, params.beta)
        return float(esc[0, 0])
    _, _, q, p = _region_grid(region, loc_b, cfg)
    vals = _closed_form_over_cells(metric, q, p, scheme, params, cfg.n_elements)
    return float(np.mean(vals))
