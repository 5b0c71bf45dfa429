"""Experiment runners behind the CLI subcommands.

Each runner takes a validated :class:`~fda_secrecy.config.ExperimentConfig`
and returns one or more named tables; the CLI serializes them to CSV.  All
Monte Carlo estimates reuse one set of per-cell samples across sweep axes
(common random numbers), so sweep curves are smooth and a sweep costs the
same as a single point.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from ._rng import ALLOCATION, substream
from .beamform import LinkParams
from .config import ExperimentConfig
from .freqalloc import AllocationScheme, SchemeKind, dirichlet_kernel, draw_allocation, mgf_on_imaginary_axis
from .powalloc import AlphaSearchSpec, optimize_alpha
from .secrecy import (
    _closed_form_over_cells,
    _region_grid,
    esc_curve_from_samples,
    esc_monte_carlo,
    region_samples,
)

__all__ = ["Table", "run_esc_sweep", "run_heatmap", "run_alpha_sweep",
           "run_asymptotic_check", "run_mgf_comparison", "run_optimize_alpha", "RUNNERS"]


@dataclass(frozen=True)
class Table:
    name: str  # "" for the primary output, otherwise an output-stem suffix
    header: tuple[str, ...]
    rows: list[tuple]


def _mu_grid_db(cfg: ExperimentConfig) -> np.ndarray:
    start = cfg.options["mu_b_db_start"]
    stop = cfg.options["mu_b_db_stop"]
    step = cfg.options["mu_b_db_step"]
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return start + step * np.arange(count)


def _alpha_grid(step: float) -> np.ndarray:
    count = int(round(1.0 / step))
    return np.minimum(np.arange(count + 1) * step, 1.0)


def run_esc_sweep(cfg: ExperimentConfig, threads: int = 1) -> list[Table]:
    """ESC / secrecy capacity versus mu_b for the configured schemes at one
    fixed Eve location; all schemes share the same random draws."""
    mu_db = _mu_grid_db(cfg)
    mus = 10.0 ** (mu_db / 10.0)
    alpha, beta = cfg.link.alpha, cfg.link.beta
    rows = []
    for name in cfg.options["schemes"]:
        kind = SchemeKind.from_name(name)
        random_kind = kind in (SchemeKind.RFDA_CONT, SchemeKind.RFDA_DISC)
        scheme = AllocationScheme(kind, cfg.bandwidth_m if random_kind else None)
        for i, mu in enumerate(mus):
            params = LinkParams(alpha, float(mu), beta)
            report = esc_monte_carlo(cfg.eve, cfg.bob, cfg.array, scheme, params, cfg.trials, cfg.seed)
            rows.append((float(mu_db[i]), name, report.esc, report.esc_stderr,
                         report.c_lb, report.c_asym, report.esc_clamped))
    header = ("mu_b_db", "scheme", "esc_bits", "esc_stderr", "c_lb_bits", "c_asym_bits", "esc_clamped_bits")
    return [Table("", header, rows)]


def run_heatmap(cfg: ExperimentConfig, threads: int = 1) -> list[Table]:
    """|rho| over a (theta, range) grid, one series per scheme; the random
    scheme contributes a fixed-seed realization and the analytic RMS value."""
    opts = cfg.options
    thetas = np.linspace(opts["heat_theta_start_deg"], opts["heat_theta_stop_deg"], opts["heat_theta_points"])
    ranges = np.linspace(opts["heat_range_start_m"], opts["heat_range_stop_m"], opts["heat_range_points"])
    arr = cfg.array
    n = arr.n_elements
    q = arr.carrier_hz * arr.spacing_m * (np.cos(np.deg2rad(thetas)) - np.cos(cfg.bob.theta_rad)) / arr.wave_speed
    p = arr.increment_hz * (ranges - cfg.bob.range_m) / arr.wave_speed
    qg = np.repeat(q, ranges.size)
    pg = np.tile(p, thetas.size)
    tg = np.repeat(thetas, ranges.size)
    rg = np.tile(ranges, thetas.size)

    alloc = draw_allocation(cfg.scheme, n, substream(cfg.seed, ALLOCATION, 0))
    b = np.arange(n) - (n - 1) / 2.0
    phases = 2j * np.pi * (np.outer(qg, b) - np.outer(pg, alloc.values))
    realization = np.abs(np.exp(phases).sum(axis=1)) / n

    phi_sq = mgf_on_imaginary_axis(cfg.scheme, pg) ** 2
    rms = np.sqrt((n * (1.0 - phi_sq) + dirichlet_kernel(qg, n) ** 2 * phi_sq) / n**2)
    series = {
        "pa": np.abs(dirichlet_kernel(qg, n)) / n,
        "lfda": np.abs(dirichlet_kernel(qg - pg, n)) / n,
        cfg.scheme.kind.value: realization,
        cfg.scheme.kind.value + "-rms": rms,
    }
    rows = []
    for name, values in series.items():
        rows.extend(
            (float(tg[i]), float(rg[i]), name, float(values[i])) for i in range(tg.size)
        )
    return [Table("", ("theta_deg", "range_m", "scheme", "corr_abs"), rows)]


def run_alpha_sweep(cfg: ExperimentConfig, threads: int = 1) -> list[Table]:
    """Region-averaged ESC (Monte Carlo) and its closed-form lower bound
    versus alpha, for each antenna count in n_list."""
    alphas = _alpha_grid(cfg.options["alpha_step"])
    mu, beta = cfg.link.mu_b, cfg.link.beta
    rows = []
    for n in cfg.options["n_list"]:
        arr = replace(cfg.array, n_elements=int(n))
        samples = region_samples(cfg.region, cfg.bob, arr, cfg.scheme, cfg.trials, cfg.seed, threads)
        esc, stderr = esc_curve_from_samples(samples, alphas, mu, beta)
        _, _, q, p = _region_grid(cfg.region, cfg.bob, arr)
        for ia, alpha in enumerate(alphas):
            params = LinkParams(float(alpha), mu, beta)
            lb = float(np.mean(_closed_form_over_cells("esc_lb", q, p, cfg.scheme, params, int(n))))
            rows.append((float(alpha), int(n), float(esc[ia, 0]), float(stderr[ia, 0]), lb))
    header = ("alpha", "N", "avg_esc_mc", "avg_esc_mc_stderr", "avg_esc_lb")
    return [Table("", header, rows)]


def run_asymptotic_check(cfg: ExperimentConfig, threads: int = 1) -> list[Table]:
    """Monte Carlo ESC against the large-N closed form across antenna counts."""
    rows = []
    for n in cfg.options["n_sweep"]:
        arr = replace(cfg.array, n_elements=int(n))
        report = esc_monte_carlo(cfg.eve, cfg.bob, arr, cfg.scheme, cfg.link, cfg.trials, cfg.seed)
        rows.append((int(n), report.esc, report.esc_stderr, report.c_asym, report.esc_clamped))
    header = ("N", "esc_mc", "esc_stderr", "esc_asym", "esc_mc_clamped")
    return [Table("", header, rows)]


def run_mgf_comparison(cfg: ExperimentConfig, threads: int = 1) -> list[Table]:
    """Region-averaged ESC for the continuous vs discrete uniform allocations
    over an (alpha, mu_b) grid, with paired random draws."""
    alphas = _alpha_grid(cfg.options["alpha_step"])
    mu_db = np.asarray(cfg.options["mu_b_db_list"], dtype=float)
    mus = 10.0 ** (mu_db / 10.0)
    m = cfg.scheme.bandwidth_param if cfg.scheme.is_random else 10.0
    rows = []
    for label, scheme in (
        ("cont", AllocationScheme.rfda_cont(m)),
        ("disc", AllocationScheme.rfda_disc(int(m))),
    ):
        samples = region_samples(cfg.region, cfg.bob, cfg.array, scheme, cfg.trials, cfg.seed, threads)
        esc, _ = esc_curve_from_samples(samples, alphas, mus, cfg.link.beta)
        for ia, alpha in enumerate(alphas):
            for im in range(mu_db.size):
                rows.append((float(alpha), float(mu_db[im]), label, float(esc[ia, im])))
    return [Table("", ("alpha", "mu_b_db", "kind", "avg_esc"), rows)]


def run_optimize_alpha(cfg: ExperimentConfig, threads: int = 1) -> list[Table]:
    """Optimal power split for the configured objective, plus the full curve."""
    spec = AlphaSearchSpec(
        objective=cfg.options["objective"],
        grid_step=cfg.options["alpha_step"],
        refine=cfg.options["refine"],
        refine_tol=cfg.options["refine_tol"],
    )
    result = optimize_alpha(
        spec, cfg.region, cfg.bob, cfg.array, cfg.scheme,
        cfg.link.mu_b, cfg.link.beta, cfg.trials, cfg.seed, threads,
    )
    main = Table("", ("objective", "alpha_star", "value_bits"),
                 [(spec.objective, result.alpha_star, result.value)])
    stderrs = result.stderrs if result.stderrs is not None else np.zeros_like(result.values)
    curve_rows = [
        (float(a), float(v), float(s))
        for a, v, s in zip(result.alphas, result.values, stderrs)
    ]
    curve = Table("_curve", ("alpha", "value_bits", "stderr_bits"), curve_rows)
    return [main, curve]


RUNNERS = {
    "esc-sweep": run_esc_sweep,
    "heatmap": run_heatmap,
    "alpha-sweep": run_alpha_sweep,
    "asymptotic": run_asymptotic_check,
    "mgf-compare": run_mgf_comparison,
    "optimize-alpha": run_optimize_alpha,
}
