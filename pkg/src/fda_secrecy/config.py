"""Flat key=value experiment configuration.

Config files are plain text, one ``key = value`` per line, ``#`` comments;
every key is validated against its owning type's invariants before any
computation runs and unknown keys are rejected.  Interval-union keys use
``lo:hi,lo:hi`` syntax; list keys are comma-separated.  Angles are degrees
and mu_b is given in dB at this surface (internally everything is radians
and linear).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, replace
from pathlib import Path

from .arraymodel import ArrayConfig, Location
from .beamform import LinkParams
from .freqalloc import AllocationScheme, SchemeKind
from .powalloc import OBJECTIVES
from .secrecy import EveRegion

__all__ = ["ConfigError", "ExperimentConfig", "load_config", "parse_config_text", "SUBCOMMANDS"]

SUBCOMMANDS = ("esc-sweep", "heatmap", "alpha-sweep", "asymptotic", "mgf-compare", "optimize-alpha")


class ConfigError(ValueError):
    """Invalid configuration (maps to CLI exit code 2)."""


def _parse_bool(text: str) -> bool:
    low = text.strip().lower()
    if low in ("true", "yes", "1", "on"):
        return True
    if low in ("false", "no", "0", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _parse_intervals(text: str) -> tuple[tuple[float, float], ...]:
    out = []
    for part in text.split(","):
        lo, sep, hi = part.partition(":")
        if not sep:
            raise ValueError(f"interval {part!r} must look like lo:hi")
        out.append((float(lo), float(hi)))
    return tuple(out)


def _parse_int_list(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(","))


def _parse_float_list(text: str) -> tuple[float, ...]:
    return tuple(float(part) for part in text.split(","))


def _parse_str_list(text: str) -> tuple[str, ...]:
    return tuple(part.strip() for part in text.split(","))


# key -> (parser, default); None default means "derived later".
_COMMON_KEYS: dict[str, tuple] = {
    "kind": (str, None),
    "seed": (int, 12345),
    "trials": (int, 10_000),
    "n_elements": (int, 32),
    "carrier_hz": (float, 1e9),
    "increment_hz": (float, 3e6),
    "spacing_m": (float, None),
    "wave_speed": (float, None),
    "scheme": (str, "rfda-cont"),
    "M": (float, 10.0),
    "alpha": (float, 0.5),
    "mu_b_db": (float, 15.0),
    "beta": (float, 1.0),
    "bob_theta_deg": (float, 45.0),
    "bob_range_m": (float, 120.0),
    "eve_theta_deg": (float, 45.0),
    "eve_range_m": (float, 239.0),
}

_REGION_KEYS: dict[str, tuple] = {
    "theta_intervals_deg": (_parse_intervals, ((0.0, 44.0), (46.0, 180.0))),
    "range_intervals_m": (_parse_intervals, ((0.0, 119.0), (121.0, 250.0))),
    "grid_theta": (int, 90),
    "grid_range": (int, 125),
}

_PER_SUBCOMMAND_KEYS: dict[str, dict[str, tuple]] = {
    "esc-sweep": {
        "mu_b_db_start": (float, 0.0),
        "mu_b_db_stop": (float, 20.0),
        "mu_b_db_step": (float, 1.0),
        "schemes": (_parse_str_list, ("pa", "lfda", "rfda-cont")),
    },
    "heatmap": {
        "heat_theta_start_deg": (float, 0.0),
        "heat_theta_stop_deg": (float, 180.0),
        "heat_theta_points": (int, 181),
        "heat_range_start_m": (float, 2.0),
        "heat_range_stop_m": (float, 250.0),
        "heat_range_points": (int, 125),
    },
    "alpha-sweep": {
        **_REGION_KEYS,
        "alpha_step": (float, 0.01),
        "n_list": (_parse_int_list, (16, 64, 256)),
    },
    "asymptotic": {
        "n_sweep": (_parse_int_list, (8, 16, 32, 64, 128, 256, 512, 1024)),
    },
    "mgf-compare": {
        **_REGION_KEYS,
        # Eve candidates along Bob's direction at all ranges: the geometry in
        # which frequency diversity (not the angular pattern) does the work.
        "theta_intervals_deg": (_parse_intervals, ((44.0, 46.0),)),
        "grid_theta": (int, 8),
        "grid_range": (int, 40),
        "alpha_step": (float, 0.05),
        "mu_b_db_list": (_parse_float_list, (0.0, 5.0, 10.0, 15.0, 20.0)),
    },
    "optimize-alpha": {
        **_REGION_KEYS,
        "objective": (str, "avg_esc_lb"),
        "alpha_step": (float, 0.01),
        "refine": (_parse_bool, True),
        "refine_tol": (float, 1e-4),
    },
}

_MGF_N_ELEMENTS_DEFAULT = 16
_OPT_N_ELEMENTS_DEFAULT = 16


@dataclass(frozen=True)
class ExperimentConfig:
    """Validated experiment description for one subcommand."""

    kind: str
    seed: int
    trials: int
    array: ArrayConfig
    scheme: AllocationScheme
    bandwidth_m: float
    link: LinkParams
    bob: Location
    eve: Location
    region: EveRegion | None
    options: dict
    text: str  # raw file contents, hashed into the output sidecar

    def with_seed(self, seed: int) -> "ExperimentConfig":
        return replace(self, seed=int(seed))

    @property
    def config_sha256(self) -> str:
        return hashlib.sha256(self.text.encode()).hexdigest()


def _schema_for(subcommand: str) -> dict[str, tuple]:
    if subcommand not in SUBCOMMANDS:
        raise ConfigError(f"unknown subcommand {subcommand!r}; expected one of {', '.join(SUBCOMMANDS)}")
    schema = dict(_COMMON_KEYS)
    schema.update(_PER_SUBCOMMAND_KEYS[subcommand])
    if subcommand == "mgf-compare":
        schema["n_elements"] = (int, _MGF_N_ELEMENTS_DEFAULT)
    if subcommand == "optimize-alpha":
        schema["n_elements"] = (int, _OPT_N_ELEMENTS_DEFAULT)
    return schema


def _raw_pairs(text: str) -> dict[str, str]:
    pairs: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"line {lineno}: expected key = value, got {raw.strip()!r}")
        key, value = key.strip(), value.strip()
        if key in pairs:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        pairs[key] = value
    return pairs


def parse_config_text(text: str, subcommand: str) -> ExperimentConfig:
    schema = _schema_for(subcommand)
    pairs = _raw_pairs(text)

    values: dict = {}
    for key, raw in pairs.items():
        if key not in schema:
            raise ConfigError(f"unknown config key {key!r} for subcommand {subcommand}")
        parser = schema[key][0]
        try:
            values[key] = parser(raw)
        except (ValueError, TypeError) as exc:
            raise ConfigError(f"config key {key!r}: {exc}") from exc
    for key, (_, default) in schema.items():
        values.setdefault(key, default)

    if values["kind"] is not None and values["kind"] != subcommand:
        raise ConfigError(
            f"config key 'kind': {values['kind']!r} does not match subcommand {subcommand!r}"
        )

    def build(key_names, ctor):
        try:
            return ctor()
        except (ValueError, TypeError) as exc:
            raise ConfigError(f"config key(s) {key_names}: {exc}") from exc

    array_kwargs = dict(
        n_elements=values["n_elements"],
        carrier_hz=values["carrier_hz"],
        increment_hz=values["increment_hz"],
        spacing_m=values["spacing_m"],
    )
    if values["wave_speed"] is not None:
        array_kwargs["wave_speed"] = values["wave_speed"]
    array = build("n_elements/carrier_hz/increment_hz/spacing_m/wave_speed",
                  lambda: ArrayConfig(**array_kwargs))

    def make_scheme(name: str) -> AllocationScheme:
        kind = SchemeKind.from_name(name)
        if kind in (SchemeKind.RFDA_CONT, SchemeKind.RFDA_DISC):
            return AllocationScheme(kind, values["M"])
        return AllocationScheme(kind)

    scheme = build("scheme/M", lambda: make_scheme(values["scheme"]))
    link = build("alpha/mu_b_db/beta",
                 lambda: LinkParams.from_db(values["alpha"], values["mu_b_db"], values["beta"]))
    bob = build("bob_theta_deg/bob_range_m",
                lambda: Location.from_degrees(values["bob_theta_deg"], values["bob_range_m"]))
    eve = build("eve_theta_deg/eve_range_m",
                lambda: Location.from_degrees(values["eve_theta_deg"], values["eve_range_m"]))

    region = None
    if "grid_theta" in schema:
        region = build(
            "theta_intervals_deg/range_intervals_m/grid_theta/grid_range",
            lambda: EveRegion(
                theta_intervals_deg=values["theta_intervals_deg"],
                range_intervals_m=values["range_intervals_m"],
                grid_theta=values["grid_theta"],
                grid_range=values["grid_range"],
            ),
        )
        if region.contains(bob.theta_deg, bob.range_m):
            raise ConfigError(
                "config key(s) theta_intervals_deg/range_intervals_m: region must exclude Bob's location"
            )

    if subcommand == "esc-sweep":
        if values["mu_b_db_step"] <= 0:
            raise ConfigError("config key 'mu_b_db_step': must be positive")
        if values["mu_b_db_stop"] < values["mu_b_db_start"]:
            raise ConfigError("config key 'mu_b_db_stop': must be >= mu_b_db_start")
        for name in values["schemes"]:
            build("schemes", lambda n=name: make_scheme(n))
    if subcommand == "heatmap":
        if values["heat_theta_points"] < 2 or values["heat_range_points"] < 2:
            raise ConfigError("config key 'heat_*_points': need at least 2 grid points")
        if not 0 <= values["heat_theta_start_deg"] < values["heat_theta_stop_deg"] <= 180:
            raise ConfigError("config key 'heat_theta_*_deg': need 0 <= start < stop <= 180")
        if not 0 < values["heat_range_start_m"] < values["heat_range_stop_m"]:
            raise ConfigError("config key 'heat_range_*_m': need 0 < start < stop")
        if not scheme.is_random:
            raise ConfigError("config key 'scheme': heatmap requires an rfda scheme for its random panel")
    if subcommand in ("alpha-sweep", "mgf-compare", "optimize-alpha"):
        if not scheme.is_random and subcommand != "mgf-compare":
            raise ConfigError(f"config key 'scheme': {subcommand} requires an rfda scheme")
        if "alpha_step" in values and not 0 < values["alpha_step"] <= 0.5:
            raise ConfigError("config key 'alpha_step': must be in (0, 0.5]")
    if subcommand == "alpha-sweep":
        if any(n < 2 for n in values["n_list"]):
            raise ConfigError("config key 'n_list': element counts must be >= 2")
    if subcommand == "asymptotic":
        if any(n < 2 for n in values["n_sweep"]):
            raise ConfigError("config key 'n_sweep': element counts must be >= 2")
    if subcommand == "mgf-compare":
        if values["M"] != int(values["M"]) or values["M"] < 2:
            raise ConfigError("config key 'M': mgf-compare draws both rfda kinds, so M must be an integer >= 2")
    if subcommand == "optimize-alpha":
        if values["objective"] not in OBJECTIVES:
            raise ConfigError(
                f"config key 'objective': {values['objective']!r} is not valid; "
                f"valid objectives: {', '.join(OBJECTIVES)}"
            )
    if values["trials"] < 1:
        raise ConfigError("config key 'trials': must be >= 1")
    if values["seed"] < 0:
        raise ConfigError("config key 'seed': must be >= 0")

    option_keys = set(schema) - set(_COMMON_KEYS) - set(_REGION_KEYS)
    options = {key: values[key] for key in option_keys}
    return ExperimentConfig(
        kind=subcommand,
        seed=values["seed"],
        trials=values["trials"],
        array=array,
        scheme=scheme,
        bandwidth_m=values["M"],
        link=link,
        bob=bob,
        eve=eve,
        region=region,
        options=options,
        text=text,
    )


def load_config(path: str | Path, subcommand: str) -> ExperimentConfig:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    return parse_config_text(text, subcommand)
