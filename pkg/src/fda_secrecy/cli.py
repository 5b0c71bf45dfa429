"""Command-line experiment runner.

    fda-secrecy <subcommand> --config <path> --out <path> [--seed S] [--threads T]

Subcommands: esc-sweep, heatmap, alpha-sweep, asymptotic, mgf-compare,
optimize-alpha.  Each writes CSV output (header row, floats with 9
significant digits) plus a ``.meta`` sidecar recording the config hash,
seed and tool version.  Exit codes: 0 success, 2 configuration error, 3
runtime numeric failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .config import SUBCOMMANDS, ConfigError, load_config
from .experiments import RUNNERS, Table
from .secrecy import NumericError

__all__ = ["main", "format_value", "write_csv"]


def format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, ".9g")
    return str(value)


def write_csv(path: Path, table: Table) -> None:
    lines = [",".join(table.header)]
    lines.extend(",".join(format_value(v) for v in row) for row in table.rows)
    path.write_text("\n".join(lines) + "\n")


def _write_meta(out: Path, cfg, threads: int, extra_outputs: list[str]) -> None:
    meta = out.with_suffix(".meta")
    lines = [
        "tool = fda-secrecy",
        f"version = {__version__}",
        f"subcommand = {cfg.kind}",
        f"seed = {cfg.seed}",
        f"threads = {threads}",
        f"config_sha256 = {cfg.config_sha256}",
    ]
    for name in extra_outputs:
        lines.append(f"extra_output = {name}")
    meta.write_text("\n".join(lines) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fda-secrecy",
        description="Frequency-diverse-array secrecy experiments (CSV output)",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name, help=f"run the {name} experiment")
        p.add_argument("--config", required=True, help="flat key=value config file")
        p.add_argument("--out", required=True, help="output CSV path")
        p.add_argument("--seed", type=int, default=None, help="override the config seed")
        p.add_argument("--threads", type=int, default=1, help="worker threads for region grids")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config, args.subcommand)
        if args.seed is not None:
            if args.seed < 0:
                raise ConfigError("--seed must be >= 0")
            cfg = cfg.with_seed(args.seed)
        if args.threads < 1:
            raise ConfigError("--threads must be >= 1")
    except ConfigError as exc:
        print(f"fda-secrecy: config error: {exc}", file=sys.stderr)
        return 2

    out = Path(args.out)
    try:
        tables = RUNNERS[args.subcommand](cfg, threads=args.threads)
    except (NumericError, FloatingPointError, ZeroDivisionError) as exc:
        print(f"fda-secrecy: numeric failure: {exc}", file=sys.stderr)
        return 3

    extra = []
    for table in tables:
        if table.name:
            target = out.with_name(out.stem + table.name + out.suffix)
            extra.append(target.name)
        else:
            target = out
        write_csv(target, table)
    _write_meta(out, cfg, args.threads, extra)
    return 0


if __name__ == "__main__":
    sys.exit(main())
