#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Command-line entry point.

Usage:
  python -m spiralmech modes --config configs/table1_row2.json
  python -m spiralmech g0 --config configs/inductor_mm.json --out out/
  python -m spiralmech g0 --table1 --jobs 4
  python -m spiralmech sweep --config configs/sweep_turns.json
  python -m spiralmech mask --config configs/table1_row4.json
  python -m spiralmech synth --out fixtures/ --seed 0
  python -m spiralmech fit fixtures/natural.csv --f-min 21000 --f-max 22200

Exit codes: 0 ok, 2 config error, 3 geometry/solver error, 4 fit error.
Errors are also reported as one JSON object on stderr.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from dotenv import load_dotenv

from beam_mechanics import DegenerateModeError, InvalidSystemError, SingularFrameError, SolverFailureError
from electromechanics import ContactError, ModePolarizationError
from spectrum_analysis import (
    GuessFailureError,
    SpectrumFormatError,
    SpectrumParseError,
    SpectrumValidationError,
)
from spiral_geometry import GeometryCollisionError, InvalidSpecError, UnderResolutionError

from .commands import cmd_fit, cmd_g0, cmd_mask, cmd_modes, cmd_sweep, cmd_synth, cmd_table1
from .config import load_run_config
from .logger import MarkdownLogger
from .types import SWEEP_PARAMS, ConfigError, SweepFailedError

load_dotenv()

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SOLVER = 3
EXIT_FIT = 4

# Checked in order; subclasses before their bases
ERROR_CLASSES: List[Tuple[tuple, int, str]] = [
    ((ConfigError, FileNotFoundError), EXIT_CONFIG, "config"),
    ((GeometryCollisionError, InvalidSpecError, UnderResolutionError), EXIT_SOLVER, "geometry"),
    (
        (
            SingularFrameError,
            InvalidSystemError,
            SolverFailureError,
            DegenerateModeError,
            ContactError,
            ModePolarizationError,
            SweepFailedError,
        ),
        EXIT_SOLVER,
        "solver",
    ),
    (
        (GuessFailureError, SpectrumParseError, SpectrumFormatError, SpectrumValidationError),
        EXIT_FIT,
        "fit",
    ),
]


def classify_error(error: BaseException) -> Optional[Tuple[int, str]]:
    """(exit code, kind) for a known error, None otherwise."""
    for classes, code, kind in ERROR_CLASSES:
        if isinstance(error, classes):
            return code, kind
    return None


def _float_list(text: str) -> List[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", "-c", type=Path, help="JSON run config")
    common.add_argument("--jobs", "-j", type=int, default=None, help="worker processes (default: CPU count)")
    common.add_argument("--seed", type=int, default=0, help="seed for synthetic data")
    common.add_argument("--out", "-o", type=Path, default=None, help="output directory")
    common.add_argument("--table1", action="store_true", help="run the four-row table regression")
    common.add_argument("--no-log", action="store_true", help="skip the markdown run log")

    parser = argparse.ArgumentParser(
        prog="spiralmech",
        description="Electromechanics of suspended spiral capacitors and inductors",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("modes", parents=[common], help="mechanical modes and deformation profile")
    sub.add_parser("g0", parents=[common], help="single-photon coupling rate")
    sweep = sub.add_parser("sweep", parents=[common], help="one-parameter design sweep")
    sweep.add_argument("--param", choices=SWEEP_PARAMS, default=None)
    sweep.add_argument("--values", type=_float_list, default=None, help="e.g. 5,10,20")
    sub.add_parser("mask", parents=[common], help="fabrication mask outline")
    fit = sub.add_parser("fit", parents=[common], help="resonance fit of a spectrum CSV")
    fit.add_argument("spectrum", type=Path)
    fit.add_argument("--f-min", type=float, default=None, help="window start (Hz)")
    fit.add_argument("--f-max", type=float, default=None, help="window end (Hz)")
    fit.add_argument("--label", choices=["natural", "driven", "synthetic"], default="natural")
    synth = sub.add_parser("synth", parents=[common], help="write synthetic spectrum fixtures")
    synth.add_argument("--noise", type=float, default=None, help="relative noise (default from config.yml)")
    return parser


def run(args: argparse.Namespace) -> int:
    out_dir = args.out or Path("out")
    uses_config = not args.table1 and args.command not in ("fit", "synth")
    logger = None if args.no_log or uses_config else MarkdownLogger(out_dir / "logs")

    if args.table1:
        if args.command not in ("modes", "g0"):
            raise ConfigError("--table1 applies to the modes and g0 commands")
        cmd_table1(out_dir, args.jobs, logger)
        return EXIT_OK

    if args.command == "fit":
        cmd_fit(args.spectrum, out_dir, args.f_min, args.f_max, args.label, logger=logger)
        return EXIT_OK
    if args.command == "synth":
        cmd_synth(out_dir, args.seed, args.noise, logger)
        return EXIT_OK

    if args.config is None:
        raise ConfigError(f"'{args.command}' needs --config")
    cfg = load_run_config(args.config, args.out)
    if not args.no_log:
        logger = MarkdownLogger(cfg.output_dir / "logs")

    if args.command == "modes":
        cmd_modes(cfg, logger)
    elif args.command == "g0":
        cmd_g0(cfg, logger)
    elif args.command == "sweep":
        cmd_sweep(cfg, args.jobs, args.param, args.values, logger)
    elif args.command == "mask":
        cmd_mask(cfg, logger)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run the command, map errors to exit codes."""
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except Exception as e:
        known = classify_error(e)
        if known is None:
            raise
        code, kind = known
        print(f"✗ {type(e).__name__}: {e}")
        print(json.dumps({"error": kind, "type": type(e).__name__, "message": str(e)}), file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
