#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
spiralmech Package

Command-line layer: run configs, single analyses, parameter sweeps, the
four-row table regression, mask export and resonance fits.
"""

from .types import (
    SWEEP_PARAMS,
    ConfigError,
    SweepFailedError,
    DeviceKind,
    MembraneConfig,
    SolverConfig,
    SweepConfig,
    RunConfig,
    RunMetrics,
)
from .config import parse_run_config, load_run_config
from .logger import MarkdownLogger
from .runner import solve, evaluate
from .sweep import run_sweep, swept_spec, evaluate_point
from .table1 import TABLE1_ROWS, run_table1
from .commands import cmd_modes, cmd_g0, cmd_sweep, cmd_mask, cmd_fit, cmd_synth, cmd_table1
from .cli import main, build_parser, classify_error

__version__ = "1.0.0"

__all__ = [
    # Types
    "SWEEP_PARAMS",
    "DeviceKind",
    "MembraneConfig",
    "SolverConfig",
    "SweepConfig",
    "RunConfig",
    "RunMetrics",
    # Errors
    "ConfigError",
    "SweepFailedError",
    # Config
    "parse_run_config",
    "load_run_config",
    # Logging
    "MarkdownLogger",
    # Evaluation
    "solve",
    "evaluate",
    "run_sweep",
    "swept_spec",
    "evaluate_point",
    "TABLE1_ROWS",
    "run_table1",
    # Commands
    "cmd_modes",
    "cmd_g0",
    "cmd_sweep",
    "cmd_mask",
    "cmd_fit",
    "cmd_synth",
    "cmd_table1",
    "main",
    "build_parser",
    "classify_error",
]
