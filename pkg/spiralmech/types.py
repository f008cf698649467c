#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Type definitions for the spiralmech command-line layer.
"""

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import List, Optional, Tuple

from spiral_geometry import Material, SpiralSpec

SWEEP_PARAMS = ("N", "b", "h", "t", "d")


class ConfigError(ValueError):
    """Raised for missing, malformed or contradictory run configs."""


class SweepFailedError(RuntimeError):
    """Raised when every point of a sweep failed."""


class DeviceKind(Enum):
    """Which coupling chain a config runs."""

    CAPACITOR = "capacitor"
    INDUCTOR = "inductor"
    MEMBRANE = "membrane"


@dataclass(frozen=True)
class MembraneConfig:
    """Unpatterned drum over the bottom electrode."""

    radius: float  # m
    thickness: float  # m
    plate_gap_d: float  # m
    material: Material  # carries the residual stress


@dataclass(frozen=True)
class SolverConfig:
    elems_per_turn: int = 32
    n_modes: int = 6
    tolerance: float = 1e-10
    dense_dof_limit: int = 600
    max_iterations: int = 5000
    samples_per_turn: int = 64

    def solver_options(self) -> dict:
        """Keyword arguments for beam_mechanics.solve_modes."""
        return {
            "tolerance": self.tolerance,
            "dense_dof_limit": self.dense_dof_limit,
            "max_iterations": self.max_iterations,
        }


@dataclass(frozen=True)
class SweepConfig:
    param: str
    values: Tuple[float, ...]


@dataclass(frozen=True)
class RunConfig:
    """One device plus its readout circuit, solver settings and outputs."""

    name: str
    kind: DeviceKind
    spec: Optional[SpiralSpec] = None
    membrane: Optional[MembraneConfig] = None
    circuit_L: Optional[float] = None  # H, capacitor/membrane readout
    c_readout: Optional[float] = None  # F, inductor readout
    c_cavity: float = 0.0  # F
    solver: SolverConfig = field(default_factory=SolverConfig)
    output_dir: Path = Path("out")
    formats: Tuple[str, ...] = ("csv", "json", "svg")
    sweep: Optional[SweepConfig] = None
    fd_relative_step: float = 1e-4
    source: Optional[Path] = None

    def wants(self, fmt: str) -> bool:
        return fmt in self.formats

    def output_path(self, suffix: str) -> Path:
        return self.output_dir / f"{self.name}_{suffix}"


@dataclass
class RunMetrics:
    """Timing and bookkeeping of one CLI run."""

    total_time: float = 0.0
    n_points: int = 0
    n_failed: int = 0
    outputs: List[Path] = field(default_factory=list)
