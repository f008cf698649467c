#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Single-design evaluation shared by the commands and the sweep workers.
"""

from typing import Optional, Union

from beam_mechanics import ModalSolution, solve_spiral
from electromechanics import CouplingResult, compute_g0, membrane_g0
from inductor_model import InductorResult, inductor_g0
from spiral_geometry import SpiralSpec

from .types import ConfigError, DeviceKind, RunConfig

Result = Union[CouplingResult, InductorResult]


def solve(cfg: RunConfig, spec: Optional[SpiralSpec] = None) -> ModalSolution:
    """Modal solution of the config's spiral (or `spec` in its place)."""
    spec = spec or cfg.spec
    if spec is None:
        raise ConfigError(f"Config '{cfg.name}' describes no spiral")
    s = cfg.solver
    return solve_spiral(spec, s.elems_per_turn, s.n_modes, **s.solver_options())


def evaluate(
    cfg: RunConfig,
    spec: Optional[SpiralSpec] = None,
    solution: Optional[ModalSolution] = None,
) -> Result:
    """
    Coupling result of one design.

    Args:
        cfg: Run config (device kind, circuit, solver settings)
        spec: Replacement spiral, e.g. one sweep point
        solution: Already-solved modes of that spiral

    Returns:
        CouplingResult (capacitor, membrane) or InductorResult
    """
    if cfg.kind is DeviceKind.MEMBRANE:
        m = cfg.membrane
        return membrane_g0(
            m.radius, m.thickness, m.plate_gap_d, m.material, cfg.circuit_L, cfg.c_cavity, label=cfg.name
        )

    spec = spec or cfg.spec
    solution = solution or solve(cfg, spec)
    if cfg.kind is DeviceKind.INDUCTOR:
        return inductor_g0(
            spec,
            cfg.c_readout,
            relative_step=cfg.fd_relative_step,
            solution=solution,
            label=cfg.name,
        )
    return compute_g0(
        spec,
        cfg.circuit_L,
        c_cavity=cfg.c_cavity,
        samples_per_turn=cfg.solver.samples_per_turn,
        solution=solution,
        label=cfg.name,
    )
