#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Run-config parsing.

Run configs are JSON documents with unit-suffixed keys, read through the
project's YAML loader and layered over the defaults in config.yml (after
any SPIRALMECH_* shell overrides):

    {
      "name": "row2",
      "device": {"b_nm": 2000, "h_nm": 100, "t_nm": 200, "d_nm": 100,
                 "n_turns": 5, "r_in_nm": 1000, "boundary": "OuterClamped"},
      "material": {"youngs_gpa": 70},
      "circuit": {"l0_nH": 70},
      "solver": {"elems_per_turn": 32, "n_modes": 6, "tolerance": 1e-10},
      "outputs": {"directory": "out", "formats": ["csv", "json", "svg"]},
      "sweep": {"param": "N", "values": [5, 10, 20]}
    }

A "membrane" section (radius_nm plus stress_mpa or target_f_khz) turns the
device into the unpatterned drum baseline.
"""

from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from config_loader import _deep_get, apply_env_overrides, load_config
from spiral_geometry import NM, InvalidSpecError, Material, SpiralSpec
from beam_mechanics import membrane_stress_for_frequency

from .types import (
    SWEEP_PARAMS,
    ConfigError,
    DeviceKind,
    MembraneConfig,
    RunConfig,
    SolverConfig,
    SweepConfig,
)


def _number(section: Dict[str, Any], key: str, default: Any = None, required: bool = False) -> Any:
    value = section.get(key, default)
    if value is None:
        if required:
            raise ConfigError(f"Missing required key '{key}'")
        return None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"Key '{key}' must be a number, got {value!r}")
    return float(value)


def _section(raw: Dict[str, Any], key: str) -> Dict[str, Any]:
    value = raw.get(key, {})
    if value is None:
        return {}
    if not isinstance(value, dict):
        raise ConfigError(f"Section '{key}' must be an object")
    return value


def parse_solver(raw: Dict[str, Any], defaults: Dict[str, Any]) -> SolverConfig:
    solver = _section(raw, "solver")
    try:
        return SolverConfig(
            elems_per_turn=int(solver.get("elems_per_turn", _deep_get(defaults, "solver.elems_per_turn", 32))),
            n_modes=int(solver.get("n_modes", _deep_get(defaults, "solver.n_modes", 6))),
            tolerance=float(solver.get("tolerance", _deep_get(defaults, "solver.eigen_tolerance", 1e-10))),
            dense_dof_limit=int(solver.get("dense_dof_limit", _deep_get(defaults, "solver.dense_dof_limit", 600))),
            max_iterations=int(solver.get("max_iterations", _deep_get(defaults, "solver.max_iterations", 5000))),
            samples_per_turn=int(
                solver.get("samples_per_turn", _deep_get(defaults, "geometry.samples_per_turn", 64))
            ),
        )
    except (TypeError, ValueError) as e:
        raise ConfigError(f"Invalid solver section: {e}") from e


def _parse_sweep(raw: Dict[str, Any]) -> Optional[SweepConfig]:
    if "sweep" not in raw:
        return None
    sweep = _section(raw, "sweep")
    param = str(sweep.get("param", ""))
    if param not in SWEEP_PARAMS:
        raise ConfigError(f"Sweep parameter must be one of {SWEEP_PARAMS}, got {param!r}")
    values = sweep.get("values")
    if not isinstance(values, list) or not values:
        raise ConfigError("Sweep needs a non-empty 'values' list")
    try:
        return SweepConfig(param=param, values=tuple(float(v) for v in values))
    except (TypeError, ValueError) as e:
        raise ConfigError(f"Sweep values must be numbers: {e}") from e


def parse_run_config(
    raw: Dict[str, Any],
    defaults: Optional[Dict[str, Any]] = None,
    name: str = "run",
    out_dir: Optional[str | Path] = None,
    source: Optional[Path] = None,
) -> RunConfig:
    """
    Validate a run-config mapping.

    Args:
        raw: Parsed JSON document
        defaults: Project defaults (config.yml with SPIRALMECH_* overrides);
            loaded when omitted
        name: Fallback run name
        out_dir: Overrides outputs.directory
        source: Path the config came from

    Returns:
        RunConfig

    Raises:
        ConfigError: Missing keys, wrong types, or not exactly one of
            l0_nH / c_readout_fF
    """
    if not isinstance(raw, dict):
        raise ConfigError("Config root must be an object")
    if defaults is None:
        try:
            defaults = apply_env_overrides(load_config())
        except ValueError as e:
            raise ConfigError(str(e)) from e

    device = _section(raw, "device")
    circuit = _section(raw, "circuit")
    outputs = _section(raw, "outputs")
    membrane_raw = raw.get("membrane")

    try:
        material = Material.from_config(defaults, _section(raw, "material"))
    except (InvalidSpecError, TypeError, ValueError) as e:
        raise ConfigError(f"Invalid material section: {e}") from e

    l0_nH = _number(circuit, "l0_nH")
    c_readout_fF = _number(circuit, "c_readout_fF")
    if (l0_nH is None) == (c_readout_fF is None):
        raise ConfigError("Circuit must give exactly one of 'l0_nH' (capacitor) or 'c_readout_fF' (inductor)")
    c_cavity = _number(circuit, "c_cavity_fF", _deep_get(defaults, "electromechanics.c_cavity_fF", 0.0)) * 1e-15

    spec = None
    membrane = None
    if membrane_raw is not None:
        if not isinstance(membrane_raw, dict):
            raise ConfigError("Section 'membrane' must be an object")
        if l0_nH is None:
            raise ConfigError("Membrane baseline is a capacitor: give 'l0_nH'")
        kind = DeviceKind.MEMBRANE
        radius = _number(membrane_raw, "radius_nm", _deep_get(defaults, "membrane.radius_nm", 12000.0)) * NM
        stress_mpa = _number(membrane_raw, "stress_mpa")
        if stress_mpa is None:
            target_khz = _number(
                membrane_raw, "target_f_khz", _deep_get(defaults, "membrane.target_f_khz", 6200.0)
            )
            sigma = membrane_stress_for_frequency(radius, target_khz * 1e3, material.density_rho)
        else:
            sigma = stress_mpa * 1e6
        membrane = MembraneConfig(
            radius=radius,
            thickness=_number(device, "h_nm", required=True) * NM,
            plate_gap_d=_number(device, "d_nm", required=True) * NM,
            material=material.with_stress(sigma),
        )
    else:
        kind = DeviceKind.CAPACITOR if l0_nH is not None else DeviceKind.INDUCTOR
        default_boundary = "outer_clamped" if kind is DeviceKind.CAPACITOR else "both_clamped"
        try:
            spec = SpiralSpec.from_nm(
                b_nm=_number(device, "b_nm", required=True),
                h_nm=_number(device, "h_nm", required=True),
                t_nm=_number(device, "t_nm", required=True),
                d_nm=_number(device, "d_nm", 100.0),
                n_turns=_number(device, "n_turns", required=True),
                r_in_nm=_number(device, "r_in_nm", _deep_get(defaults, "geometry.inner_radius_nm", 1000.0)),
                material=material,
                boundary=device.get("boundary", default_boundary),
            )
        except InvalidSpecError as e:
            # t <= 0 is a geometry collision, reported by the geometry layer
            if type(e) is not InvalidSpecError:
                raise
            raise ConfigError(f"Invalid device section: {e}") from e

    formats = outputs.get("formats", _deep_get(defaults, "outputs.formats", ["csv", "json", "svg"]))
    if not isinstance(formats, list) or not all(isinstance(f, str) for f in formats):
        raise ConfigError("outputs.formats must be a list of strings")
    directory = out_dir or outputs.get("directory") or _deep_get(defaults, "outputs.directory", "out")

    return RunConfig(
        name=str(raw.get("name", name)),
        kind=kind,
        spec=spec,
        membrane=membrane,
        circuit_L=None if l0_nH is None else l0_nH * 1e-9,
        c_readout=None if c_readout_fF is None else c_readout_fF * 1e-15,
        c_cavity=c_cavity,
        solver=parse_solver(raw, defaults),
        output_dir=Path(directory),
        formats=tuple(formats),
        sweep=_parse_sweep(raw),
        fd_relative_step=float(_deep_get(defaults, "inductor.fd_relative_step", 1e-4)),
        source=source,
    )


def load_run_config(path: str | Path, out_dir: Optional[str | Path] = None) -> RunConfig:
    """
    Read a JSON run config from disk.

    Raises:
        ConfigError: Missing file, unreadable document or invalid content
    """
    path = Path(path)
    try:
        raw = load_config(path)
    except FileNotFoundError as e:
        raise ConfigError(str(e)) from e
    except ValueError as e:
        raise ConfigError(f"{path}: {e}") from e
    except yaml.YAMLError as e:
        raise ConfigError(f"{path}: cannot parse config: {e}") from e
    return parse_run_config(raw, name=path.stem, out_dir=out_dir, source=path)
