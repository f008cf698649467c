#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
One-parameter design sweeps executed in a process pool.

Each point is an isolated computation; results come back in input order
and are written by the parent process only.
"""

import multiprocessing
from multiprocessing import Pool
from typing import Any, Dict, List, Optional, Tuple

from electromechanics import fit_exponent
from spiral_geometry import NM, SpiralSpec

from .runner import evaluate
from .types import ConfigError, DeviceKind, RunConfig

SPEC_FIELDS = {
    "N": ("turns_N", 1.0),
    "b": ("strip_width_b", NM),
    "h": ("thickness_h", NM),
    "t": ("gap_t", NM),
    "d": ("plate_gap_d", NM),
}

CAPACITOR_COLUMNS = [
    "g0_over_2pi_hz", "c0_fF", "c_cavity_fF", "dc_dx_f_per_m", "f_cav_ghz", "pull_hz_per_m",
    "l0_nH", "f_mech_khz", "m_eff_kg", "x_zp_m", "d_nm",
]
INDUCTOR_COLUMNS = [
    "l_self_nH", "dl_dx_h_per_m", "f_cav_ghz", "g0_over_2pi_hz", "f_mech_khz",
    "c_readout_fF", "m_eff_kg", "x_zp_m",
]


def result_columns(kind: DeviceKind) -> List[str]:
    """Result keys of a sweep row, in a fixed order."""
    return list(INDUCTOR_COLUMNS if kind is DeviceKind.INDUCTOR else CAPACITOR_COLUMNS)


def swept_spec(spec: SpiralSpec, param: str, value: float) -> SpiralSpec:
    """Copy of `spec` with one parameter set (N in turns, lengths in nm)."""
    if param not in SPEC_FIELDS:
        raise ConfigError(f"Cannot sweep {param!r}")
    field_name, unit = SPEC_FIELDS[param]
    return spec.replace(**{field_name: value * unit})


def evaluate_point(task: Tuple[RunConfig, str, float]) -> Dict[str, Any]:
    """
    Pool worker: evaluate one sweep point, recording failure instead of raising.
    """
    cfg, param, value = task
    row: Dict[str, Any] = {"param": param, "value": value, "error": ""}
    try:
        result = evaluate(cfg, swept_spec(cfg.spec, param, value))
        data = result.to_json_dict()
        data.pop("label", None)
        row.update(data)
    except Exception as e:  # recorded per point
        row["error"] = f"{type(e).__name__}: {e}"
    return row


def run_sweep(cfg: RunConfig, param: str, values: List[float], jobs: Optional[int] = None) -> List[Dict[str, Any]]:
    """
    Evaluate every value of a one-parameter sweep.

    Args:
        cfg: Base run config (capacitor or inductor)
        param: One of N, b, h, t, d
        values: Parameter values (turns or nm)
        jobs: Worker processes; defaults to the processor count

    Returns:
        One row per value with all result fields, an `error` column and,
        for N sweeps, the fitted power-law exponent in `alpha`
    """
    if cfg.kind is DeviceKind.MEMBRANE or cfg.spec is None:
        raise ConfigError("Sweeps need a spiral device")
    tasks = [(cfg, param, float(v)) for v in values]
    jobs = jobs or multiprocessing.cpu_count()
    jobs = max(1, min(jobs, len(tasks)))

    if jobs == 1:
        rows = [evaluate_point(t) for t in tasks]
    else:
        with Pool(jobs) as pool:
            rows = pool.map(evaluate_point, tasks)

    if param == "N":
        ok = [r for r in rows if not r["error"]]
        alpha: Any = ""
        if len(ok) >= 3:
            alpha = fit_exponent([r["value"] for r in ok], [r["g0_over_2pi_hz"] for r in ok])
        for r in rows:
            r["alpha"] = alpha
    return rows


def sweep_columns(cfg: RunConfig, param: str) -> List[str]:
    columns = ["param", "value"] + result_columns(cfg.kind) + ["error"]
    if param == "N":
        columns.append("alpha")
    return columns
