#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Regression against the reference table of typical spiral-capacitor
couplings: the unpatterned drum plus N = 5, 10, 20 spirals.

Each row is checked against a tolerance band (frequency +-35 %, g0 within
a factor of 2); the summary checks orderings, the power-law exponent of g0
in N and the g0 gains over the drum.
"""

import csv
import multiprocessing
from dataclasses import dataclass
from multiprocessing import Pool
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from electromechanics import CouplingResult, fit_exponent

from .config import load_run_config
from .runner import evaluate
from .types import DeviceKind, RunConfig

CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs"
FREQUENCY_BAND = 0.35
G0_FACTOR = 2.0
EXPONENT_RANGE = (0.3, 0.8)


@dataclass(frozen=True)
class Table1Row:
    name: str
    n_turns: int
    f_khz: float
    g0_over_2pi_hz: float


TABLE1_ROWS = (
    Table1Row("table1_row1", 0, 6.2e3, 60.0),
    Table1Row("table1_row2", 5, 20.96, 418.0),
    Table1Row("table1_row3", 10, 10.5, 701.0),
    Table1Row("table1_row4", 20, 1.63, 941.0),
)
# g0 gains of the N = 5 and N = 10 spirals over the drum
REFERENCE_GAINS = {"table1_row2": 7.0, "table1_row3": 12.0}

CSV_COLUMNS = [
    "row", "n_turns", "f_khz", "f_target_khz", "f_pass",
    "g0_over_2pi_hz", "g0_target_hz", "g0_pass", "m_eff_kg", "c0_fF",
]


def within_factor(value: float, target: float, factor: float) -> bool:
    return target / factor <= value <= target * factor


def _evaluate_row(cfg: RunConfig) -> Tuple[str, Optional[CouplingResult], str]:
    try:
        return cfg.name, evaluate(cfg), ""
    except Exception as e:  # reported in the table
        return cfg.name, None, f"{type(e).__name__}: {e}"


def run_table1(
    config_dir: Path = CONFIG_DIR, jobs: Optional[int] = None, out_dir: Optional[Path] = None
) -> Tuple[List[Dict[str, Any]], Dict[str, Any]]:
    """
    Evaluate all rows and the summary checks.

    Returns:
        (rows, summary); every check carries a boolean `*_pass`
    """
    configs = [load_run_config(config_dir / f"{row.name}.json", out_dir) for row in TABLE1_ROWS]
    jobs = max(1, min(jobs or multiprocessing.cpu_count(), len(configs)))
    if jobs == 1:
        evaluated = [_evaluate_row(c) for c in configs]
    else:
        with Pool(jobs) as pool:
            evaluated = pool.map(_evaluate_row, configs)
    results = {name: result for name, result, _ in evaluated}
    errors = {name: err for name, _, err in evaluated if err}

    rows: List[Dict[str, Any]] = []
    for target, cfg in zip(TABLE1_ROWS, configs):
        result = results[target.name]
        row: Dict[str, Any] = {
            "row": target.name,
            "n_turns": target.n_turns,
            "f_target_khz": target.f_khz,
            "g0_target_hz": target.g0_over_2pi_hz,
            "error": errors.get(target.name, ""),
        }
        if result is not None:
            f_khz = result.f_mech * 1e-3
            g0 = result.g0_over_2pi
            band = 1e-6 if cfg.kind is DeviceKind.MEMBRANE else FREQUENCY_BAND
            row.update(
                {
                    "f_khz": f_khz,
                    "f_pass": abs(f_khz / target.f_khz - 1.0) <= band,
                    "g0_over_2pi_hz": g0,
                    "g0_pass": within_factor(g0, target.g0_over_2pi_hz, G0_FACTOR),
                    "m_eff_kg": result.m_eff,
                    "c0_fF": result.C0 * 1e15,
                }
            )
        else:
            row.update({"f_khz": "", "f_pass": False, "g0_over_2pi_hz": "", "g0_pass": False})
        rows.append(row)

    return rows, _summary(rows, results)


def _summary(rows: List[Dict[str, Any]], results: Dict[str, Optional[CouplingResult]]) -> Dict[str, Any]:
    spirals = [r for r in rows if r["n_turns"] > 0]
    summary: Dict[str, Any] = {}
    if all(r["g0_over_2pi_hz"] != "" for r in spirals):
        f = [r["f_khz"] for r in spirals]
        g = [r["g0_over_2pi_hz"] for r in spirals]
        alpha = fit_exponent([r["n_turns"] for r in spirals], g)
        summary.update(
            {
                "f_decreasing_pass": all(a > b for a, b in zip(f, f[1:])),
                "g0_increasing_pass": all(a < b for a, b in zip(g, g[1:])),
                "alpha": alpha,
                "alpha_pass": EXPONENT_RANGE[0] <= alpha <= EXPONENT_RANGE[1],
            }
        )
    drum = results.get("table1_row1")
    for name, gain in REFERENCE_GAINS.items():
        spiral = results.get(name)
        if drum is not None and spiral is not None and drum.g0 > 0:
            measured = spiral.g0 / drum.g0
            summary[f"{name}_gain"] = measured
            summary[f"{name}_gain_pass"] = within_factor(measured, gain, G0_FACTOR)
    return summary


def write_table1_csv(rows: List[Dict[str, Any]], path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=CSV_COLUMNS + ["error"], extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return path


def write_table1_markdown(rows: List[Dict[str, Any]], summary: Dict[str, Any], path: Path) -> Path:
    """Comparison table with pass/fail marks."""

    def mark(ok: bool) -> str:
        return "✓" if ok else "✗"

    def num(value: Any, fmt: str) -> str:
        return format(value, fmt) if isinstance(value, float) else str(value)

    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write("# Reference table comparison\n\n")
        f.write("| Row | N | f (kHz) | target | | g0/2π (Hz) | target | |\n")
        f.write("|-----|---|---------|--------|---|------------|--------|---|\n")
        for r in rows:
            f.write(
                f"| {r['row']} | {r['n_turns']} | {num(r['f_khz'], '.4g')} | {r['f_target_khz']:g} "
                f"| {mark(r['f_pass'])} | {num(r['g0_over_2pi_hz'], '.4g')} | {r['g0_target_hz']:g} "
                f"| {mark(r['g0_pass'])} |\n"
            )
        f.write("\n## Checks\n\n")
        for key, value in summary.items():
            if key.endswith("_pass"):
                f.write(f"- {key[:-5]}: {mark(value)}\n")
            else:
                f.write(f"- {key}: {value:.4f}\n")
        errors = [r for r in rows if r.get("error")]
        if errors:
            f.write("\n## Errors\n\n")
            for r in errors:
                f.write(f"- {r['row']}: {r['error']}\n")
    return path
