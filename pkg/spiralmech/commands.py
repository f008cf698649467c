#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Implementations of the spiralmech commands.

Every command writes its files under the run's output directory, prints
progress and returns RunMetrics; errors propagate to the CLI, which maps
them to exit codes.
"""

import csv
import json
import time
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np

from beam_mechanics import deformation_profile, write_modes_csv, write_profile_csv, write_profile_svg
from config_loader import _deep_get, load_config
from electromechanics import CouplingResult, rigid_piston_g0
from spectrum_analysis import (
    GuessFailureError,
    SpectrumValidationError,
    fit_lorentzian,
    load_spectrum,
    synthetic_spectrum,
    write_fit_report,
    write_fit_svg,
    write_spectrum_csv,
)
from spiral_geometry import build_spiral, mask_polygon, write_mask_csv, write_mask_svg

from .logger import MarkdownLogger
from .runner import evaluate, solve
from .sweep import run_sweep, sweep_columns
from .table1 import run_table1, write_table1_csv, write_table1_markdown
from .types import ConfigError, DeviceKind, RunConfig, RunMetrics, SweepFailedError

# Reference resonances for the bundled fixtures: (f0 Hz, Q, window Hz)
NATURAL_FIXTURE = (21.6e3, 3600.0, (21.0e3, 22.2e3))
DRIVEN_FIXTURE = (21.5e3, 148.0, (20.0e3, 23.0e3))


def _banner(title: str) -> None:
    print("=" * 60)
    print(title)
    print("=" * 60)


def _wrote(metrics: RunMetrics, path: Path) -> None:
    metrics.outputs.append(path)
    print(f"✓ wrote {path}")


def _write_json(data: Dict[str, Any], path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2, sort_keys=True)
        f.write("\n")
    return path


def _finish(
    command: str,
    metrics: RunMetrics,
    start: float,
    logger: Optional[MarkdownLogger],
    parameters: Dict[str, Any],
    results: Any,
    config_path: Optional[Path] = None,
) -> RunMetrics:
    metrics.total_time = time.perf_counter() - start
    if logger is not None:
        logger.log_run(command, parameters, results, metrics, config_path)
    return metrics


def _parameters(cfg: RunConfig) -> Dict[str, Any]:
    params: Dict[str, Any] = {"name": cfg.name, "kind": cfg.kind.value}
    if cfg.spec is not None:
        s = cfg.spec
        params.update(
            {
                "b_nm": s.strip_width_b * 1e9,
                "h_nm": s.thickness_h * 1e9,
                "t_nm": s.gap_t * 1e9,
                "d_nm": s.plate_gap_d * 1e9,
                "n_turns": s.turns_N,
                "r_in_nm": s.inner_radius * 1e9,
                "boundary": s.boundary.value,
                "elems_per_turn": cfg.solver.elems_per_turn,
            }
        )
    if cfg.membrane is not None:
        m = cfg.membrane
        params.update(
            {
                "radius_nm": m.radius * 1e9,
                "h_nm": m.thickness * 1e9,
                "d_nm": m.plate_gap_d * 1e9,
                "stress_mpa": m.material.residual_stress_sigma * 1e-6,
            }
        )
    return params


def cmd_modes(cfg: RunConfig, logger: Optional[MarkdownLogger] = None) -> RunMetrics:
    """Modal table CSV, deformation profile CSV and SVG of the fundamental."""
    start = time.perf_counter()
    metrics = RunMetrics(n_points=1)
    _banner(f"MODES: {cfg.name}")

    if cfg.kind is DeviceKind.MEMBRANE:
        result = evaluate(cfg)
        path = cfg.output_path("modes.csv")
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(["mode", "f_hz", "polarization", "energy_fraction_z"])
            writer.writerow([1, f"{result.f_mech:.6f}", "OutOfPlane", f"{1.0:.6f}"])
        _wrote(metrics, path)
        results: Any = [{"mode": 1, "f_hz": result.f_mech}]
    else:
        solution = solve(cfg)
        for i, mode in enumerate(solution.modes, start=1):
            print(f"  mode {i}: f = {mode.frequency:12.3f} Hz  {mode.polarization.value:<10} "
                  f"z-fraction {mode.energy_fraction_z:.3f}  residual {mode.residual:.1e}")
        _wrote(metrics, write_modes_csv(solution, cfg.output_path("modes.csv")))

        curve = build_spiral(cfg.spec, cfg.solver.samples_per_turn)
        profile = deformation_profile(solution, 0, curve)
        _wrote(metrics, write_profile_csv(profile, cfg.output_path("profile.csv")))
        if cfg.wants("svg"):
            svg = write_profile_svg(profile, cfg.output_path("profile.svg"), title=f"{cfg.name}: mode 1")
            _wrote(metrics, svg)
        results = [
            {"mode": i, "f_hz": m.frequency, "polarization": m.polarization.value}
            for i, m in enumerate(solution.modes, start=1)
        ]

    return _finish("modes", metrics, start, logger, _parameters(cfg), results, cfg.source)


def cmd_g0(cfg: RunConfig, logger: Optional[MarkdownLogger] = None) -> RunMetrics:
    """CouplingResult or InductorResult JSON."""
    start = time.perf_counter()
    metrics = RunMetrics(n_points=1)
    _banner(f"G0: {cfg.name}")

    result = evaluate(cfg)
    extra = {"kind": cfg.kind.value}
    if isinstance(result, CouplingResult):
        extra["rigid_piston_g0_over_2pi_hz"] = rigid_piston_g0(result) / (2.0 * np.pi)
    data = result.to_json_dict(extra)
    print(f"  g0/2π = {result.g0_over_2pi:.6g} Hz")
    _wrote(metrics, _write_json(data, cfg.output_path("g0.json")))
    return _finish("g0", metrics, start, logger, _parameters(cfg), data, cfg.source)


def cmd_sweep(
    cfg: RunConfig,
    jobs: Optional[int] = None,
    param: Optional[str] = None,
    values: Optional[List[float]] = None,
    logger: Optional[MarkdownLogger] = None,
) -> RunMetrics:
    """
    One-parameter sweep CSV.

    Raises:
        ConfigError: No sweep given in the config or on the command line
        SweepFailedError: No point succeeded
    """
    start = time.perf_counter()
    if param is None and cfg.sweep is not None:
        param = cfg.sweep.param
    if values is None and cfg.sweep is not None:
        values = list(cfg.sweep.values)
    if not param or not values:
        raise ConfigError("Sweep needs a parameter and values (config 'sweep' or --param/--values)")

    _banner(f"SWEEP: {cfg.name} over {param} = {values}")
    rows = run_sweep(cfg, param, values, jobs)
    metrics = RunMetrics(n_points=len(rows), n_failed=sum(1 for r in rows if r["error"]))
    for r in rows:
        status = "✗ " + r["error"] if r["error"] else f"✓ g0/2π = {r['g0_over_2pi_hz']:.6g} Hz"
        print(f"  {param} = {r['value']:g}: {status}")

    path = cfg.output_path(f"sweep_{param}.csv")
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=sweep_columns(cfg, param), extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    _wrote(metrics, path)

    _finish("sweep", metrics, start, logger, {**_parameters(cfg), "param": param, "values": values}, rows, cfg.source)
    if metrics.n_failed == metrics.n_points:
        raise SweepFailedError(f"All {metrics.n_points} sweep points failed; first error: {rows[0]['error']}")
    return metrics


def cmd_mask(cfg: RunConfig, logger: Optional[MarkdownLogger] = None) -> RunMetrics:
    """Fabrication mask outline as SVG and vertex CSV."""
    start = time.perf_counter()
    metrics = RunMetrics(n_points=1)
    _banner(f"MASK: {cfg.name}")
    if cfg.spec is None:
        raise ConfigError("Mask export needs a spiral device")

    curve = build_spiral(cfg.spec, cfg.solver.samples_per_turn)
    polygon = mask_polygon(curve, cfg.spec.strip_width_b)
    print(f"  {polygon.n_vertices} vertices, area {polygon.area * 1e12:.4f} µm²")
    if cfg.wants("svg"):
        _wrote(metrics, write_mask_svg(polygon, cfg.output_path("mask.svg")))
    _wrote(metrics, write_mask_csv(polygon, cfg.output_path("mask.csv")))
    results = {"n_vertices": polygon.n_vertices, "area_um2": polygon.area * 1e12}
    return _finish("mask", metrics, start, logger, _parameters(cfg), results, cfg.source)


def cmd_fit(
    spectrum_path: str | Path,
    out_dir: Path,
    f_min: Optional[float] = None,
    f_max: Optional[float] = None,
    label: str = "natural",
    formats: tuple = ("csv", "json", "svg"),
    logger: Optional[MarkdownLogger] = None,
) -> RunMetrics:
    """
    Fit one resonance inside [f_min, f_max] and write the report JSON.

    Raises:
        GuessFailureError: No interior peak in the window (message names it)
    """
    start = time.perf_counter()
    metrics = RunMetrics(n_points=1)
    spectrum_path = Path(spectrum_path)
    _banner(f"FIT: {spectrum_path.name}")

    defaults = load_config()
    spectrum = load_spectrum(spectrum_path, label)
    window = f"[{f_min if f_min is not None else '-inf'}, {f_max if f_max is not None else 'inf'}] Hz"
    try:
        windowed = spectrum.window(f_min, f_max)
        result = fit_lorentzian(
            windowed,
            xtol=float(_deep_get(defaults, "fit.xtol", 1e-9)),
            max_iterations=int(_deep_get(defaults, "fit.max_iterations", 200)),
        )
    except (GuessFailureError, SpectrumValidationError) as e:
        raise GuessFailureError(f"Fit window {window}: {e}") from e

    mark = "✓" if result.converged else "✗"
    print(f"  {mark} f0 = {result.f0:.3f} Hz, Q = {result.Q:.5g}, converged={result.converged}")
    _wrote(metrics, write_fit_report(result, out_dir / f"{spectrum_path.stem}_fit.json"))
    if "svg" in formats:
        _wrote(metrics, write_fit_svg(windowed, result, out_dir / f"{spectrum_path.stem}_fit.svg"))
    params = {"spectrum": str(spectrum_path), "window": window, "label": label}
    return _finish("fit", metrics, start, logger, params, result.to_json_dict())


def cmd_synth(
    out_dir: Path, seed: int = 0, noise: Optional[float] = None, logger: Optional[MarkdownLogger] = None
) -> RunMetrics:
    """Natural- and driven-response fixtures `natural.csv` and `driven.csv`."""
    start = time.perf_counter()
    metrics = RunMetrics(n_points=2)
    _banner("SYNTH: resonance fixtures")
    defaults = load_config()
    noise = float(_deep_get(defaults, "fit.noise_fraction", 0.01)) if noise is None else noise
    n_points = int(_deep_get(defaults, "fit.n_points", 4001))

    for offset, (name, (f0, q, (lo, hi))) in enumerate(
        [("natural", NATURAL_FIXTURE), ("driven", DRIVEN_FIXTURE)]
    ):
        spectrum = synthetic_spectrum(
            f0, q, lo, hi, n_points=n_points, noise=noise, seed=seed + offset, label=name
        )
        _wrote(metrics, write_spectrum_csv(spectrum, out_dir / f"{name}.csv"))
    params = {"seed": seed, "noise": noise, "n_points": n_points}
    return _finish("synth", metrics, start, logger, params, None)


def cmd_table1(out_dir: Path, jobs: Optional[int] = None, logger: Optional[MarkdownLogger] = None) -> RunMetrics:
    """Run all table rows and write the CSV and markdown comparison."""
    start = time.perf_counter()
    _banner("REFERENCE TABLE REGRESSION")
    rows, summary = run_table1(jobs=jobs, out_dir=out_dir)
    metrics = RunMetrics(n_points=len(rows), n_failed=sum(1 for r in rows if r.get("error")))
    for r in rows:
        ok = r["f_pass"] and r["g0_pass"]
        print(f"  {'✓' if ok else '✗'} {r['row']}: f = {r['f_khz']} kHz, g0/2π = {r['g0_over_2pi_hz']} Hz")
    _wrote(metrics, write_table1_csv(rows, out_dir / "table1.csv"))
    _wrote(metrics, write_table1_markdown(rows, summary, out_dir / "table1.md"))
    return _finish("table1", metrics, start, logger, {"jobs": jobs}, {"rows": rows, "summary": summary})
