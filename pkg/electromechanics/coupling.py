#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Single-photon coupling g0 = x_zp * |d omega / dx| for spiral capacitors and
the unpatterned membrane baseline, plus the scaling and cooperativity
comparisons built on it.
"""

from typing import Iterable, Optional, Sequence

import numpy as np
from scipy.constants import epsilon_0, hbar

from beam_mechanics import (
    ModalSolution,
    Polarization,
    deformation_profile,
    membrane_modal_quantities,
    modal_mass_and_xzp,
    solve_spiral,
    zero_point_displacement,
)
from spiral_geometry import Material, SpiralSpec, build_spiral

from .capacitance import capacitance, cavity_frequency, frequency_pull
from .types import CouplingResult, ModePolarizationError


def compute_g0(
    spec: SpiralSpec,
    circuit_L: float,
    c_cavity: float = 0.0,
    elems_per_turn: int = 32,
    n_modes: int = 6,
    samples_per_turn: int = 64,
    solution: Optional[ModalSolution] = None,
    label: str = "",
    **solver_options,
) -> CouplingResult:
    """
    Full chain geometry -> modes -> m_eff, x_zp -> C, pull -> g0.

    Args:
        spec: Capacitor design
        circuit_L: Lumped readout inductance (H)
        c_cavity: Fixed readout-cavity capacitance in parallel with the spiral (F)
        elems_per_turn: Beam mesh density
        n_modes: Modes to solve for
        samples_per_turn: Centerline sampling used for the quadratures
        solution: Reuse an existing modal solution of `spec`
        label: Name carried into the result

    Returns:
        CouplingResult of the fundamental mode

    Raises:
        ModePolarizationError: Fundamental is not out-of-plane (e.g. b < h)
    """
    if solution is None:
        solution = solve_spiral(spec, elems_per_turn, n_modes, **solver_options)
    mode = solution.fundamental
    if mode.polarization is not Polarization.OUT_OF_PLANE:
        raise ModePolarizationError(
            f"Fundamental mode is {mode.polarization.value} "
            f"(energy_fraction_z={mode.energy_fraction_z:.3f}); capacitive coupling "
            "needs an out-of-plane mode, choose b > h"
        )

    m_eff, x_zp = modal_mass_and_xzp(solution, 0, hbar)
    curve = build_spiral(spec, samples_per_turn)
    profile = deformation_profile(solution, 0, curve)

    c0 = capacitance(curve, spec.strip_width_b, spec.plate_gap_d)
    dc_dx, pull = frequency_pull(curve, spec, profile, circuit_L, c_cavity)
    return CouplingResult(
        C0=c0,
        dC_dx=dc_dx,
        omega_cav=cavity_frequency(circuit_L, c0 + c_cavity),
        pull_G=pull,
        g0=x_zp * abs(pull),
        circuit_L=circuit_L,
        omega_m=mode.omega,
        m_eff=m_eff,
        x_zp=x_zp,
        plate_gap_d=spec.plate_gap_d,
        c_cavity=c_cavity,
        label=label,
    )


def membrane_g0(
    radius: float,
    thickness: float,
    plate_gap_d: float,
    material: Material,
    circuit_L: float,
    c_cavity: float = 0.0,
    label: str = "membrane",
) -> CouplingResult:
    """
    g0 of the unpatterned prestressed drum over the same electrode.
    The drum plate is itself the readout electrode, so `c_cavity` is
    normally 0 here.

    dC/dx = eta * C0 / d with eta = 2 J1(k)/k the mean displacement of the
    center-normalized fundamental.
    """
    drum = membrane_modal_quantities(radius, thickness, material)
    c0 = float(epsilon_0 * np.pi * radius**2 / plate_gap_d)
    dc_dx = drum.participation * c0 / plate_gap_d
    c_total = c0 + c_cavity
    omega_cav = cavity_frequency(circuit_L, c_total)
    pull = -omega_cav / (2.0 * c_total) * dc_dx
    x_zp = zero_point_displacement(drum.m_eff, drum.omega, hbar)
    return CouplingResult(
        C0=c0,
        dC_dx=dc_dx,
        omega_cav=omega_cav,
        pull_G=pull,
        g0=x_zp * abs(pull),
        circuit_L=circuit_L,
        omega_m=drum.omega,
        m_eff=drum.m_eff,
        x_zp=x_zp,
        plate_gap_d=plate_gap_d,
        c_cavity=c_cavity,
        label=label,
    )


def rigid_piston_g0(result: CouplingResult) -> float:
    """
    Upper bound on g0: the same mass and frequency moving as a rigid plate
    (drho = 1 everywhere, so dC/dx = C0 / d).
    """
    if not result.plate_gap_d > 0:
        raise ValueError("Result carries no plate gap")
    return result.x_zp * result.omega_cav / (2.0 * result.c_total) * result.C0 / result.plate_gap_d


def fit_exponent(values_x: Sequence[float], values_y: Sequence[float]) -> float:
    """Least-squares slope of log y against log x."""
    x = np.asarray(values_x, dtype=float)
    y = np.asarray(values_y, dtype=float)
    if x.size < 3 or x.shape != y.shape:
        raise ValueError(f"Need >= 3 matching points, got {x.size} and {y.size}")
    if np.any(x <= 0) or np.any(y <= 0):
        raise ValueError("Power-law fit needs positive data")
    slope, _ = np.polyfit(np.log(x), np.log(y), 1)
    return float(slope)


def sqrt_n_exponent(
    base_spec: SpiralSpec, n_list: Iterable[float], circuit_L: float, **g0_options
) -> float:
    """
    Power-law exponent alpha of g0 ~ N^alpha with all other parameters fixed.

    Any failed solve propagates.
    """
    turns = [float(n) for n in n_list]
    if len(turns) < 3:
        raise ValueError(f"Need >= 3 turn counts, got {len(turns)}")
    g0 = [compute_g0(base_spec.replace(turns_N=n), circuit_L, **g0_options).g0 for n in turns]
    return fit_exponent(turns, g0)


def cooperativity_ratio(a: CouplingResult, b: CouplingResult) -> float:
    """(g0_a / g0_b)^2, the relative single-photon cooperativity."""
    if b.g0 == 0:
        raise ValueError("Reference design has g0 = 0")
    return float((a.g0 / b.g0) ** 2)
