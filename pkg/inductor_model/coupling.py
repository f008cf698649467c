#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Inductive coupling of a suspended spiral: the in-plane "pinching" mode
changes the winding's self-inductance and so the LC cavity frequency.
"""

from typing import Optional

from scipy.constants import hbar

from beam_mechanics import (
    ModalSolution,
    Polarization,
    ProfileComponent,
    deformation_profile,
    modal_mass_and_xzp,
    solve_spiral,
)
from electromechanics import ModePolarizationError, cavity_frequency
from spiral_geometry import Boundary, InvalidSpecError, SpiralSpec

from .inductance import inductance_derivative, spiral_inductance
from .types import InductorResult


def inductor_g0(
    spec: SpiralSpec,
    c_readout: float,
    elems_per_turn: int = 32,
    n_modes: int = 6,
    relative_step: float = 1e-4,
    solution: Optional[ModalSolution] = None,
    label: str = "",
    **solver_options,
) -> InductorResult:
    """
    g0 of the fundamental in-plane mode of a both-ends-clamped spiral.

    Args:
        spec: Inductor design (BothClamped, h > b)
        c_readout: Readout capacitance closing the LC loop (F)
        elems_per_turn: Beam mesh density
        n_modes: Modes to solve for
        relative_step: Finite-difference step relative to d_avg
        solution: Reuse an existing modal solution of `spec`
        label: Name carried into the result

    Returns:
        InductorResult

    Raises:
        InvalidSpecError: Inductor not clamped at both ends
        ModePolarizationError: Fundamental is not in-plane
    """
    if spec.boundary is not Boundary.BOTH_CLAMPED:
        raise InvalidSpecError("A suspended inductor must be clamped at both ends to carry current")
    if solution is None:
        solution = solve_spiral(spec, elems_per_turn, n_modes, **solver_options)
    mode = solution.fundamental
    if mode.polarization is not Polarization.IN_PLANE:
        raise ModePolarizationError(
            f"Fundamental mode is {mode.polarization.value} "
            f"(energy_fraction_z={mode.energy_fraction_z:.3f}); inductive pinching "
            "needs an in-plane mode, choose h > b"
        )

    m_eff, x_zp = modal_mass_and_xzp(solution, 0, hbar)
    profile = deformation_profile(solution, 0, component=ProfileComponent.IN_PLANE_RADIAL)
    dl_dx = inductance_derivative(spec, profile.theta, profile.drho, relative_step=relative_step)

    l_self = spiral_inductance(spec)
    omega = cavity_frequency(l_self, c_readout)
    pull = -omega / (2.0 * l_self) * dl_dx
    return InductorResult(
        L_self=l_self,
        dL_dx=dl_dx,
        omega_cav=omega,
        pull_G=pull,
        g0=x_zp * abs(pull),
        mode_frequency=mode.frequency,
        c_readout=c_readout,
        m_eff=m_eff,
        x_zp=x_zp,
        label=label,
    )
