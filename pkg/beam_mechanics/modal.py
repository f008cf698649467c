#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Modal quantities derived from a solved system: reference node, motional
mass, zero-point displacement and the polar deformation profile.
"""

from typing import Optional

import numpy as np
from scipy.constants import hbar as HBAR

from spiral_geometry import SpiralCurve

from .types import (
    DOF_PER_NODE,
    DeformationProfile,
    DegenerateModeError,
    ModalSolution,
    Polarization,
    ProfileComponent,
)


def _component_for(solution: ModalSolution, mode_index: int) -> ProfileComponent:
    if solution.modes[mode_index].polarization is Polarization.IN_PLANE:
        return ProfileComponent.IN_PLANE_RADIAL
    return ProfileComponent.OUT_OF_PLANE


def nodal_displacement(
    solution: ModalSolution, mode_index: int, component: Optional[ProfileComponent] = None
) -> np.ndarray:
    """
    Per-node transverse displacement of a mode.

    Out-of-plane and mixed modes are sampled along the plane normal,
    in-plane modes along the local radial direction.
    """
    if not 0 <= mode_index < len(solution.modes):
        raise IndexError(f"Mode index {mode_index} out of range (have {len(solution.modes)})")
    component = component or _component_for(solution, mode_index)
    mesh = solution.mesh
    translations = solution.modes[mode_index].shape.reshape(-1, DOF_PER_NODE)[:, :3]
    if component is ProfileComponent.IN_PLANE_RADIAL:
        return np.einsum("ij,ij->i", translations, mesh.node_radial)
    return translations @ mesh.plane_normal


def reference_node(
    solution: ModalSolution, mode_index: int, component: Optional[ProfileComponent] = None
) -> int:
    """Node of maximum |transverse displacement|; ties go to the lowest index."""
    values = np.abs(nodal_displacement(solution, mode_index, component))
    peak = float(values.max())
    if not peak > 0.0 or peak < 1e-12 * np.linalg.norm(solution.modes[mode_index].shape):
        raise DegenerateModeError(f"Mode {mode_index} has no transverse displacement")
    return int(np.argmax(values))


def modal_mass_and_xzp(
    solution: ModalSolution, mode_index: int, hbar: Optional[float] = None
) -> tuple[float, float]:
    """
    Motional mass and zero-point displacement of a mode.

    With the shape M-normalized, rescaling it to unit displacement at the
    reference node gives m_eff = 1 / phi_ref^2.

    Args:
        solution: Solved modal system
        mode_index: Mode to evaluate
        hbar: Reduced Planck constant (defaults to the solution's)

    Returns:
        (m_eff [kg], x_zp [m])

    Raises:
        DegenerateModeError: Mode has zero transverse displacement
    """
    hbar = solution.hbar if hbar is None else hbar
    node = reference_node(solution, mode_index)
    phi_ref = float(nodal_displacement(solution, mode_index)[node])
    mode = solution.modes[mode_index]

    shape = mode.shape / phi_ref
    m_eff = float(shape @ (solution.system.M @ shape))
    if mode.omega <= 0.0:
        raise DegenerateModeError(f"Mode {mode_index} has zero frequency")
    return m_eff, zero_point_displacement(m_eff, mode.omega, hbar)


def zero_point_displacement(m_eff: float, omega: float, hbar: float = HBAR) -> float:
    """x_zp = sqrt(hbar / (2 m Omega))."""
    if m_eff <= 0.0 or omega <= 0.0:
        raise ValueError(f"m_eff and omega must be > 0, got {m_eff}, {omega}")
    return float(np.sqrt(hbar / (2.0 * m_eff * omega)))


def deformation_profile(
    solution: ModalSolution,
    mode_index: int,
    curve: Optional[SpiralCurve] = None,
    component: Optional[ProfileComponent] = None,
) -> DeformationProfile:
    """
    Polar deformation profile of a mode, +1 at the reference node.

    Args:
        solution: Solved modal system
        mode_index: Mode to sample
        curve: If given, the profile is interpolated onto its theta grid
        component: Override the displacement component; defaults to the
            plane normal, or radial for in-plane modes

    Returns:
        DeformationProfile
    """
    component = component or _component_for(solution, mode_index)
    values = nodal_displacement(solution, mode_index, component)
    node = reference_node(solution, mode_index, component)
    drho = values / values[node]

    theta = solution.mesh.node_theta
    if curve is not None:
        drho = np.interp(curve.theta, theta, drho)
        theta = curve.theta
    return DeformationProfile(theta=np.array(theta, dtype=float), drho=drho, component=component)

