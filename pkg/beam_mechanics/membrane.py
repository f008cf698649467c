#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Prestressed circular membrane: the unpatterned drum baseline.

The fundamental mode u(r) = J0(k r / R), k the first zero of J0, is
clamped at r = R and has its maximum at the center.
"""

import numpy as np
from scipy.special import j1, jn_zeros

from spiral_geometry import InvalidSpecError, Material

from .types import MembraneMode

J0_FIRST_ZERO = float(jn_zeros(0, 1)[0])  # 2.404825...


def membrane_frequency(radius: float, material: Material) -> float:
    """
    f = (k / 2 pi R) sqrt(sigma / rho).

    Raises:
        InvalidSpecError: No residual tension or non-positive radius
    """
    if not radius > 0:
        raise InvalidSpecError(f"Membrane radius must be > 0, got {radius}")
    sigma = material.residual_stress_sigma
    if not sigma > 0:
        raise InvalidSpecError(
            f"Membrane model needs tensile residual stress, got sigma={sigma} Pa"
        )
    return J0_FIRST_ZERO / (2.0 * np.pi * radius) * float(np.sqrt(sigma / material.density_rho))


def membrane_stress_for_frequency(radius: float, frequency: float, density: float) -> float:
    """Residual stress (Pa) that puts the fundamental at `frequency`."""
    if not (radius > 0 and frequency > 0 and density > 0):
        raise InvalidSpecError(
            f"radius, frequency and density must be > 0, got {radius}, {frequency}, {density}"
        )
    return density * (2.0 * np.pi * radius * frequency / J0_FIRST_ZERO) ** 2


def membrane_modal_quantities(radius: float, thickness: float, material: Material) -> MembraneMode:
    """
    Frequency, motional mass and participation of the drum fundamental.

    m_eff = M J1(k)^2 for a center-normalized shape and the mean
    displacement is 2 J1(k) / k.
    """
    if not thickness > 0:
        raise InvalidSpecError(f"Membrane thickness must be > 0, got {thickness}")
    frequency = membrane_frequency(radius, material)
    total_mass = material.density_rho * np.pi * radius**2 * thickness
    j1k = float(j1(J0_FIRST_ZERO))
    return MembraneMode(
        radius=radius,
        thickness=thickness,
        frequency=frequency,
        total_mass=float(total_mass),
        m_eff=float(total_mass * j1k**2),
        participation=2.0 * j1k / J0_FIRST_ZERO,
    )
