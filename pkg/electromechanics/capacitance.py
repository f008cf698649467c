#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Parallel-plate capacitance of a spiral strip over a bottom electrode and
its derivative along a mechanical mode.

The strip is treated as a ribbon of width b following the centerline; the
local gap is d - u * drho(theta) with u > 0 moving toward the electrode.
Fringing fields are neglected.
"""

from typing import Optional, Tuple, Union

import numpy as np
from scipy.constants import epsilon_0
from scipy.integrate import trapezoid

from beam_mechanics import DeformationProfile
from spiral_geometry import SpiralCurve, SpiralSpec

from .types import ContactError

ProfileLike = Union[DeformationProfile, Tuple[np.ndarray, np.ndarray], float]


def profile_on_curve(curve: SpiralCurve, deformation: Optional[ProfileLike]) -> np.ndarray:
    """
    Sample a deformation profile on the curve's theta grid.

    Accepts a DeformationProfile, a (theta, drho) pair or a constant.
    """
    if deformation is None:
        return np.zeros(curve.n_samples)
    if isinstance(deformation, DeformationProfile):
        theta, drho = deformation.theta, deformation.drho
    elif np.isscalar(deformation):
        return np.full(curve.n_samples, float(deformation))
    else:
        theta, drho = (np.asarray(a, dtype=float) for a in deformation)
    if theta.shape == curve.theta.shape and np.array_equal(theta, curve.theta):
        return np.asarray(drho, dtype=float)
    return np.interp(curve.theta, theta, drho)


def capacitance(
    curve: SpiralCurve,
    strip_width_b: float,
    plate_gap_d: float,
    deformation: Optional[ProfileLike] = None,
    amplitude: float = 0.0,
) -> float:
    """
    C = eps0 * b * integral ds / (d - u drho).

    Args:
        curve: Spiral centerline
        strip_width_b: Strip width (m)
        plate_gap_d: Undeformed gap to the bottom electrode (m)
        deformation: Optional normalized profile drho(theta)
        amplitude: Displacement amplitude u (m), positive toward the electrode

    Returns:
        Capacitance in F

    Raises:
        ContactError: The local gap is <= 0 somewhere
    """
    if not (strip_width_b > 0 and plate_gap_d > 0):
        raise ValueError(f"b and d must be > 0, got {strip_width_b}, {plate_gap_d}")
    gap = plate_gap_d - amplitude * profile_on_curve(curve, deformation)
    if np.any(gap <= 0.0):
        worst = int(np.argmin(gap))
        raise ContactError(
            f"Spiral touches the electrode at theta={curve.theta[worst]:.4f} rad "
            f"(local gap {gap[worst]:.3e} m)"
        )
    return float(epsilon_0 * strip_width_b * trapezoid(1.0 / gap, curve.cumulative_arc_length))


def capacitance_derivative(
    curve: SpiralCurve, strip_width_b: float, plate_gap_d: float, deformation: ProfileLike
) -> float:
    """Linearized dC/dx = eps0 * b * integral drho / d^2 ds at u = 0."""
    drho = profile_on_curve(curve, deformation)
    return float(
        epsilon_0 * strip_width_b * trapezoid(drho, curve.cumulative_arc_length) / plate_gap_d**2
    )


def cavity_frequency(circuit_L: float, capacitance_C: float) -> float:
    """omega = 1 / sqrt(L C) in rad/s."""
    if not (circuit_L > 0 and capacitance_C > 0):
        raise ValueError(f"L and C must be > 0, got L={circuit_L}, C={capacitance_C}")
    return float(1.0 / np.sqrt(circuit_L * capacitance_C))


def frequency_pull(
    curve: SpiralCurve,
    spec: SpiralSpec,
    deformation: ProfileLike,
    circuit_L: float,
    c_cavity: float = 0.0,
) -> Tuple[float, float]:
    """
    Cavity frequency pull along a normalized mode profile.

    Args:
        curve: Spiral centerline
        spec: Device parameters (b, d)
        deformation: Profile normalized to 1 at the reference node
        circuit_L: Readout inductance (H)
        c_cavity: Fixed readout-cavity capacitance in parallel with the spiral (F)

    Returns:
        (dC_dx [F/m], pull_G [rad/s/m]) with pull_G = -(omega / 2C) dC/dx
    """
    c_total = capacitance(curve, spec.strip_width_b, spec.plate_gap_d) + c_cavity
    dc_dx = capacitance_derivative(curve, spec.strip_width_b, spec.plate_gap_d, deformation)
    omega = cavity_frequency(circuit_L, c_total)
    return dc_dx, -omega / (2.0 * c_total) * dc_dx
