#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Self-inductance of planar spiral windings.

The primary model is the current-sheet closed form
    L = mu0 N^2 d_avg c1 / 2 * (ln(c2 / fill) + c3 fill + c4 fill^2)
with circular-spiral coefficients. A displaced centerline is summarized by
turn-mean radii so the same formula prices its deformation.
"""

import numpy as np
from scipy.constants import mu_0
from scipy.integrate import trapezoid

from spiral_geometry import InvalidSpecError, SpiralSpec

from .types import CIRCULAR_SHEET_COEFFS, SpiralDiameters

WINDOW_SAMPLES = 513


def current_sheet_inductance(n_turns: float, d_out: float, d_in: float) -> float:
    """
    Current-sheet inductance (H) of a circular planar spiral.

    Raises:
        InvalidSpecError: Fill ratio outside (0, 1)
    """
    diameters = SpiralDiameters(d_out=d_out, d_in=d_in)
    fill = diameters.fill_ratio
    if not 0.0 < fill < 1.0:
        raise InvalidSpecError(
            f"Fill ratio must lie in (0, 1), got {fill:.4f} (d_out={d_out}, d_in={d_in})"
        )
    c1, c2, c3, c4 = CIRCULAR_SHEET_COEFFS
    return float(
        mu_0 * n_turns**2 * diameters.d_avg * c1 / 2.0
        * (np.log(c2 / fill) + c3 * fill + c4 * fill**2)
    )


def spiral_diameters(spec: SpiralSpec) -> SpiralDiameters:
    """Outer and inner diameters of the strip edges."""
    return SpiralDiameters(
        d_out=2.0 * spec.outer_radius + spec.strip_width_b,
        d_in=2.0 * spec.inner_radius - spec.strip_width_b,
    )


def spiral_inductance(spec: SpiralSpec) -> float:
    """Self-inductance (H) of an undeformed spiral, N >= 1."""
    if spec.turns_N < 1:
        raise InvalidSpecError(f"Inductor needs at least one turn, got N={spec.turns_N}")
    d = spiral_diameters(spec)
    return current_sheet_inductance(spec.turns_N, d.d_out, d.d_in)


def _window_mean(theta: np.ndarray, rho: np.ndarray, start: float, stop: float) -> float:
    t = np.linspace(start, stop, WINDOW_SAMPLES)
    return float(trapezoid(np.interp(t, theta, rho), t) / (stop - start))


def deformed_diameters(spec: SpiralSpec, theta: np.ndarray, rho: np.ndarray) -> SpiralDiameters:
    """
    Equivalent diameters of a displaced centerline rho(theta).

    d_avg comes from the mean radius over the whole winding; the spread
    d_out - d_in from the mean radii of the first and last full turn.
    For an undeformed spiral this reproduces spiral_diameters exactly.
    """
    theta = np.asarray(theta, dtype=float)
    rho = np.asarray(rho, dtype=float)
    if theta.shape != rho.shape or theta.size < 2:
        raise ValueError("theta and rho must be matching arrays of >= 2 samples")
    two_pi = 2.0 * np.pi
    t0, t1 = float(theta[0]), float(theta[-1])
    if t1 - t0 < two_pi:
        raise InvalidSpecError("Deformed centerline spans less than one turn")

    r_mean = float(trapezoid(rho, theta) / (t1 - t0))
    r_first = _window_mean(theta, rho, t0, t0 + two_pi)
    r_last = _window_mean(theta, rho, t1 - two_pi, t1)
    half_spread = (r_last - r_first) + spec.pitch + spec.strip_width_b
    return SpiralDiameters(d_out=2.0 * r_mean + half_spread, d_in=2.0 * r_mean - half_spread)


def deformed_inductance(spec: SpiralSpec, theta: np.ndarray, rho: np.ndarray) -> float:
    """Current-sheet inductance (H) of a radially displaced centerline."""
    d = deformed_diameters(spec, theta, rho)
    return current_sheet_inductance(spec.turns_N, d.d_out, d.d_in)


def inductance_derivative(
    spec: SpiralSpec,
    theta: np.ndarray,
    drho: np.ndarray,
    step: float | None = None,
    relative_step: float = 1e-4,
) -> float:
    """
    dL/dx along a normalized radial displacement field by central differences.

    Args:
        spec: Inductor design
        theta: Winding angles of the profile (rad)
        drho: Radial displacement per unit amplitude
        step: Amplitude u (m); defaults to d_avg * relative_step
        relative_step: Step relative to d_avg

    Returns:
        dL/dx in H/m
    """
    theta = np.asarray(theta, dtype=float)
    drho = np.asarray(drho, dtype=float)
    if step is None:
        step = spiral_diameters(spec).d_avg * relative_step
    rho = spec.radius_at(theta)
    l_plus = deformed_inductance(spec, theta, rho + step * drho)
    l_minus = deformed_inductance(spec, theta, rho - step * drho)
    return (l_plus - l_minus) / (2.0 * step)
