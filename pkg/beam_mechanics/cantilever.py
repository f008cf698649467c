#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Straight Euler-Bernoulli cantilever: the 1-D equivalent of an unrolled
spiral and the closed-form oracle for the straight-beam limit.
"""

import numpy as np

from spiral_geometry import InvalidSpecError, SpiralSpec, build_spiral

CANTILEVER_BETA_1 = 1.875104068711961


def cantilever_frequency(
    length: float, youngs_E: float, inertia: float, density: float, area: float
) -> float:
    """f1 = (beta1^2 / 2 pi) sqrt(E I / (rho A L^4))."""
    if not all(v > 0 for v in (length, youngs_E, inertia, density, area)):
        raise InvalidSpecError("Cantilever parameters must all be > 0")
    return CANTILEVER_BETA_1**2 / (2.0 * np.pi) * float(
        np.sqrt(youngs_E * inertia / (density * area * length**4))
    )


def cantilever_equivalent_frequency(spec: SpiralSpec, samples_per_turn: int = 64) -> float:
    """Out-of-plane fundamental of the spiral strip unrolled into a straight cantilever."""
    length = build_spiral(spec, samples_per_turn).total_length
    b, h = spec.strip_width_b, spec.thickness_h
    return cantilever_frequency(length, spec.material.youngs_E, b * h**3 / 12.0, spec.material.density_rho, b * h)


def cantilever_equivalent_ratio(spec: SpiralSpec, spiral_frequency: float) -> float:
    """
    Disagreement factor between the straight-cantilever estimate and the
    coiled-spiral fundamental, max(f_c / f_s, f_s / f_c) >= 1.
    """
    if not spiral_frequency > 0:
        raise ValueError(f"spiral_frequency must be > 0, got {spiral_frequency}")
    ratio = cantilever_equivalent_frequency(spec) / spiral_frequency
    return float(max(ratio, 1.0 / ratio))
