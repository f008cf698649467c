#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Greenhouse-style summation over concentric circular loops: each turn is
replaced by a loop at its mean radius, L = sum of self terms plus all
pairwise mutual inductances.
"""

import numpy as np
from scipy.constants import mu_0
from scipy.special import ellipe, ellipk

from spiral_geometry import InvalidSpecError, SpiralSpec

# GMD of a rectangular section a x c is close to 0.2235 (a + c)
RECT_GMD_FACTOR = 0.2235


def loop_self_inductance(radius: float, width: float, thickness: float) -> float:
    """mu0 r (ln(8 r / GMD) - 2) for a thin circular loop."""
    gmd = RECT_GMD_FACTOR * (width + thickness)
    if not (radius > 0 and gmd > 0) or radius <= gmd:
        raise InvalidSpecError(f"Loop radius {radius} too small for section GMD {gmd}")
    return float(mu_0 * radius * (np.log(8.0 * radius / gmd) - 2.0))


def loop_mutual_inductance(r1: float, r2: float) -> float:
    """
    Mutual inductance of two coaxial coplanar loops (Maxwell's formula).

    M = mu0 sqrt(r1 r2) ((2/k - k) K(k^2) - (2/k) E(k^2)), k^2 = 4 r1 r2 / (r1 + r2)^2
    """
    m = 4.0 * r1 * r2 / (r1 + r2) ** 2
    k = np.sqrt(m)
    return float(mu_0 * np.sqrt(r1 * r2) * ((2.0 / k - k) * ellipk(m) - (2.0 / k) * ellipe(m)))


def greenhouse_inductance(spec: SpiralSpec) -> float:
    """Concentric-loop estimate (H) of a spiral's self-inductance."""
    n_loops = int(round(spec.turns_N))
    if n_loops < 1:
        raise InvalidSpecError(f"Inductor needs at least one turn, got N={spec.turns_N}")
    radii = spec.inner_radius + spec.pitch * (np.arange(n_loops) + 0.5)

    total = sum(loop_self_inductance(r, spec.strip_width_b, spec.thickness_h) for r in radii)
    for i in range(n_loops):
        for j in range(i + 1, n_loops):
            total += 2.0 * loop_mutual_inductance(radii[i], radii[j])
    return float(total)
