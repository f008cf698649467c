#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Centerline sampling of the uniform Archimedean spiral.
"""

import math

import numpy as np

from .types import InvalidSpecError, SpiralCurve, SpiralSpec, UnderResolutionError

MIN_SAMPLES_PER_TURN = 8


def sample_count(turns: float, per_turn: int) -> int:
    """Number of intervals covering `turns` at `per_turn` density."""
    # guard against 0.001 * 64000 = 64.00000000000001
    return max(1, math.ceil(turns * per_turn - 1e-9))


def spiral_point(spec: SpiralSpec, theta: np.ndarray) -> np.ndarray:
    """
    Evaluate centerline positions for winding angles `theta`.

    Args:
        spec: Spiral parametrization
        theta: Winding angles (rad)

    Returns:
        Array of shape (n, 3), z = 0
    """
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    rho = spec.radius_at(theta)
    return np.column_stack([rho * np.cos(theta), rho * np.sin(theta), np.zeros_like(theta)])


def _arc_integrand(rho: np.ndarray, a: float) -> np.ndarray:
    return np.sqrt(rho * rho + a * a)


def build_spiral(spec: SpiralSpec, samples_per_turn: int = 64) -> SpiralCurve:
    """
    Sample the spiral centerline from theta = 0 to 2 pi N.

    Arc length is accumulated interval by interval with Simpson's rule on
    sqrt(rho^2 + (p / 2 pi)^2), i.e. the chord-resolution estimate is
    corrected by the interval midpoint.

    Args:
        spec: Spiral parametrization
        samples_per_turn: Angular sampling density (>= 8)

    Returns:
        SpiralCurve with ceil(N * samples_per_turn) + 1 samples
    """
    if not isinstance(spec, SpiralSpec):
        raise InvalidSpecError(f"Expected SpiralSpec, got {type(spec).__name__}")
    if samples_per_turn < MIN_SAMPLES_PER_TURN:
        raise UnderResolutionError(
            f"samples_per_turn must be >= {MIN_SAMPLES_PER_TURN}, got {samples_per_turn}"
        )

    n_intervals = sample_count(spec.turns_N, samples_per_turn)
    theta_end = 2.0 * math.pi * spec.turns_N
    theta = np.linspace(0.0, theta_end, n_intervals + 1)
    rho = spec.radius_at(theta)
    a = spec.pitch / (2.0 * math.pi)

    positions = spiral_point(spec, theta)

    # d/dtheta (rho cos, rho sin) with rho' = a
    dx = a * np.cos(theta) - rho * np.sin(theta)
    dy = a * np.sin(theta) + rho * np.cos(theta)
    speed = np.hypot(dx, dy)
    tangents = np.column_stack([dx / speed, dy / speed, np.zeros_like(theta)])
    normals = np.column_stack([tangents[:, 1], -tangents[:, 0], np.zeros_like(theta)])

    h = np.diff(theta)
    rho_mid = spec.radius_at(0.5 * (theta[1:] + theta[:-1]))
    f = _arc_integrand(rho, a)
    ds = h / 6.0 * (f[:-1] + 4.0 * _arc_integrand(rho_mid, a) + f[1:])
    cumulative = np.concatenate([[0.0], np.cumsum(ds)])

    return SpiralCurve(
        theta=theta,
        radius=rho,
        positions=positions,
        tangents=tangents,
        normals=normals,
        cumulative_arc_length=cumulative,
        total_length=float(cumulative[-1]),
        pitch=spec.pitch,
    )


def strip_edges(curve: SpiralCurve, strip_width_b: float) -> tuple[np.ndarray, np.ndarray]:
    """
    Outer and inner strip edges, offset radially by b/2 from the centerline.

    Radial offsets keep the strip an exact Archimedean band of radial width
    b, so adjacent windings stay t apart at every angle.

    Returns:
        (outer, inner) arrays of shape (n, 2)
    """
    if not strip_width_b > 0:
        raise InvalidSpecError(f"strip_width_b must be > 0, got {strip_width_b}")
    radial = curve.radial_directions[:, :2]
    centre = curve.positions[:, :2]
    half = 0.5 * strip_width_b
    return centre + half * radial, centre - half * radial


def min_clearance(curve: SpiralCurve, strip_width_b: float) -> float:
    """
    Smallest distance between the inner edge of a winding and the outer
    edge of the winding inside it.

    Samples must be uniform in theta (as produced by build_spiral). For
    spirals under one full turn there is no adjacent winding and inf is
    returned.
    """
    theta = curve.theta
    dtheta = theta[1] - theta[0]
    shift = int(round(2.0 * math.pi / dtheta))
    if theta[-1] - theta[0] < 2.0 * math.pi or shift >= theta.size:
        return math.inf

    outer, inner = strip_edges(curve, strip_width_b)
    best = math.inf
    n = theta.size
    for i in range(shift, n):
        p = inner[i]
        lo = max(i - shift - 2, 0)
        hi = min(i - shift + 2, n - 1)
        a = outer[lo:hi]
        b = outer[lo + 1 : hi + 1]
        ab = b - a
        denom = np.einsum("ij,ij->i", ab, ab)
        s = np.clip(np.einsum("ij,ij->i", p - a, ab) / denom, 0.0, 1.0)
        closest = a + s[:, None] * ab
        best = min(best, float(np.min(np.linalg.norm(p - closest, axis=1))))
    return best
