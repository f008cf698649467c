#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Discretization of a spiral centerline into a chain of beam elements.
"""

import numpy as np

from spiral_geometry import SpiralCurve, SpiralSpec, UnderResolutionError, build_spiral
from spiral_geometry.curve import MIN_SAMPLES_PER_TURN, sample_count

from .element import rectangular_section
from .types import BeamMesh, SingularFrameError


def discretize(curve: SpiralCurve, spec: SpiralSpec, elems_per_turn: int = 32) -> BeamMesh:
    """
    Straight two-node elements between consecutive centerline samples.

    The curve is resampled at `elems_per_turn` when its own sampling does
    not match, so node angles are uniform in theta.

    Args:
        curve: Sampled centerline
        spec: Spiral parametrization (section dimensions)
        elems_per_turn: Element density (>= 8)

    Returns:
        BeamMesh with ceil(N * elems_per_turn) elements
    """
    if elems_per_turn < MIN_SAMPLES_PER_TURN:
        raise UnderResolutionError(
            f"elems_per_turn must be >= {MIN_SAMPLES_PER_TURN}, got {elems_per_turn}"
        )
    n_elements = sample_count(spec.turns_N, elems_per_turn)
    if curve.n_samples != n_elements + 1:
        curve = build_spiral(spec, elems_per_turn)

    positions = curve.positions
    chords = np.diff(positions, axis=0)
    lengths = np.linalg.norm(chords, axis=1)
    if np.any(lengths <= 0.0):
        raise SingularFrameError("Mesh contains a zero-length element")

    plane_normal = np.array([0.0, 0.0, 1.0])
    frames = np.stack(
        [curve.tangents, curve.normals, np.tile(plane_normal, (curve.n_samples, 1))], axis=1
    )
    nodes = np.arange(curve.n_samples)

    return BeamMesh(
        node_positions=positions.copy(),
        node_frames=frames,
        node_radial=curve.radial_directions,
        node_theta=curve.theta.copy(),
        element_nodes=np.column_stack([nodes[:-1], nodes[1:]]),
        element_lengths=lengths,
        section=rectangular_section(spec.strip_width_b, spec.thickness_h),
        plane_normal=plane_normal,
    )
