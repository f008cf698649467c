#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
12-DOF Euler-Bernoulli space-frame element: stiffness, consistent mass and
local-to-global rotation.

Local DOF order per node: u, v, w, rx, ry, rz with x along the element,
y the in-plane normal and z the plane normal. Bending with w deflection
uses the out-of-plane inertia, bending with v deflection the in-plane one.
"""

import numpy as np

from .types import Section, SingularFrameError

# v/rz plane -> w/ry plane: rotations change sign
_FLIP = np.diag([1.0, -1.0, 1.0, -1.0])
_V_DOFS = [1, 5, 7, 11]
_W_DOFS = [2, 4, 8, 10]


def _hermite_stiffness(L: float) -> np.ndarray:
    return np.array(
        [
            [12.0, 6 * L, -12.0, 6 * L],
            [6 * L, 4 * L * L, -6 * L, 2 * L * L],
            [-12.0, -6 * L, 12.0, -6 * L],
            [6 * L, 2 * L * L, -6 * L, 4 * L * L],
        ]
    ) / L**3


def _hermite_mass(L: float) -> np.ndarray:
    return (L / 420.0) * np.array(
        [
            [156.0, 22 * L, 54.0, -13 * L],
            [22 * L, 4 * L * L, 13 * L, -3 * L * L],
            [54.0, 13 * L, 156.0, -22 * L],
            [-13 * L, -3 * L * L, -22 * L, 4 * L * L],
        ]
    )


def _rotary_mass(L: float) -> np.ndarray:
    return (1.0 / (30.0 * L)) * np.array(
        [
            [36.0, 3 * L, -36.0, 3 * L],
            [3 * L, 4 * L * L, -3 * L, -L * L],
            [-36.0, -3 * L, 36.0, -3 * L],
            [3 * L, -L * L, -3 * L, 4 * L * L],
        ]
    )


def _two_node(value: float) -> np.ndarray:
    return value * np.array([[1.0, -1.0], [-1.0, 1.0]])


def torsion_constant(b: float, h: float) -> float:
    """
    St. Venant torsion constant of a solid rectangle.

    J = a c^3 (1/3 - 0.21 (c/a) (1 - c^4 / 12 a^4)), a = long side, c = short side.
    """
    a, c = max(b, h), min(b, h)
    return a * c**3 * (1.0 / 3.0 - 0.21 * (c / a) * (1.0 - c**4 / (12.0 * a**4)))


def rectangular_section(b: float, h: float) -> Section:
    """Section of a strip of width b (in plane) and thickness h."""
    return Section(
        area=b * h,
        inertia_out_of_plane=b * h**3 / 12.0,
        inertia_in_plane=h * b**3 / 12.0,
        torsion_j=torsion_constant(b, h),
    )


def local_stiffness(E: float, G: float, section: Section, L: float) -> np.ndarray:
    """12x12 element stiffness in local axes."""
    if not L > 0:
        raise SingularFrameError(f"Element length must be > 0, got {L}")
    k = np.zeros((12, 12))
    k[np.ix_([0, 6], [0, 6])] = _two_node(E * section.area / L)
    k[np.ix_([3, 9], [3, 9])] = _two_node(G * section.torsion_j / L)
    kb = _hermite_stiffness(L)
    k[np.ix_(_V_DOFS, _V_DOFS)] = E * section.inertia_in_plane * kb
    k[np.ix_(_W_DOFS, _W_DOFS)] = E * section.inertia_out_of_plane * (_FLIP @ kb @ _FLIP)
    return k


def local_mass(rho: float, section: Section, L: float) -> np.ndarray:
    """12x12 consistent element mass in local axes, rotary inertia included."""
    if not L > 0:
        raise SingularFrameError(f"Element length must be > 0, got {L}")
    m = np.zeros((12, 12))
    axial = rho * section.area * L / 6.0 * np.array([[2.0, 1.0], [1.0, 2.0]])
    m[np.ix_([0, 6], [0, 6])] = axial
    m[np.ix_([3, 9], [3, 9])] = (section.polar_inertia / section.area) * axial
    translational = rho * section.area * _hermite_mass(L)
    m[np.ix_(_V_DOFS, _V_DOFS)] = translational + rho * section.inertia_in_plane * _rotary_mass(L)
    m[np.ix_(_W_DOFS, _W_DOFS)] = _FLIP @ (
        translational + rho * section.inertia_out_of_plane * _rotary_mass(L)
    ) @ _FLIP
    return m


def element_rotation(xa: np.ndarray, xb: np.ndarray, plane_normal: np.ndarray) -> np.ndarray:
    """
    3x3 matrix whose rows are the local x, y, z axes in global coordinates.

    Raises:
        SingularFrameError: zero-length element or element parallel to the
            plane normal
    """
    chord = np.asarray(xb, dtype=float) - np.asarray(xa, dtype=float)
    length = float(np.linalg.norm(chord))
    if length <= 0.0:
        raise SingularFrameError("Zero-length element has no local frame")
    ex = chord / length
    ey = np.cross(plane_normal, ex)
    ny = float(np.linalg.norm(ey))
    if ny < 1e-12:
        raise SingularFrameError("Element is parallel to the plane normal")
    ey /= ny
    ez = np.cross(ex, ey)
    return np.vstack([ex, ey, ez])


def to_global(local: np.ndarray, rotation: np.ndarray) -> np.ndarray:
    """T^T k T with T = blockdiag(R, R, R, R), symmetrized exactly."""
    T = np.kron(np.eye(4), rotation)
    out = T.T @ local @ T
    return 0.5 * (out + out.T)
