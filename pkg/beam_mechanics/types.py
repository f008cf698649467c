#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Type definitions and data classes for beam finite-element modal analysis.

DOF order per node: ux, uy, uz, rx, ry, rz (global axes).
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

import numpy as np
import scipy.sparse as sp
from scipy.constants import hbar as HBAR

from spiral_geometry.types import Boundary, Material

DOF_PER_NODE = 6


class SingularFrameError(ValueError):
    """Raised for zero-length elements or elements without a local frame."""


class InvalidSystemError(ValueError):
    """Raised when the mass or stiffness operator is not definite as required."""


class SolverFailureError(RuntimeError):
    """Raised when the eigen-solver does not converge."""

    def __init__(self, message: str, converged: int = 0, requested: int = 0):
        super().__init__(message)
        self.converged = converged
        self.requested = requested


class DegenerateModeError(ValueError):
    """Raised when a mode shape has no transverse displacement to normalize by."""


class Polarization(Enum):
    """Dominant displacement direction of a mode."""

    OUT_OF_PLANE = "OutOfPlane"
    IN_PLANE = "InPlane"
    MIXED = "Mixed"


@dataclass(frozen=True)
class Section:
    """Rectangular cross-section properties."""

    area: float  # m^2
    inertia_out_of_plane: float  # m^4, bending with out-of-plane deflection
    inertia_in_plane: float  # m^4, bending with in-plane deflection
    torsion_j: float  # m^4

    @property
    def polar_inertia(self) -> float:
        return self.inertia_out_of_plane + self.inertia_in_plane


@dataclass(frozen=True, eq=False)
class BeamMesh:
    """Open chain of straight two-node beam elements."""

    node_positions: np.ndarray  # (n, 3) m
    node_frames: np.ndarray  # (n, 3, 3): tangent, in-plane normal, plane normal
    node_radial: np.ndarray  # (n, 3) unit in-plane radial directions
    node_theta: np.ndarray  # (n,) winding angle, rad
    element_nodes: np.ndarray  # (e, 2) int
    element_lengths: np.ndarray  # (e,) m
    section: Section
    plane_normal: np.ndarray = field(default_factory=lambda: np.array([0.0, 0.0, 1.0]))

    @property
    def n_nodes(self) -> int:
        return int(self.node_positions.shape[0])

    @property
    def n_elements(self) -> int:
        return int(self.element_nodes.shape[0])

    @property
    def dof_count(self) -> int:
        return DOF_PER_NODE * self.n_nodes

    @property
    def total_length(self) -> float:
        return float(np.sum(self.element_lengths))

    def rotated(self, rotation: np.ndarray) -> "BeamMesh":
        """Rigidly rotate the whole mesh by a 3x3 rotation matrix."""
        r = np.asarray(rotation, dtype=float)
        return BeamMesh(
            node_positions=self.node_positions @ r.T,
            node_frames=np.einsum("ij,nkj->nki", r, self.node_frames),
            node_radial=self.node_radial @ r.T,
            node_theta=self.node_theta.copy(),
            element_nodes=self.element_nodes.copy(),
            element_lengths=self.element_lengths.copy(),
            section=self.section,
            plane_normal=r @ self.plane_normal,
        )


@dataclass(frozen=True, eq=False)
class SystemMatrices:
    """Assembled stiffness and mass operators with boundary constraints."""

    K: sp.csr_matrix
    M: sp.csr_matrix
    mesh: BeamMesh
    material: Material
    constrained_dofs: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=int))
    boundary: Optional[Boundary] = None

    @property
    def n_dof(self) -> int:
        return int(self.K.shape[0])

    @property
    def free_dofs(self) -> np.ndarray:
        mask = np.ones(self.n_dof, dtype=bool)
        mask[self.constrained_dofs] = False
        return np.flatnonzero(mask)

    @property
    def n_free(self) -> int:
        return int(self.n_dof - self.constrained_dofs.size)

    def reduced(self) -> tuple[sp.csr_matrix, sp.csr_matrix]:
        """(K_ff, M_ff) restricted to unconstrained DOFs."""
        free = self.free_dofs
        return (
            self.K[free][:, free].tocsr(),
            self.M[free][:, free].tocsr(),
        )

    @property
    def bandwidth(self) -> int:
        """Half bandwidth max |i - j| over nonzeros of K."""
        coo = self.K.tocoo()
        if coo.nnz == 0:
            return 0
        return int(np.max(np.abs(coo.row - coo.col)))


@dataclass
class Mode:
    """One eigenpair of K phi = omega^2 M phi."""

    omega: float  # rad/s
    shape: np.ndarray  # full-length, M-normalized
    polarization: Polarization
    energy_fraction_z: float
    residual: float = 0.0

    @property
    def frequency(self) -> float:
        """Frequency f in Hz."""
        return self.omega / (2.0 * np.pi)


@dataclass(frozen=True)
class MembraneMode:
    """Fundamental of a clamped circular prestressed membrane."""

    radius: float  # m
    thickness: float  # m
    frequency: float  # Hz
    total_mass: float  # kg
    m_eff: float  # kg, referenced to the center displacement
    participation: float  # mean displacement / center displacement

    @property
    def omega(self) -> float:
        return 2.0 * np.pi * self.frequency


class ProfileComponent(Enum):
    """Displacement component sampled into a deformation profile."""

    OUT_OF_PLANE = "out_of_plane"
    IN_PLANE_RADIAL = "in_plane_radial"


@dataclass(frozen=True, eq=False)
class DeformationProfile:
    """Normalized modal displacement along the winding angle."""

    theta: np.ndarray  # rad, ascending
    drho: np.ndarray  # dimensionless, +1 at the reference node
    component: ProfileComponent = ProfileComponent.OUT_OF_PLANE

    def __len__(self) -> int:
        return int(self.theta.size)

    def pairs(self) -> List[tuple[float, float]]:
        return [(float(t), float(d)) for t, d in zip(self.theta, self.drho)]


@dataclass
class ModalSolution:
    """Lowest modes of a constrained system with modal quantities."""

    modes: List[Mode]
    system: SystemMatrices
    total_mass: float  # kg
    hbar: float = HBAR

    @property
    def mesh(self) -> BeamMesh:
        return self.system.mesh

    @property
    def omegas(self) -> np.ndarray:
        return np.array([m.omega for m in self.modes])

    @property
    def frequencies(self) -> np.ndarray:
        return self.omegas / (2.0 * np.pi)

    @property
    def fundamental(self) -> Mode:
        return self.modes[0]

    # Fundamental-mode quantities; see modal.py for any mode index
    @property
    def reference_node(self) -> int:
        from .modal import reference_node

        return reference_node(self, 0)

    @property
    def m_eff(self) -> float:
        from .modal import modal_mass_and_xzp

        return modal_mass_and_xzp(self, 0, self.hbar)[0]

    @property
    def x_zp(self) -> float:
        from .modal import modal_mass_and_xzp

        return modal_mass_and_xzp(self, 0, self.hbar)[1]

    @property
    def profile(self) -> "DeformationProfile":
        from .modal import deformation_profile

        return deformation_profile(self, 0)
