#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Global stiffness/mass assembly and boundary constraints.
"""

import numpy as np
import scipy.sparse as sp

from spiral_geometry import Boundary, Material

from .element import element_rotation, local_mass, local_stiffness, to_global
from .types import DOF_PER_NODE, BeamMesh, SystemMatrices


def assemble(mesh: BeamMesh, material: Material) -> SystemMatrices:
    """
    Sum rotated element matrices into global sparse K and M.

    The released spiral carries no prestress, so K has no geometric
    stiffness contribution.

    Args:
        mesh: Beam mesh
        material: Elastic material

    Returns:
        Unconstrained SystemMatrices (6 rigid-body modes)
    """
    n_dof = mesh.dof_count
    E, G, rho = material.youngs_E, material.shear_modulus, material.density_rho

    rows, cols, k_vals, m_vals = [], [], [], []
    for (a, b), length in zip(mesh.element_nodes, mesh.element_lengths):
        rotation = element_rotation(mesh.node_positions[a], mesh.node_positions[b], mesh.plane_normal)
        ke = to_global(local_stiffness(E, G, mesh.section, float(length)), rotation)
        me = to_global(local_mass(rho, mesh.section, float(length)), rotation)

        dofs = np.concatenate(
            [np.arange(DOF_PER_NODE) + DOF_PER_NODE * a, np.arange(DOF_PER_NODE) + DOF_PER_NODE * b]
        )
        r, c = np.meshgrid(dofs, dofs, indexing="ij")
        rows.append(r.ravel())
        cols.append(c.ravel())
        k_vals.append(ke.ravel())
        m_vals.append(me.ravel())

    rows = np.concatenate(rows)
    cols = np.concatenate(cols)
    K = sp.coo_matrix((np.concatenate(k_vals), (rows, cols)), shape=(n_dof, n_dof)).tocsr()
    M = sp.coo_matrix((np.concatenate(m_vals), (rows, cols)), shape=(n_dof, n_dof)).tocsr()

    return SystemMatrices(K=K, M=M, mesh=mesh, material=material)


def node_dofs(node: int) -> np.ndarray:
    """The six DOF indices of a node."""
    return np.arange(DOF_PER_NODE) + DOF_PER_NODE * node


def apply_boundary(system: SystemMatrices, mesh: BeamMesh, boundary: Boundary | str) -> SystemMatrices:
    """
    Clamp end nodes.

    OuterClamped removes all six DOF of the outermost node (the spiral
    tail); BothClamped removes those of both end nodes.
    """
    boundary = Boundary.parse(boundary)
    outer = mesh.n_nodes - 1
    if boundary is Boundary.OUTER_CLAMPED:
        constrained = node_dofs(outer)
    else:
        constrained = np.concatenate([node_dofs(0), node_dofs(outer)])

    return SystemMatrices(
        K=system.K,
        M=system.M,
        mesh=mesh,
        material=system.material,
        constrained_dofs=np.unique(constrained),
        boundary=boundary,
    )
