#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Generalized eigen-solve K phi = omega^2 M phi for the lowest modes.

Small systems use the dense symmetric solver; larger ones use ARPACK in
shift-invert mode with shift 0, applying the inverse through a banded
Cholesky factorization of K. Both paths work on the diagonally scaled
pair D K D, D M D (D = diag(K)^-1/2) so that translational and rotational
DOFs have comparable magnitude. Either way the block is polished by inverse
iteration against the same banded factor of K.
"""

import numpy as np
import scipy.linalg
import scipy.sparse as sp
from scipy.constants import hbar as HBAR
from scipy.sparse.linalg import ArpackNoConvergence, LinearOperator, eigsh

from spiral_geometry import SpiralSpec, build_spiral

from .assembly import apply_boundary, assemble
from .mesh import discretize
from .types import (
    DOF_PER_NODE,
    BeamMesh,
    InvalidSystemError,
    ModalSolution,
    Mode,
    Polarization,
    SolverFailureError,
    SystemMatrices,
)

OUT_OF_PLANE_THRESHOLD = 0.8
IN_PLANE_THRESHOLD = 0.2
REFINE_STEPS = 2


def to_upper_banded(matrix: sp.spmatrix, bandwidth: int) -> np.ndarray:
    """Upper banded storage ab[u + i - j, j] = a[i, j] for i <= j."""
    coo = sp.triu(matrix).tocoo()
    ab = np.zeros((bandwidth + 1, matrix.shape[0]))
    ab[bandwidth + coo.row - coo.col, coo.col] = coo.data
    return ab


def _half_bandwidth(matrix: sp.spmatrix) -> int:
    coo = matrix.tocoo()
    return int(np.max(np.abs(coo.row - coo.col))) if coo.nnz else 0


def _banded_cholesky(matrix: sp.spmatrix, what: str) -> tuple[np.ndarray, int]:
    u = _half_bandwidth(matrix)
    try:
        factor = scipy.linalg.cholesky_banded(to_upper_banded(matrix, u), lower=False)
    except np.linalg.LinAlgError as e:
        raise InvalidSystemError(f"{what} is not positive definite: {e}") from e
    return factor, u


def _rayleigh_ritz(K: sp.spmatrix, M: sp.spmatrix, basis: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    k_red = basis.T @ (K @ basis)
    m_red = basis.T @ (M @ basis)
    lam, coeffs = scipy.linalg.eigh(0.5 * (k_red + k_red.T), 0.5 * (m_red + m_red.T))
    return lam, basis @ coeffs


def classify_mode(shape: np.ndarray, mesh: BeamMesh, M: sp.spmatrix) -> tuple[Polarization, float]:
    """
    Polarization from the mass-weighted share of translational motion
    along the plane normal.

    Returns:
        (polarization, energy_fraction_z)
    """
    shape = np.asarray(shape, dtype=float)
    n_nodes = shape.size // DOF_PER_NODE
    nodal = shape.reshape(n_nodes, DOF_PER_NODE)

    translational = np.zeros_like(nodal)
    translational[:, :3] = nodal[:, :3]
    normal = np.zeros_like(nodal)
    normal[:, :3] = np.outer(nodal[:, :3] @ mesh.plane_normal, mesh.plane_normal)

    t = translational.ravel()
    z = normal.ravel()
    total = float(t @ (M @ t))
    if total <= 0.0:
        return Polarization.MIXED, 0.0
    fraction = float(np.clip(z @ (M @ z) / total, 0.0, 1.0))

    if fraction >= OUT_OF_PLANE_THRESHOLD:
        return Polarization.OUT_OF_PLANE, fraction
    if fraction <= IN_PLANE_THRESHOLD:
        return Polarization.IN_PLANE, fraction
    return Polarization.MIXED, fraction


def _refine(
    Ks: sp.spmatrix, Ms: sp.spmatrix, vec: np.ndarray, factor: np.ndarray, steps: int
) -> tuple[np.ndarray, np.ndarray]:
    """Block inverse iteration with K^-1 M followed by Rayleigh-Ritz."""
    lam = None
    for _ in range(steps):
        vec = scipy.linalg.cho_solve_banded((factor, False), Ms @ vec)
        vec = vec / np.linalg.norm(vec, axis=0)
        lam, vec = _rayleigh_ritz(Ks, Ms, vec)
    return lam, vec


def solve_modes(
    system: SystemMatrices,
    n_modes: int = 6,
    tolerance: float = 1e-10,
    dense_dof_limit: int = 600,
    max_iterations: int = 5000,
    refine_steps: int = REFINE_STEPS,
    hbar: float = HBAR,
) -> ModalSolution:
    """
    Lowest `n_modes` eigenpairs of the constrained system.

    Both paths solve for an enlarged block of eigenpairs and, when K is
    positive definite, polish it with `refine_steps` rounds of inverse
    iteration before keeping the lowest `n_modes`.

    Args:
        system: Constrained SystemMatrices
        n_modes: Number of modes (>= 1)
        tolerance: Relative eigenvalue tolerance requested from ARPACK
        dense_dof_limit: Free-DOF count below which the dense solver is used
        max_iterations: ARPACK iteration cap
        refine_steps: Inverse-iteration rounds applied after either solver

    Returns:
        ModalSolution with M-orthonormal shapes sorted by frequency; each
        mode's residual is ||K phi - omega^2 M phi|| / ||K phi|| on the
        unscaled reduced matrices

    Raises:
        InvalidSystemError: M (or K on the banded path) not positive definite
        SolverFailureError: ARPACK did not converge
    """
    if n_modes < 1:
        raise ValueError(f"n_modes must be >= 1, got {n_modes}")

    K_ff, M_ff = system.reduced()
    K_ff = K_ff.tocsr()
    M_ff = M_ff.tocsr()
    n_free = K_ff.shape[0]
    k = min(n_modes, n_free)

    diag = K_ff.diagonal()
    if np.any(diag <= 0.0):
        raise InvalidSystemError("Stiffness has non-positive diagonal entries")
    D = sp.diags(1.0 / np.sqrt(diag))
    Ks = (D @ K_ff @ D).tocsr()
    Ms = (D @ M_ff @ D).tocsr()
    Ks = 0.5 * (Ks + Ks.T)
    Ms = 0.5 * (Ms + Ms.T)

    _banded_cholesky(Ms, "Mass matrix")

    if n_free <= dense_dof_limit:
        k_basis = min(max(2 * k, k + 6), n_free)
        try:
            lam, vec = scipy.linalg.eigh(Ks.toarray(), Ms.toarray(), subset_by_index=[0, k_basis - 1])
        except np.linalg.LinAlgError as e:
            raise InvalidSystemError(f"Dense generalized eigen-solve failed: {e}") from e
        # unconstrained: rigid-body modes make K singular, no refinement
        try:
            factor, _ = _banded_cholesky(Ks, "Stiffness matrix")
        except InvalidSystemError:
            factor = None
        if factor is not None and np.min(factor[-1]) ** 2 <= 1e-14 * np.max(factor[-1]) ** 2:
            factor = None
    else:
        factor, _ = _banded_cholesky(Ks, "Stiffness matrix (is the system constrained?)")
        k_basis = min(max(2 * k, k + 6), n_free - 1)
        op_inv = LinearOperator(
            (n_free, n_free),
            matvec=lambda x: scipy.linalg.cho_solve_banded((factor, False), x),
            dtype=np.float64,
        )
        try:
            lam, vec = eigsh(
                Ks,
                k=k_basis,
                M=Ms,
                sigma=0.0,
                which="LM",
                OPinv=op_inv,
                tol=tolerance * 1e-2,
                maxiter=max_iterations,
            )
        except ArpackNoConvergence as e:
            raise SolverFailureError(
                f"ARPACK converged {len(e.eigenvalues)} of {k_basis} modes "
                f"after {max_iterations} iterations",
                converged=len(e.eigenvalues),
                requested=k_basis,
            ) from e

    order = np.argsort(lam, kind="stable")
    lam, vec = lam[order], vec[:, order]

    # inverse iteration on the enlarged block strips high-mode content from
    # the lowest vectors; Rayleigh-Ritz restores M-orthonormality
    if factor is not None and refine_steps > 0:
        lam, vec = _refine(Ks, Ms, vec, factor, refine_steps)
    lam, vec = lam[:k], vec[:, :k]

    free = system.free_dofs
    mesh = system.mesh
    modes = []
    for i in range(k):
        phi = D @ vec[:, i]
        kphi = K_ff @ phi
        residual = float(np.linalg.norm(kphi - lam[i] * (M_ff @ phi)) / max(np.linalg.norm(kphi), 1e-300))

        shape = np.zeros(system.n_dof)
        shape[free] = phi
        # deterministic sign: largest translational component positive
        nodal = shape.reshape(-1, DOF_PER_NODE)[:, :3].ravel()
        pivot = int(np.argmax(np.abs(nodal)))
        if nodal[pivot] < 0:
            shape = -shape

        polarization, fraction = classify_mode(shape, mesh, system.M)
        modes.append(
            Mode(
                omega=float(np.sqrt(max(lam[i], 0.0))),
                shape=shape,
                polarization=polarization,
                energy_fraction_z=fraction,
                residual=residual,
            )
        )

    total_mass = system.material.density_rho * mesh.section.area * mesh.total_length
    return ModalSolution(modes=modes, system=system, total_mass=total_mass, hbar=hbar)


def solve_spiral(spec: SpiralSpec, elems_per_turn: int = 32, n_modes: int = 6, **solver_options) -> ModalSolution:
    """Geometry -> mesh -> constrained system -> modes for one SpiralSpec."""
    mesh = discretize(build_spiral(spec, elems_per_turn), spec, elems_per_turn)
    system = apply_boundary(assemble(mesh, spec.material), mesh, spec.boundary)
    return solve_modes(system, n_modes=n_modes, **solver_options)
