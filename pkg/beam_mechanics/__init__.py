#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Beam Mechanics Package

Space-frame finite-element model of a suspended spiral: discretization,
assembly, boundary constraints, modal solve and modal quantities, plus the
closed-form membrane and cantilever baselines.
"""

from .types import (
    DOF_PER_NODE,
    Section,
    BeamMesh,
    SystemMatrices,
    Mode,
    ModalSolution,
    MembraneMode,
    DeformationProfile,
    Polarization,
    ProfileComponent,
    SingularFrameError,
    InvalidSystemError,
    SolverFailureError,
    DegenerateModeError,
)
from .element import (
    torsion_constant,
    rectangular_section,
    local_stiffness,
    local_mass,
    element_rotation,
)
from .mesh import discretize
from .assembly import assemble, apply_boundary, node_dofs
from .solver import solve_modes, solve_spiral, classify_mode
from .modal import (
    nodal_displacement,
    reference_node,
    modal_mass_and_xzp,
    zero_point_displacement,
    deformation_profile,
)
from .membrane import (
    J0_FIRST_ZERO,
    membrane_frequency,
    membrane_stress_for_frequency,
    membrane_modal_quantities,
)
from .cantilever import (
    cantilever_frequency,
    cantilever_equivalent_frequency,
    cantilever_equivalent_ratio,
)
from .export import write_modes_csv, write_profile_csv, write_profile_svg

__version__ = "1.0.0"

__all__ = [
    # Types
    "DOF_PER_NODE",
    "Section",
    "BeamMesh",
    "SystemMatrices",
    "Mode",
    "ModalSolution",
    "MembraneMode",
    "DeformationProfile",
    "Polarization",
    "ProfileComponent",
    # Errors
    "SingularFrameError",
    "InvalidSystemError",
    "SolverFailureError",
    "DegenerateModeError",
    # Elements
    "torsion_constant",
    "rectangular_section",
    "local_stiffness",
    "local_mass",
    "element_rotation",
    # Model
    "discretize",
    "assemble",
    "apply_boundary",
    "node_dofs",
    "solve_modes",
    "solve_spiral",
    "classify_mode",
    # Modal quantities
    "nodal_displacement",
    "reference_node",
    "modal_mass_and_xzp",
    "zero_point_displacement",
    "deformation_profile",
    # Baselines
    "J0_FIRST_ZERO",
    "membrane_frequency",
    "membrane_stress_for_frequency",
    "membrane_modal_quantities",
    "cantilever_frequency",
    "cantilever_equivalent_frequency",
    "cantilever_equivalent_ratio",
    # Export
    "write_modes_csv",
    "write_profile_csv",
    "write_profile_svg",
]
