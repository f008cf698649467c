#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Inductor Model Package

Self-inductance of suspended planar spirals, its pull along the in-plane
fundamental mode and the resulting inductive g0.
"""

from .types import CIRCULAR_SHEET_COEFFS, SpiralDiameters, InductorResult
from .inductance import (
    current_sheet_inductance,
    spiral_diameters,
    spiral_inductance,
    deformed_diameters,
    deformed_inductance,
    inductance_derivative,
)
from .greenhouse import loop_self_inductance, loop_mutual_inductance, greenhouse_inductance
from .coupling import inductor_g0

__version__ = "1.0.0"

__all__ = [
    # Types
    "CIRCULAR_SHEET_COEFFS",
    "SpiralDiameters",
    "InductorResult",
    # Inductance
    "current_sheet_inductance",
    "spiral_diameters",
    "spiral_inductance",
    "deformed_diameters",
    "deformed_inductance",
    "inductance_derivative",
    # Concentric-loop summation
    "loop_self_inductance",
    "loop_mutual_inductance",
    "greenhouse_inductance",
    # Coupling
    "inductor_g0",
]
