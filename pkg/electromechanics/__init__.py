#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Electromechanics Package

Spiral capacitance, LC cavity frequency, frequency pull along a mechanical
mode, single-photon coupling g0 and relative cooperativity.
"""

from .types import CouplingResult, ContactError, ModePolarizationError
from .capacitance import (
    capacitance,
    capacitance_derivative,
    cavity_frequency,
    frequency_pull,
    profile_on_curve,
)
from .coupling import (
    compute_g0,
    membrane_g0,
    rigid_piston_g0,
    fit_exponent,
    sqrt_n_exponent,
    cooperativity_ratio,
)

__version__ = "1.0.0"

__all__ = [
    # Types
    "CouplingResult",
    # Errors
    "ContactError",
    "ModePolarizationError",
    # Capacitance
    "capacitance",
    "capacitance_derivative",
    "cavity_frequency",
    "frequency_pull",
    "profile_on_curve",
    # Coupling
    "compute_g0",
    "membrane_g0",
    "rigid_piston_g0",
    "fit_exponent",
    "sqrt_n_exponent",
    "cooperativity_ratio",
]
