#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Type definitions for the suspended spiral inductor model.
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np

# Current-sheet coefficients for a circular planar spiral
CIRCULAR_SHEET_COEFFS = (1.00, 2.46, 0.00, 0.20)


@dataclass(frozen=True)
class SpiralDiameters:
    """Summary diameters of a planar spiral winding (m)."""

    d_out: float
    d_in: float

    @property
    def d_avg(self) -> float:
        return 0.5 * (self.d_out + self.d_in)

    @property
    def fill_ratio(self) -> float:
        return (self.d_out - self.d_in) / (self.d_out + self.d_in)


@dataclass(frozen=True)
class InductorResult:
    """Self-inductance, inductance pull and g0 of an inductor's in-plane mode."""

    L_self: float  # H
    dL_dx: float  # H/m
    omega_cav: float  # rad/s
    pull_G: float  # rad/s/m
    g0: float  # rad/s, magnitude
    mode_frequency: float  # Hz
    c_readout: float  # F
    m_eff: float = 0.0  # kg
    x_zp: float = 0.0  # m
    label: str = ""

    @property
    def g0_over_2pi(self) -> float:
        return self.g0 / (2.0 * np.pi)

    def to_json_dict(self, extra: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """Flat JSON-ready dictionary with units in the key names."""
        out: Dict[str, Any] = {
            "label": self.label,
            "l_self_nH": self.L_self * 1e9,
            "dl_dx_h_per_m": self.dL_dx,
            "f_cav_ghz": self.omega_cav / (2.0 * np.pi) * 1e-9,
            "g0_over_2pi_hz": self.g0_over_2pi,
            "f_mech_khz": self.mode_frequency * 1e-3,
            "c_readout_fF": self.c_readout * 1e15,
            "m_eff_kg": self.m_eff,
            "x_zp_m": self.x_zp,
        }
        out.update(extra or {})
        return out
