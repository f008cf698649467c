#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Type definitions for the capacitive electromechanical coupling chain.
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np


class ContactError(ValueError):
    """Raised when a deformed spiral touches (or crosses) the bottom electrode."""


class ModePolarizationError(ValueError):
    """Raised when the coupling mode is polarized along the wrong direction."""


@dataclass(frozen=True)
class CouplingResult:
    """
    Cavity and coupling quantities of one design.

    g0 is reported as a magnitude: pull_G is negative for a mode that
    closes the gap (dC/dx > 0), g0 = x_zp * |pull_G|.
    """

    C0: float  # F, spiral capacitance
    dC_dx: float  # F/m
    omega_cav: float  # rad/s
    pull_G: float  # rad/s/m
    g0: float  # rad/s
    circuit_L: float  # H
    omega_m: float = 0.0  # rad/s
    m_eff: float = 0.0  # kg
    x_zp: float = 0.0  # m
    plate_gap_d: float = 0.0  # m
    c_cavity: float = 0.0  # F
    label: str = ""

    @property
    def c_total(self) -> float:
        return self.C0 + self.c_cavity

    @property
    def g0_over_2pi(self) -> float:
        """g0 / 2 pi in Hz."""
        return self.g0 / (2.0 * np.pi)

    @property
    def f_cav(self) -> float:
        return self.omega_cav / (2.0 * np.pi)

    @property
    def f_mech(self) -> float:
        return self.omega_m / (2.0 * np.pi)

    def to_json_dict(self, extra: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """Flat JSON-ready dictionary with units in the key names."""
        out: Dict[str, Any] = {
            "label": self.label,
            "g0_over_2pi_hz": self.g0_over_2pi,
            "c0_fF": self.C0 * 1e15,
            "c_cavity_fF": self.c_cavity * 1e15,
            "dc_dx_f_per_m": self.dC_dx,
            "f_cav_ghz": self.f_cav * 1e-9,
            "pull_hz_per_m": self.pull_G / (2.0 * np.pi),
            "l0_nH": self.circuit_L * 1e9,
            "f_mech_khz": self.f_mech * 1e-3,
            "m_eff_kg": self.m_eff,
            "x_zp_m": self.x_zp,
            "d_nm": self.plate_gap_d * 1e9,
        }
        out.update(extra or {})
        return out
