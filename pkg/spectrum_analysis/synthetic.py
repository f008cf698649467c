#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Seeded synthetic resonance spectra drawn from the fit model.
"""

from typing import Optional

import numpy as np

from .fit import lorentzian
from .types import Spectrum, SpectrumKind


def synthetic_spectrum(
    f0: float,
    q: float,
    f_min: Optional[float] = None,
    f_max: Optional[float] = None,
    n_points: int = 4001,
    peak_height: float = 1.0,
    background: float = 0.01,
    noise: float = 0.0,
    seed: Optional[int] = None,
    label: SpectrumKind | str = SpectrumKind.SYNTHETIC,
) -> Spectrum:
    """
    Damped-oscillator PSD on a uniform grid, optionally with multiplicative
    Gaussian noise.

    Args:
        f0: Resonance frequency (Hz)
        q: Quality factor
        f_min, f_max: Window; defaults to f0 -/+ 20 linewidths
        n_points: Grid size
        peak_height: Resonant PSD above background
        background: Flat background
        noise: Relative standard deviation of the multiplicative noise
        seed: RNG seed (numpy default_rng)
        label: Spectrum label

    Returns:
        Spectrum with psd clipped at 0
    """
    if not (f0 > 0 and q > 0):
        raise ValueError(f"f0 and q must be > 0, got {f0}, {q}")
    half_span = 20.0 * f0 / q
    f_min = max(f0 - half_span, f0 * 1e-3) if f_min is None else f_min
    f_max = f0 + half_span if f_max is None else f_max

    f = np.linspace(f_min, f_max, n_points)
    amplitude = peak_height * f0**4 / q**2
    psd = lorentzian(f, f0, q, amplitude, background)
    if noise > 0:
        rng = np.random.default_rng(seed)
        psd = psd * (1.0 + noise * rng.standard_normal(f.size))
    return Spectrum(f, np.clip(psd, 0.0, None), label)
