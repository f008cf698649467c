#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Spectrum Analysis Package

Load interferometric spectra, locate a resonance and extract its frequency
and quality factor by damped-oscillator line-shape fitting.
"""

from .types import (
    MIN_POINTS,
    Spectrum,
    SpectrumKind,
    LorentzianGuess,
    FitResult,
    SpectrumParseError,
    SpectrumFormatError,
    SpectrumValidationError,
    GuessFailureError,
)
from .fit import lorentzian, initial_guess, fit_lorentzian
from .synthetic import synthetic_spectrum
from .io import load_spectrum, spectrum_to_csv, write_spectrum_csv, write_fit_report, write_fit_svg

__version__ = "1.0.0"

__all__ = [
    # Types
    "MIN_POINTS",
    "Spectrum",
    "SpectrumKind",
    "LorentzianGuess",
    "FitResult",
    # Errors
    "SpectrumParseError",
    "SpectrumFormatError",
    "SpectrumValidationError",
    "GuessFailureError",
    # Fitting
    "lorentzian",
    "initial_guess",
    "fit_lorentzian",
    "synthetic_spectrum",
    # I/O
    "load_spectrum",
    "spectrum_to_csv",
    "write_spectrum_csv",
    "write_fit_report",
    "write_fit_svg",
]
