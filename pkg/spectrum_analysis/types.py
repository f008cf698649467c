#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Type definitions for resonance spectra and Lorentzian fits.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional

import numpy as np

MIN_POINTS = 16


class SpectrumParseError(ValueError):
    """Raised for unreadable spectrum files; carries the offending line number."""

    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class SpectrumFormatError(ValueError):
    """Raised when frequencies are not strictly increasing."""


class SpectrumValidationError(ValueError):
    """Raised for negative/non-finite PSD values or too few points."""


class GuessFailureError(ValueError):
    """Raised when no interior resonance peak can be located."""


class SpectrumKind(Enum):
    """Origin of a spectrum."""

    DRIVEN = "driven"
    NATURAL = "natural"
    SYNTHETIC = "synthetic"

    @classmethod
    def parse(cls, value: "SpectrumKind | str") -> "SpectrumKind":
        if isinstance(value, SpectrumKind):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise SpectrumValidationError(f"Unknown spectrum label: {value!r}") from None


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Power spectral density sampled on a strictly increasing frequency grid."""

    frequencies: np.ndarray  # Hz
    psd: np.ndarray  # arbitrary power units
    label: SpectrumKind = SpectrumKind.SYNTHETIC

    def __post_init__(self) -> None:
        f = np.asarray(self.frequencies, dtype=float)
        p = np.asarray(self.psd, dtype=float)
        object.__setattr__(self, "frequencies", f)
        object.__setattr__(self, "psd", p)
        object.__setattr__(self, "label", SpectrumKind.parse(self.label))
        if f.ndim != 1 or f.shape != p.shape:
            raise SpectrumValidationError("frequencies and psd must be 1-D arrays of equal length")
        if f.size < MIN_POINTS:
            raise SpectrumValidationError(f"Spectrum needs >= {MIN_POINTS} points, got {f.size}")
        if not (np.all(np.isfinite(f)) and np.all(np.isfinite(p))):
            raise SpectrumValidationError("Spectrum contains non-finite values")
        if np.any(p < 0):
            bad = int(np.flatnonzero(p < 0)[0])
            raise SpectrumValidationError(f"Negative psd {p[bad]} at f={f[bad]} Hz")
        if np.any(np.diff(f) <= 0):
            bad = int(np.flatnonzero(np.diff(f) <= 0)[0])
            raise SpectrumFormatError(
                f"Frequencies must be strictly increasing: {f[bad]} then {f[bad + 1]} Hz"
            )

    @property
    def n_points(self) -> int:
        return int(self.frequencies.size)

    @property
    def span(self) -> tuple[float, float]:
        return float(self.frequencies[0]), float(self.frequencies[-1])

    def window(self, f_min: Optional[float] = None, f_max: Optional[float] = None) -> "Spectrum":
        """Sub-spectrum with f_min <= f <= f_max."""
        lo = -np.inf if f_min is None else f_min
        hi = np.inf if f_max is None else f_max
        keep = (self.frequencies >= lo) & (self.frequencies <= hi)
        return Spectrum(self.frequencies[keep], self.psd[keep], self.label)

    def scaled(self, factor: float) -> "Spectrum":
        return Spectrum(self.frequencies, self.psd * factor, self.label)


@dataclass(frozen=True)
class LorentzianGuess:
    """Starting point of a fit, physical units."""

    f0: float
    Q: float
    amplitude: float
    background: float


@dataclass(frozen=True)
class FitResult:
    """Fitted S(f) = A / ((f^2 - f0^2)^2 + (f0 f / Q)^2) + B."""

    f0: float  # Hz
    Q: float
    amplitude: float  # power units * Hz^4
    background: float  # power units
    residual_rms: float  # power units
    converged: bool
    initial_residual_rms: float = float("nan")
    n_evaluations: int = 0
    message: str = ""
    label: str = "synthetic"

    @property
    def linewidth(self) -> float:
        """Full width at half maximum f0 / Q in Hz."""
        return self.f0 / self.Q

    @property
    def peak_height(self) -> float:
        """A Q^2 / f0^4, the resonant PSD above background."""
        return self.amplitude * self.Q**2 / self.f0**4

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            "f0_hz": self.f0,
            "q": self.Q,
            "amplitude": self.amplitude,
            "background": self.background,
            "residual_rms": self.residual_rms,
            "converged": bool(self.converged),
        }
