#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Damped-oscillator line-shape fitting.

    S(f) = A / ((f^2 - f0^2)^2 + (f0 f / Q)^2) + B

The solver works on frequencies scaled by the guessed f0 and PSD scaled by
its peak, with parameters (x0, ln Q, h, b) where h is the resonant height
above background. ln Q keeps Q positive.
"""

from typing import Optional

import numpy as np
from scipy.optimize import least_squares

from .types import FitResult, GuessFailureError, LorentzianGuess, Spectrum


def lorentzian(f: np.ndarray, f0: float, q: float, amplitude: float, background: float) -> np.ndarray:
    """Evaluate S(f) in physical units."""
    f = np.asarray(f, dtype=float)
    return amplitude / ((f**2 - f0**2) ** 2 + (f0 * f / q) ** 2) + background


def _half_power_edge(f: np.ndarray, p: np.ndarray, peak: int, level: float, side: int) -> Optional[float]:
    """Interpolated frequency where p first drops to `level` walking away from the peak."""
    if side < 0:
        below = np.flatnonzero(p[:peak] <= level)
        if below.size == 0:
            return None
        j = int(below[-1])
        a, b = j, j + 1
    else:
        below = np.flatnonzero(p[peak + 1:] <= level)
        if below.size == 0:
            return None
        j = peak + 1 + int(below[0])
        a, b = j - 1, j
    if p[b] == p[a]:
        return float(f[a])
    return float(f[a] + (level - p[a]) * (f[b] - f[a]) / (p[b] - p[a]))


def initial_guess(spectrum: Spectrum) -> LorentzianGuess:
    """
    Starting parameters from the data alone.

    f0 at the PSD maximum, B the median PSD, Q = f0 / FWHM from the
    half-power crossings, A from the peak height.

    Raises:
        GuessFailureError: Flat spectrum or maximum on the window edge
    """
    f, p = spectrum.frequencies, spectrum.psd
    peak = int(np.argmax(p))
    p_max = float(p[peak])
    background = float(np.median(p))
    if not p_max > background or np.ptp(p) == 0.0:
        raise GuessFailureError("Spectrum is flat: no resonance peak above the median")
    if peak == 0 or peak == p.size - 1:
        raise GuessFailureError(
            f"Maximum at the window edge (f={f[peak]:.6g} Hz); widen or re-center the fit window"
        )

    f0 = float(f[peak])
    level = background + 0.5 * (p_max - background)
    left = _half_power_edge(f, p, peak, level, -1)
    right = _half_power_edge(f, p, peak, level, +1)
    if left is None and right is None:
        raise GuessFailureError("Resonance wider than the window: no half-power crossing")
    if left is None:
        width = 2.0 * (right - f0)
    elif right is None:
        width = 2.0 * (f0 - left)
    else:
        width = right - left
    if not width > 0:
        raise GuessFailureError(f"Degenerate linewidth estimate {width} Hz")

    q = f0 / width
    return LorentzianGuess(
        f0=f0, Q=q, amplitude=(p_max - background) * f0**4 / q**2, background=background
    )


def _scaled_model(params: np.ndarray, x: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    x0, ln_q, h, b = params
    q = np.exp(ln_q)
    u = (x**2 - x0**2) * q / x0**2
    v = x / x0
    denom = u**2 + v**2
    return h / denom + b, u, denom


def fit_lorentzian(
    spectrum: Spectrum,
    guess: Optional[LorentzianGuess] = None,
    xtol: float = 1e-9,
    max_iterations: int = 200,
) -> FitResult:
    """
    Levenberg-Marquardt fit of the damped-oscillator line shape.

    Args:
        spectrum: Windowed spectrum around one resonance
        guess: Starting point; computed by initial_guess when omitted
        xtol: Relative parameter-change tolerance
        max_iterations: Cap on model evaluations

    Returns:
        FitResult; `converged` is False with best-so-far parameters when
        the cap is hit
    """
    if guess is None:
        guess = initial_guess(spectrum)
    if not (guess.f0 > 0 and guess.Q > 0):
        raise GuessFailureError(f"Invalid guess f0={guess.f0}, Q={guess.Q}")

    f_ref = guess.f0
    p_ref = float(np.max(spectrum.psd))
    if not p_ref > 0:
        raise GuessFailureError("Spectrum is identically zero")
    x = spectrum.frequencies / f_ref
    y = spectrum.psd / p_ref

    height = guess.amplitude * guess.Q**2 / guess.f0**4
    p0 = np.array([1.0, np.log(guess.Q), height / p_ref, guess.background / p_ref])

    def residuals(params: np.ndarray) -> np.ndarray:
        return _scaled_model(params, x)[0] - y

    def jacobian(params: np.ndarray) -> np.ndarray:
        x0, _, h, _ = params
        _, u, denom = _scaled_model(params, x)
        v = x / x0
        d_denom_x0 = 2.0 * u * (-2.0 * np.exp(params[1]) * x**2 / x0**3) + 2.0 * v * (-x / x0**2)
        d_denom_lnq = 2.0 * u**2
        scale = -h / denom**2
        return np.column_stack(
            [scale * d_denom_x0, scale * d_denom_lnq, 1.0 / denom, np.ones_like(x)]
        )

    initial_rms = float(np.sqrt(np.mean(residuals(p0) ** 2)) * p_ref)
    sol = least_squares(
        residuals,
        p0,
        jac=jacobian,
        method="lm",
        xtol=xtol,
        ftol=1e-14,
        gtol=1e-14,
        max_nfev=max_iterations,
    )

    x0, ln_q, h, b = sol.x
    f0 = float(x0 * f_ref)
    q = float(np.exp(ln_q))
    return FitResult(
        f0=f0,
        Q=q,
        amplitude=float(h * p_ref * f0**4 / q**2),
        background=float(b * p_ref),
        residual_rms=float(np.sqrt(np.mean(sol.fun**2)) * p_ref),
        converged=bool(sol.status > 0),
        initial_residual_rms=initial_rms,
        n_evaluations=int(sol.nfev),
        message=str(sol.message),
        label=spectrum.label.value,
    )
