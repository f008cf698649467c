"""Tests for spectrum I/O, peak guessing and the Lorentzian fit.

Generator parameters follow the measured resonances of a 5-turn spiral:
natural response at 21.6 kHz with Q = 3600 and a driven response at
21.5 kHz with Q = 148.
"""
from __future__ import annotations

import io
import json

import numpy as np
import pytest

from spectrum_analysis import (
    GuessFailureError,
    LorentzianGuess,
    Spectrum,
    SpectrumFormatError,
    SpectrumKind,
    SpectrumParseError,
    SpectrumValidationError,
    fit_lorentzian,
    initial_guess,
    load_spectrum,
    lorentzian,
    spectrum_to_csv,
    synthetic_spectrum,
    write_fit_report,
    write_fit_svg,
    write_spectrum_csv,
)

NATURAL = dict(f0=21.6e3, q=3600.0, f_min=21.0e3, f_max=22.2e3, n_points=4001)
DRIVEN = dict(f0=21.5e3, q=148.0, f_min=20.0e3, f_max=23.0e3, n_points=4001)


@pytest.fixture(scope="module")
def clean_natural() -> Spectrum:
    return synthetic_spectrum(**NATURAL)


# ---------------------------------------------------------------------------
# Model and guess
# ---------------------------------------------------------------------------
def test_lorentzian_peak_height():
    f0, q, a, b = 21.6e3, 3600.0, 2.0, 0.1
    assert lorentzian(f0, f0, q, a, b) == pytest.approx(a * q**2 / f0**4 + b)


def test_guess_on_clean_spectrum(clean_natural):
    guess = initial_guess(clean_natural)
    bin_width = clean_natural.frequencies[1] - clean_natural.frequencies[0]
    assert abs(guess.f0 - NATURAL["f0"]) <= bin_width
    assert guess.Q == pytest.approx(NATURAL["q"], rel=0.2)


def test_flat_spectrum_has_no_guess():
    flat = Spectrum(np.linspace(1e3, 2e3, 64), np.full(64, 0.5))
    with pytest.raises(GuessFailureError):
        initial_guess(flat)


def test_peak_on_window_edge_has_no_guess(clean_natural):
    with pytest.raises(GuessFailureError):
        initial_guess(clean_natural.window(21.0e3, 21.55e3))


# ---------------------------------------------------------------------------
# Fit
# ---------------------------------------------------------------------------
def test_noiseless_recovery(clean_natural):
    result = fit_lorentzian(clean_natural)
    assert result.converged
    assert result.f0 == pytest.approx(NATURAL["f0"], rel=1e-6)
    assert result.Q == pytest.approx(NATURAL["q"], rel=1e-6)
    assert result.residual_rms < result.initial_residual_rms


def test_noisy_natural_recovery_over_seeds():
    f0s, qs = [], []
    for seed in range(100):
        result = fit_lorentzian(synthetic_spectrum(**NATURAL, noise=0.01, seed=seed))
        f0s.append(result.f0)
        qs.append(result.Q)
    assert np.median(f0s) == pytest.approx(NATURAL["f0"], rel=1e-3)
    assert np.median(qs) == pytest.approx(NATURAL["q"], rel=2e-2)


def test_driven_recovery():
    result = fit_lorentzian(synthetic_spectrum(**DRIVEN, noise=0.01, seed=1, label="driven"))
    assert result.converged
    assert result.f0 == pytest.approx(DRIVEN["f0"], rel=2e-2)
    assert result.Q == pytest.approx(DRIVEN["q"], rel=2e-2)
    assert result.label == "driven"


def test_fit_invariants():
    spectrum = synthetic_spectrum(**NATURAL, noise=0.01, seed=7)
    result = fit_lorentzian(spectrum)
    f_lo, f_hi = spectrum.span
    assert f_lo <= result.f0 <= f_hi
    assert result.Q > 0
    assert result.linewidth == pytest.approx(result.f0 / result.Q)


def test_scale_equivariance():
    spectrum = synthetic_spectrum(**NATURAL, noise=0.01, seed=3)
    base = fit_lorentzian(spectrum)
    scaled = fit_lorentzian(spectrum.scaled(250.0))
    assert scaled.f0 == pytest.approx(base.f0, rel=1e-9)
    assert scaled.Q == pytest.approx(base.Q, rel=1e-9)
    assert scaled.amplitude == pytest.approx(250.0 * base.amplitude, rel=1e-9)
    assert scaled.background == pytest.approx(250.0 * base.background, rel=1e-9)


def test_refit_from_own_result_is_stable():
    spectrum = synthetic_spectrum(**DRIVEN, noise=0.01, seed=5)
    first = fit_lorentzian(spectrum, xtol=1e-13)
    again = fit_lorentzian(
        spectrum,
        LorentzianGuess(first.f0, first.Q, first.amplitude, first.background),
        xtol=1e-13,
    )
    assert again.f0 == pytest.approx(first.f0, rel=1e-10)
    assert again.Q == pytest.approx(first.Q, rel=1e-10)


def test_iteration_cap_reports_best_so_far():
    spectrum = synthetic_spectrum(**DRIVEN, noise=0.01, seed=2)
    poor = LorentzianGuess(f0=21.8e3, Q=60.0, amplitude=21.8e3**4 / 60.0**2, background=0.0)
    result = fit_lorentzian(spectrum, poor, max_iterations=3)
    assert not result.converged
    assert np.isfinite(result.f0) and np.isfinite(result.Q)


def test_invalid_guess_rejected(clean_natural):
    with pytest.raises(GuessFailureError):
        fit_lorentzian(clean_natural, LorentzianGuess(f0=21.6e3, Q=-1.0, amplitude=1.0, background=0.0))


# ---------------------------------------------------------------------------
# Spectrum validation and I/O
# ---------------------------------------------------------------------------
def _csv(rows) -> io.StringIO:
    return io.StringIO("freq_hz,psd\n" + "".join(f"{f},{p}\n" for f, p in rows))


def test_spectrum_needs_enough_points():
    with pytest.raises(SpectrumValidationError):
        Spectrum(np.arange(10.0), np.ones(10))


def test_negative_psd_rejected():
    rows = [(1000.0 + i, 1.0) for i in range(20)]
    rows[4] = (1004.0, -0.5)
    with pytest.raises(SpectrumValidationError):
        load_spectrum(_csv(rows))


def test_unordered_frequencies_rejected():
    rows = [(1000.0 + i, 1.0) for i in range(20)]
    rows[6], rows[7] = rows[7], rows[6]
    with pytest.raises(SpectrumFormatError):
        load_spectrum(_csv(rows))


def test_missing_header_reports_line():
    with pytest.raises(SpectrumParseError) as err:
        load_spectrum(io.StringIO("1000,1.0\n1001,1.0\n"))
    assert err.value.line == 1


def test_bad_row_reports_line():
    text = "freq_hz,psd\n1000,1.0\n1001,abc\n"
    with pytest.raises(SpectrumParseError) as err:
        load_spectrum(io.StringIO(text))
    assert err.value.line == 3
    assert str(err.value).startswith("line 3:")


def test_unknown_label_rejected():
    with pytest.raises(SpectrumValidationError):
        SpectrumKind.parse("thermal")


def test_csv_file_round_trip(tmp_path, clean_natural):
    path = write_spectrum_csv(clean_natural, tmp_path / "natural.csv")
    loaded = load_spectrum(path, label="synthetic")
    np.testing.assert_allclose(loaded.frequencies, clean_natural.frequencies, rtol=1e-12)
    np.testing.assert_allclose(loaded.psd, clean_natural.psd, rtol=1e-12)
    assert spectrum_to_csv(clean_natural).splitlines()[0] == "freq_hz,psd"


def test_fit_report_and_plot(tmp_path, clean_natural):
    result = fit_lorentzian(clean_natural)
    report = json.loads(write_fit_report(result, tmp_path / "fit.json").read_text())
    assert set(report) >= {"f0_hz", "q", "amplitude", "background", "residual_rms", "converged"}
    assert report["converged"] is True
    svg = write_fit_svg(clean_natural, result, tmp_path / "fit.svg").read_text()
    assert svg.count("<svg") == 1
