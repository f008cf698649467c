#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Reading and writing `freq_hz,psd` spectrum CSV files and fit reports.
"""

import csv
import io
import json
from pathlib import Path
from typing import IO, Union

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .fit import lorentzian  # noqa: E402
from .types import FitResult, Spectrum, SpectrumKind, SpectrumParseError  # noqa: E402

HEADER = ["freq_hz", "psd"]

Source = Union[str, Path, IO[str]]


def _read_rows(stream: IO[str]) -> tuple[list[float], list[float]]:
    reader = csv.reader(stream)
    freqs: list[float] = []
    psd: list[float] = []
    header_seen = False
    for row in reader:
        line = reader.line_num
        if not row or all(not cell.strip() for cell in row):
            continue
        cells = [cell.strip() for cell in row]
        if not header_seen:
            if [c.lower() for c in cells] != HEADER:
                raise SpectrumParseError(f"expected header 'freq_hz,psd', got {','.join(cells)!r}", line)
            header_seen = True
            continue
        if len(cells) != 2:
            raise SpectrumParseError(f"expected 2 columns, got {len(cells)}", line)
        try:
            freqs.append(float(cells[0]))
            psd.append(float(cells[1]))
        except ValueError:
            raise SpectrumParseError(f"non-numeric value in {','.join(cells)!r}", line) from None
    if not header_seen:
        raise SpectrumParseError("empty spectrum file (no header)", 1)
    return freqs, psd


def load_spectrum(source: Source, label: SpectrumKind | str = SpectrumKind.NATURAL) -> Spectrum:
    """
    Parse and validate a spectrum CSV.

    Args:
        source: Path or open text stream
        label: driven | natural | synthetic

    Returns:
        Spectrum

    Raises:
        SpectrumParseError: Missing header or malformed row (with line number)
        SpectrumFormatError: Frequencies not strictly increasing
        SpectrumValidationError: Negative psd, non-finite values, < 16 points
    """
    if isinstance(source, (str, Path)):
        with open(source, "r", newline="", encoding="utf-8") as f:
            freqs, psd = _read_rows(f)
    else:
        freqs, psd = _read_rows(source)
    return Spectrum(np.array(freqs), np.array(psd), label)


def spectrum_to_csv(spectrum: Spectrum) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(HEADER)
    for f, p in zip(spectrum.frequencies, spectrum.psd):
        writer.writerow([repr(float(f)), repr(float(p))])
    return buffer.getvalue()


def write_spectrum_csv(spectrum: Spectrum, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(spectrum_to_csv(spectrum), encoding="utf-8")
    return path


def write_fit_report(result: FitResult, path: str | Path) -> Path:
    """JSON report `f0_hz, q, amplitude, background, residual_rms, converged`."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(result.to_json_dict(), f, indent=2, sort_keys=True)
        f.write("\n")
    return path


def write_fit_svg(spectrum: Spectrum, result: FitResult, path: str | Path) -> Path:
    """Data and fitted line shape on one plot."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with plt.rc_context({"svg.hashsalt": "spiralmech", "svg.fonttype": "path"}):
        fig, ax = plt.subplots(figsize=(1000.0 / 72.0, 600.0 / 72.0))
        f_khz = spectrum.frequencies * 1e-3
        ax.plot(f_khz, spectrum.psd, ".", color="gray", markersize=2, label=spectrum.label.value)
        model = lorentzian(spectrum.frequencies, result.f0, result.Q, result.amplitude, result.background)
        ax.plot(f_khz, model, color="black", linewidth=1.2,
                label=f"fit f0={result.f0 * 1e-3:.4f} kHz, Q={result.Q:.4g}")
        ax.set_xlabel("frequency (kHz)")
        ax.set_ylabel("PSD (arb.)")
        ax.legend(loc="upper right")
        ax.grid(True, linewidth=0.3)
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
    return path
