#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
CSV and SVG export of modal tables and deformation profiles.

SVG output is byte-reproducible: fixed hash salt, no date metadata.
"""

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .types import DeformationProfile, ModalSolution, ProfileComponent  # noqa: E402

SVG_SIZE_PT = (1000.0, 600.0)


def write_modes_csv(solution: ModalSolution, path: str | Path) -> Path:
    """Modal table `mode,f_hz,polarization,energy_fraction_z`."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["mode", "f_hz", "polarization", "energy_fraction_z"])
        for i, mode in enumerate(solution.modes, start=1):
            writer.writerow(
                [i, f"{mode.frequency:.6f}", mode.polarization.value, f"{mode.energy_fraction_z:.6f}"]
            )
    return path


def write_profile_csv(profile: DeformationProfile, path: str | Path) -> Path:
    """Profile table `theta_rad,drho_norm`."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["theta_rad", "drho_norm"])
        for theta, drho in profile.pairs():
            writer.writerow([f"{theta:.9f}", f"{drho:.9f}"])
    return path


def write_profile_svg(profile: DeformationProfile, path: str | Path, title: str = "") -> Path:
    """Line plot of the normalized profile against winding angle."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    with plt.rc_context({"svg.hashsalt": "spiralmech", "svg.fonttype": "path"}):
        fig, ax = plt.subplots(figsize=(SVG_SIZE_PT[0] / 72.0, SVG_SIZE_PT[1] / 72.0))
        ax.plot(profile.theta, profile.drho, color="black", linewidth=1.2)
        ax.axhline(0.0, color="gray", linewidth=0.5)
        ax.set_xlabel("winding angle θ (rad)")
        label = "in-plane radial" if profile.component is ProfileComponent.IN_PLANE_RADIAL else "out-of-plane"
        ax.set_ylabel(f"normalized {label} displacement Δρ")
        if title:
            ax.set_title(title)
        ax.grid(True, linewidth=0.3)
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
    return path
