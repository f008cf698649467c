"""Tests for the suspended spiral inductor.

The mm-scale device (b = 1 um, h = 2 um, t = 9 um, N = 10, r_in = 400 um,
clamped at both ends) has d_out close to 1 mm. Its current-sheet
inductance is checked against a concentric-loop summation, and its
in-plane coupling must land in the 1 mHz to 10 Hz band.
"""
from __future__ import annotations

import numpy as np
import pytest
from scipy.constants import mu_0

from beam_mechanics import Polarization, solve_spiral
from electromechanics import ModePolarizationError
from inductor_model import (
    CIRCULAR_SHEET_COEFFS,
    InductorResult,
    current_sheet_inductance,
    deformed_diameters,
    deformed_inductance,
    greenhouse_inductance,
    inductance_derivative,
    inductor_g0,
    loop_mutual_inductance,
    loop_self_inductance,
    spiral_diameters,
    spiral_inductance,
)
from spiral_geometry import Boundary, InvalidSpecError, SpiralSpec, build_spiral

C_READOUT = 5e-15


@pytest.fixture(scope="module")
def mm_spec() -> SpiralSpec:
    return SpiralSpec.from_nm(
        b_nm=1000, h_nm=2000, t_nm=9000, d_nm=100, n_turns=10, r_in_nm=400000, boundary="BothClamped"
    )


@pytest.fixture(scope="module")
def mm_solution(mm_spec):
    return solve_spiral(mm_spec, elems_per_turn=32, n_modes=6)


@pytest.fixture(scope="module")
def mm_result(mm_spec, mm_solution) -> InductorResult:
    return inductor_g0(mm_spec, C_READOUT, solution=mm_solution, label="inductor_mm")


def _sheet_uniform_expansion_slope(n_turns: float, d_out: float, d_in: float) -> float:
    """dL/du when every radius grows by u: d_avg grows by 2u at fixed d_out - d_in."""
    c1, c2, c3, c4 = CIRCULAR_SHEET_COEFFS
    d_avg = 0.5 * (d_out + d_in)
    fill = (d_out - d_in) / (d_out + d_in)
    shape = np.log(c2 / fill) + c3 * fill + c4 * fill**2
    scale = mu_0 * n_turns**2 * c1 / 2.0
    return 2.0 * scale * (shape + 1.0 - c3 * fill - 2.0 * c4 * fill**2)


# ---------------------------------------------------------------------------
# Current sheet
# ---------------------------------------------------------------------------
def test_diameters_include_strip_width(mm_spec):
    d = spiral_diameters(mm_spec)
    assert d.d_out == pytest.approx(2 * mm_spec.outer_radius + mm_spec.strip_width_b)
    assert d.d_in == pytest.approx(2 * mm_spec.inner_radius - mm_spec.strip_width_b)
    assert d.d_out == pytest.approx(1e-3, rel=1e-2)


def test_inductance_scales_as_n_squared():
    one = current_sheet_inductance(5, 1e-3, 0.8e-3)
    two = current_sheet_inductance(10, 1e-3, 0.8e-3)
    assert two == pytest.approx(4 * one, rel=1e-12)


def test_fill_ratio_outside_range_rejected():
    with pytest.raises(InvalidSpecError):
        current_sheet_inductance(5, 0.8e-3, 1e-3)


def test_sheet_agrees_with_loop_summation(mm_spec):
    sheet = spiral_inductance(mm_spec)
    loops = greenhouse_inductance(mm_spec)
    assert sheet == pytest.approx(loops, rel=0.2)
    assert 100e-9 < sheet < 300e-9


def test_less_than_one_turn_rejected(mm_spec):
    with pytest.raises(InvalidSpecError):
        spiral_inductance(mm_spec.replace(turns_N=0.5))


# ---------------------------------------------------------------------------
# Loop summation
# ---------------------------------------------------------------------------
def test_mutual_inductance_far_field():
    r1, r2 = 1e-5, 1e-3
    far = mu_0 * np.pi * r1**2 / (2 * r2)
    assert loop_mutual_inductance(r1, r2) == pytest.approx(far, rel=1e-2)
    assert loop_mutual_inductance(r1, r2) == pytest.approx(loop_mutual_inductance(r2, r1), rel=1e-12)


def test_mutual_below_self():
    r = 450e-6
    assert 0 < loop_mutual_inductance(r, r + 10e-6) < loop_self_inductance(r, 1e-6, 2e-6)


def test_loop_smaller_than_section_rejected():
    with pytest.raises(InvalidSpecError):
        loop_self_inductance(1e-7, 1e-6, 2e-6)


# ---------------------------------------------------------------------------
# Deformation
# ---------------------------------------------------------------------------
def test_undeformed_diameters_reproduced(mm_spec):
    curve = build_spiral(mm_spec, 64)
    deformed = deformed_diameters(mm_spec, curve.theta, curve.radius)
    reference = spiral_diameters(mm_spec)
    assert deformed.d_out == pytest.approx(reference.d_out, rel=1e-12)
    assert deformed.d_in == pytest.approx(reference.d_in, rel=1e-12)
    assert deformed_inductance(mm_spec, curve.theta, curve.radius) == pytest.approx(
        spiral_inductance(mm_spec), rel=1e-12
    )


def test_short_centerline_rejected(mm_spec):
    theta = np.linspace(0.0, np.pi, 32)
    with pytest.raises(InvalidSpecError):
        deformed_diameters(mm_spec, theta, mm_spec.radius_at(theta))


def test_uniform_expansion_derivative(mm_spec):
    theta = build_spiral(mm_spec, 64).theta
    d = spiral_diameters(mm_spec)
    expected = _sheet_uniform_expansion_slope(mm_spec.turns_N, d.d_out, d.d_in)
    numeric = inductance_derivative(mm_spec, theta, np.ones_like(theta))
    assert numeric == pytest.approx(expected, rel=1e-6)


def test_derivative_second_order(mm_spec):
    theta = build_spiral(mm_spec, 64).theta
    d = spiral_diameters(mm_spec)
    expected = _sheet_uniform_expansion_slope(mm_spec.turns_N, d.d_out, d.d_in)
    ones = np.ones_like(theta)
    coarse = abs(inductance_derivative(mm_spec, theta, ones, relative_step=2e-2) - expected)
    fine = abs(inductance_derivative(mm_spec, theta, ones, relative_step=1e-2) - expected)
    assert 3.0 < coarse / fine < 5.0


def test_derivative_flips_with_mode_sign(mm_spec, mm_solution):
    profile = mm_solution.profile
    forward = inductance_derivative(mm_spec, profile.theta, profile.drho)
    backward = inductance_derivative(mm_spec, profile.theta, -profile.drho)
    assert forward != 0.0
    assert backward == pytest.approx(-forward, rel=1e-12)


def test_zero_displacement_has_zero_slope(mm_spec):
    theta = build_spiral(mm_spec, 64).theta
    assert inductance_derivative(mm_spec, theta, np.zeros_like(theta)) == 0.0


# ---------------------------------------------------------------------------
# Coupling
# ---------------------------------------------------------------------------
def test_fundamental_is_in_plane(mm_solution):
    assert mm_solution.fundamental.polarization is Polarization.IN_PLANE


def test_mm_inductor_g0_in_band(mm_result):
    assert 1e-3 <= mm_result.g0_over_2pi <= 10.0
    assert mm_result.omega_cav == pytest.approx(
        1.0 / np.sqrt(mm_result.L_self * mm_result.c_readout), rel=1e-12
    )
    assert mm_result.g0 == pytest.approx(
        mm_result.x_zp * mm_result.omega_cav / (2 * mm_result.L_self) * abs(mm_result.dL_dx), rel=1e-12
    )


def test_result_json_units(mm_result):
    data = mm_result.to_json_dict()
    assert data["label"] == "inductor_mm"
    assert data["l_self_nH"] == pytest.approx(mm_result.L_self * 1e9)
    assert data["c_readout_fF"] == pytest.approx(5.0)
    assert data["g0_over_2pi_hz"] == pytest.approx(mm_result.g0 / (2 * np.pi))


def test_inductor_needs_both_ends_clamped(mm_spec):
    with pytest.raises(InvalidSpecError):
        inductor_g0(mm_spec.replace(boundary=Boundary.OUTER_CLAMPED), C_READOUT)


def test_out_of_plane_fundamental_refused():
    # flat strip: out-of-plane bending is softest
    spec = SpiralSpec.from_nm(
        b_nm=2000, h_nm=100, t_nm=200, d_nm=100, n_turns=2, boundary="BothClamped"
    )
    with pytest.raises(ModePolarizationError):
        inductor_g0(spec, C_READOUT)
