"""Tests for spiral capacitance, frequency pull and g0.

Analytical references
---------------------
Flat strip over an electrode:           C = eps0 b L / d
Rigid plate (drho = 1 everywhere):      dC/dx = C / d
LC cavity:                              omega = 1 / sqrt(L C)

Reference couplings (L = 70 nH, 40 fF readout electrode shared by the
carved rows): row 2 at 418 Hz, row 3 at 701 Hz, row 4 at 941 Hz, drum at
60 Hz; all accepted within a factor of 2.
"""
from __future__ import annotations

import numpy as np
import pytest
from scipy.constants import epsilon_0

from beam_mechanics import DeformationProfile, membrane_stress_for_frequency, solve_spiral
from electromechanics import (
    ContactError,
    CouplingResult,
    ModePolarizationError,
    capacitance,
    capacitance_derivative,
    cavity_frequency,
    compute_g0,
    cooperativity_ratio,
    fit_exponent,
    frequency_pull,
    membrane_g0,
    profile_on_curve,
    rigid_piston_g0,
    sqrt_n_exponent,
)
from spiral_geometry import ALUMINUM, NM, SpiralSpec, build_spiral, footprint_area

L0 = 70e-9
C_CAVITY = 40e-15  # shared readout electrode of the carved rows

ROWS = {
    "row2": ((2000, 100, 200, 100, 5), 418.0),
    "row3": ((1000, 100, 200, 100, 10), 701.0),
    "row4": ((1000, 100, 100, 100, 20), 941.0),
}


def within_factor(value: float, target: float, factor: float = 2.0) -> bool:
    return target / factor <= value <= target * factor


@pytest.fixture(scope="module")
def row2_spec() -> SpiralSpec:
    return SpiralSpec.from_nm(*ROWS["row2"][0])


@pytest.fixture(scope="module")
def row2_curve(row2_spec):
    return build_spiral(row2_spec, 64)


@pytest.fixture(scope="module")
def row2_solution(row2_spec):
    return solve_spiral(row2_spec, elems_per_turn=32, n_modes=6)


@pytest.fixture(scope="module")
def row2_profile(row2_solution) -> DeformationProfile:
    return row2_solution.profile


@pytest.fixture(scope="module")
def table_results():
    return {
        name: compute_g0(SpiralSpec.from_nm(*dims), L0, c_cavity=C_CAVITY, label=name) for name, (dims, _) in ROWS.items()
    }


@pytest.fixture(scope="module")
def drum() -> CouplingResult:
    sigma = membrane_stress_for_frequency(12e-6, 6.2e6, ALUMINUM.density_rho)
    return membrane_g0(12e-6, 100e-9, 100e-9, ALUMINUM.with_stress(sigma), L0)


# ---------------------------------------------------------------------------
# Capacitance
# ---------------------------------------------------------------------------
def test_flat_capacitance_is_parallel_plate(row2_spec, row2_curve):
    c0 = capacitance(row2_curve, row2_spec.strip_width_b, row2_spec.plate_gap_d)
    expected = epsilon_0 * row2_spec.strip_width_b * row2_curve.total_length / row2_spec.plate_gap_d
    assert c0 == pytest.approx(expected, rel=1e-12)
    area = footprint_area(row2_curve, row2_spec.strip_width_b)
    assert c0 == pytest.approx(epsilon_0 * area / row2_spec.plate_gap_d, rel=1e-2)
    assert c0 == pytest.approx(36e-15, rel=2e-2)


def test_cavity_frequency_in_ghz_band():
    assert cavity_frequency(L0, 36e-15) / (2 * np.pi) == pytest.approx(3.2e9, rel=3e-2)
    with pytest.raises(ValueError):
        cavity_frequency(0.0, 36e-15)


def test_rigid_piston_derivative_exact(row2_spec, row2_curve):
    b, d = row2_spec.strip_width_b, row2_spec.plate_gap_d
    c0 = capacitance(row2_curve, b, d)
    assert capacitance_derivative(row2_curve, b, d, 1.0) == pytest.approx(c0 / d, rel=1e-12)


def test_linearized_derivative_matches_finite_difference(row2_spec, row2_curve, row2_profile):
    b, d = row2_spec.strip_width_b, row2_spec.plate_gap_d
    u = d / 1000
    c_plus = capacitance(row2_curve, b, d, row2_profile, u)
    c_minus = capacitance(row2_curve, b, d, row2_profile, -u)
    linear = capacitance_derivative(row2_curve, b, d, row2_profile)
    assert (c_plus - c_minus) / (2 * u) == pytest.approx(linear, rel=1e-3)


def test_contact_raises(row2_spec, row2_curve):
    with pytest.raises(ContactError):
        capacitance(row2_curve, row2_spec.strip_width_b, row2_spec.plate_gap_d, 1.0, row2_spec.plate_gap_d)


def test_profile_on_curve_forms(row2_curve, row2_profile):
    from_profile = profile_on_curve(row2_curve, row2_profile)
    from_pair = profile_on_curve(row2_curve, (row2_profile.theta, row2_profile.drho))
    np.testing.assert_array_equal(from_profile, from_pair)
    assert from_profile.shape == row2_curve.theta.shape
    np.testing.assert_array_equal(profile_on_curve(row2_curve, 0.5), 0.5)
    np.testing.assert_array_equal(profile_on_curve(row2_curve, None), 0.0)


# ---------------------------------------------------------------------------
# Frequency pull
# ---------------------------------------------------------------------------
def test_pull_matches_cavity_finite_difference(row2_spec, row2_curve, row2_profile):
    b, d = row2_spec.strip_width_b, row2_spec.plate_gap_d
    _, pull = frequency_pull(row2_curve, row2_spec, row2_profile, L0)
    u = d / 1000
    w_plus = cavity_frequency(L0, capacitance(row2_curve, b, d, row2_profile, u))
    w_minus = cavity_frequency(L0, capacitance(row2_curve, b, d, row2_profile, -u))
    assert (w_plus - w_minus) / (2 * u) == pytest.approx(pull, rel=1e-3)
    assert pull < 0


def test_pull_grows_as_gap_closes(row2_spec, row2_curve, row2_profile):
    pulls = [
        abs(frequency_pull(row2_curve, row2_spec.replace(plate_gap_d=d * NM), row2_profile, L0)[1])
        for d in (400, 200, 100, 50)
    ]
    assert all(a < b for a, b in zip(pulls, pulls[1:]))


def test_cavity_capacitance_dilutes_pull(row2_spec, row2_curve, row2_profile):
    _, bare = frequency_pull(row2_curve, row2_spec, row2_profile, L0)
    _, loaded = frequency_pull(row2_curve, row2_spec, row2_profile, L0, c_cavity=36e-15)
    assert abs(loaded) < abs(bare)


# ---------------------------------------------------------------------------
# g0
# ---------------------------------------------------------------------------
@pytest.mark.parametrize("name", list(ROWS))
def test_table_rows_within_factor_two(table_results, name):
    assert within_factor(table_results[name].g0_over_2pi, ROWS[name][1])


def test_table_rows_ordering(table_results):
    results = [table_results[n] for n in ("row2", "row3", "row4")]
    freqs = [r.f_mech for r in results]
    g0s = [r.g0 for r in results]
    assert freqs[0] > freqs[1] > freqs[2]
    assert g0s[0] < g0s[1] < g0s[2]


def test_sqrt_n_scaling_of_table_rows(table_results):
    alpha = fit_exponent([5, 10, 20], [table_results[n].g0 for n in ("row2", "row3", "row4")])
    assert 0.3 <= alpha <= 0.8


def test_g0_ranking_independent_of_circuit_inductance():
    designs = [SpiralSpec.from_nm(*dims) for dims, _ in ROWS.values()]
    designs.append(SpiralSpec.from_nm(2000, 100, 200, 150, 5))
    solutions = [solve_spiral(spec, elems_per_turn=16, n_modes=2) for spec in designs]

    def g0_at(circuit_L):
        return np.array(
            [
                compute_g0(spec, circuit_L, c_cavity=C_CAVITY, solution=solution).g0
                for spec, solution in zip(designs, solutions)
            ]
        )

    short, long = g0_at(0.5 * L0), g0_at(4.0 * L0)
    np.testing.assert_array_equal(np.argsort(short), np.argsort(long))
    np.testing.assert_allclose(long / short, np.full(len(designs), np.sqrt(0.125)), rtol=1e-12)


def test_g0_decreases_with_gap(row2_spec, row2_solution):
    near = compute_g0(row2_spec, L0, solution=row2_solution)
    far = compute_g0(row2_spec.replace(plate_gap_d=200 * NM), L0, solution=row2_solution)
    assert far.g0 < near.g0


def test_rigid_piston_is_upper_bound(table_results):
    result = table_results["row2"]
    assert rigid_piston_g0(result) >= result.g0
    assert rigid_piston_g0(result) == pytest.approx(
        result.x_zp * result.omega_cav / (2 * result.c_total) * result.C0 / result.plate_gap_d, rel=1e-12
    )


def test_result_json_units(table_results):
    result = table_results["row2"]
    data = result.to_json_dict({"kind": "capacitor"})
    assert data["g0_over_2pi_hz"] == pytest.approx(result.g0 / (2 * np.pi))
    assert data["c0_fF"] == pytest.approx(result.C0 * 1e15)
    assert data["l0_nH"] == pytest.approx(70.0)
    assert data["d_nm"] == pytest.approx(100.0)
    assert data["kind"] == "capacitor"
    assert data["label"] == "row2"


def test_in_plane_fundamental_refused():
    # thickness far above width: the softest mode bends in plane
    spec = SpiralSpec.from_nm(b_nm=100, h_nm=2000, t_nm=200, d_nm=100, n_turns=1)
    with pytest.raises(ModePolarizationError):
        compute_g0(spec, L0)


# ---------------------------------------------------------------------------
# Membrane baseline and comparisons
# ---------------------------------------------------------------------------
def test_shared_cavity_is_the_drum_plate(drum):
    assert drum.C0 == pytest.approx(C_CAVITY, rel=1e-2)
    assert drum.c_cavity == 0.0


def test_drum_g0_within_factor_two(drum):
    assert drum.f_mech == pytest.approx(6.2e6, rel=1e-9)
    assert within_factor(drum.g0_over_2pi, 60.0)


@pytest.mark.parametrize("name, gain", [("row2", 7.0), ("row3", 12.0)])
def test_spiral_gain_over_drum(table_results, drum, name, gain):
    assert within_factor(table_results[name].g0 / drum.g0, gain)


def test_cooperativity_ratio(table_results, drum):
    ratio = cooperativity_ratio(table_results["row3"], drum)
    assert ratio == pytest.approx((table_results["row3"].g0 / drum.g0) ** 2)


def test_fit_exponent_recovers_power_law():
    n = np.array([5.0, 10.0, 20.0, 40.0])
    assert fit_exponent(n, 3.0 * n**0.5) == pytest.approx(0.5, abs=1e-12)
    with pytest.raises(ValueError):
        fit_exponent([5, 10], [1, 2])
    with pytest.raises(ValueError):
        fit_exponent([5, 10, 20], [1, -2, 3])


def test_sqrt_n_exponent_matches_individual_solves():
    base = SpiralSpec.from_nm(b_nm=2000, h_nm=100, t_nm=200, d_nm=100, n_turns=2)
    turns = [2, 3, 4]
    alpha = sqrt_n_exponent(base, turns, L0, elems_per_turn=16)
    g0 = [compute_g0(base.replace(turns_N=n), L0, elems_per_turn=16).g0 for n in turns]
    assert alpha == pytest.approx(fit_exponent(turns, g0), rel=1e-12)
    with pytest.raises(ValueError):
        sqrt_n_exponent(base, [2, 3], L0)
