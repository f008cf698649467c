"""Tests for spiral centerline sampling and the mask outline.

Reference device is row 2: b = 2000 nm, t = 200 nm, N = 5,
r_in = 1000 nm, so p = 2.2 um and the mean radius is 6.5 um.
"""
from __future__ import annotations

import math

import numpy as np
import pytest
from scipy.integrate import quad

from spiral_geometry import (
    NM,
    Boundary,
    GeometryCollisionError,
    InvalidSpecError,
    Material,
    SpiralSpec,
    UnderResolutionError,
    build_spiral,
    footprint_area,
    is_simple_polygon,
    mask_polygon,
    min_clearance,
    sample_count,
    write_mask_csv,
    write_mask_svg,
)


@pytest.fixture(scope="module")
def row2_spec() -> SpiralSpec:
    return SpiralSpec.from_nm(b_nm=2000, h_nm=100, t_nm=200, d_nm=100, n_turns=5)


@pytest.fixture(scope="module")
def row2_curve(row2_spec):
    return build_spiral(row2_spec, samples_per_turn=64)


# ---------------------------------------------------------------------------
# SpiralSpec
# ---------------------------------------------------------------------------
def test_pitch_and_outer_radius(row2_spec):
    assert row2_spec.pitch == pytest.approx(2200 * NM)
    assert row2_spec.outer_radius == pytest.approx(1000 * NM + 5 * 2200 * NM)


@pytest.mark.parametrize("t_nm", [0.0, -50.0])
def test_touching_windings_rejected(t_nm):
    with pytest.raises(GeometryCollisionError):
        SpiralSpec.from_nm(b_nm=2000, h_nm=100, t_nm=t_nm, d_nm=100, n_turns=5)


@pytest.mark.parametrize(
    "field", ["strip_width_b", "thickness_h", "plate_gap_d", "turns_N", "inner_radius"]
)
def test_non_positive_dimensions_rejected(row2_spec, field):
    with pytest.raises(InvalidSpecError):
        row2_spec.replace(**{field: 0.0})


def test_inner_radius_below_half_width_rejected():
    with pytest.raises(InvalidSpecError, match=r"inner_radius.*b/2"):
        SpiralSpec.from_nm(b_nm=3000, h_nm=100, t_nm=200, d_nm=100, n_turns=5, r_in_nm=1000)


def test_inner_edge_may_reach_center(row2_spec):
    # row 2 sits exactly at r_in = b/2
    assert row2_spec.inner_radius == pytest.approx(0.5 * row2_spec.strip_width_b)
    with pytest.raises(InvalidSpecError):
        row2_spec.replace(strip_width_b=2001 * NM)


def test_boundary_parse_accepts_camel_case():
    assert Boundary.parse("OuterClamped") is Boundary.OUTER_CLAMPED
    assert Boundary.parse("both_clamped") is Boundary.BOTH_CLAMPED
    with pytest.raises(InvalidSpecError):
        Boundary.parse("hinged")


def test_material_validation():
    with pytest.raises(InvalidSpecError):
        Material(youngs_E=70e9, poisson_nu=0.5, density_rho=2700.0)
    with pytest.raises(InvalidSpecError):
        Material(youngs_E=-1.0, poisson_nu=0.3, density_rho=2700.0)


def test_material_from_config_units():
    material = Material.from_config({"material": {"youngs_gpa": 70, "residual_stress_mpa": 100}})
    assert material.youngs_E == pytest.approx(70e9)
    assert material.residual_stress_sigma == pytest.approx(1e8)


# ---------------------------------------------------------------------------
# build_spiral
# ---------------------------------------------------------------------------
def test_sample_count_is_ceiling():
    assert sample_count(5, 64) == 320
    assert sample_count(0.001, 64000) == 64
    assert sample_count(0.3, 64) == 20


def test_radius_follows_archimedean_law(row2_spec, row2_curve):
    expected = row2_spec.inner_radius + row2_spec.pitch * row2_curve.theta / (2 * np.pi)
    np.testing.assert_allclose(row2_curve.radius, expected, rtol=1e-12)
    np.testing.assert_allclose(
        np.hypot(row2_curve.positions[:, 0], row2_curve.positions[:, 1]), expected, rtol=1e-12
    )


def test_tangents_are_unit(row2_curve):
    np.testing.assert_allclose(np.linalg.norm(row2_curve.tangents, axis=1), 1.0, atol=1e-12)
    np.testing.assert_allclose(np.linalg.norm(row2_curve.normals, axis=1), 1.0, atol=1e-12)


def test_sampling_spans_all_turns(row2_curve):
    assert row2_curve.n_samples == 321
    assert row2_curve.theta[0] == 0.0
    assert row2_curve.theta[-1] == pytest.approx(10 * np.pi)


def test_total_length_matches_quadrature(row2_spec, row2_curve):
    a = row2_spec.pitch / (2 * np.pi)
    exact, _ = quad(
        lambda th: math.hypot(row2_spec.radius_at(th), a), 0.0, 10 * np.pi, epsabs=0, epsrel=1e-12, limit=200
    )
    assert row2_curve.total_length == pytest.approx(exact, rel=1e-6)
    assert row2_curve.total_length == pytest.approx(2.042e-4, rel=5e-3)


def test_arc_length_is_monotone(row2_curve):
    assert np.all(np.diff(row2_curve.cumulative_arc_length) > 0)
    assert row2_curve.cumulative_arc_length[-1] == row2_curve.total_length


def test_under_resolution_rejected(row2_spec):
    with pytest.raises(UnderResolutionError):
        build_spiral(row2_spec, samples_per_turn=4)


def test_partial_turn_is_valid():
    spec = SpiralSpec.from_nm(b_nm=2000, h_nm=100, t_nm=200, d_nm=100, n_turns=0.3)
    curve = build_spiral(spec, samples_per_turn=64)
    assert curve.n_samples == 21
    assert min_clearance(curve, spec.strip_width_b) == math.inf


def test_min_clearance_equals_gap(row2_spec, row2_curve):
    bound = 0.5 * row2_spec.pitch * (2 * np.pi / 64) ** 2
    clearance = min_clearance(row2_curve, row2_spec.strip_width_b)
    assert abs(clearance - row2_spec.gap_t) <= bound


# ---------------------------------------------------------------------------
# Footprint and mask
# ---------------------------------------------------------------------------
def test_footprint_area_close_to_length_times_width(row2_spec, row2_curve):
    area = footprint_area(row2_curve, row2_spec.strip_width_b)
    assert area == pytest.approx(row2_curve.total_length * row2_spec.strip_width_b, rel=1e-2)


def test_footprint_area_linear_in_width(row2_curve):
    narrow = footprint_area(row2_curve, 1000 * NM)
    wide = footprint_area(row2_curve, 2000 * NM)
    assert wide == pytest.approx(2 * narrow, rel=1e-2)


def test_mask_polygon_is_simple(row2_spec, row2_curve):
    polygon = mask_polygon(row2_curve, row2_spec.strip_width_b)
    assert polygon.n_vertices == 2 * row2_curve.n_samples + 2
    assert is_simple_polygon(polygon.vertices)
    assert polygon.area == pytest.approx(footprint_area(row2_curve, row2_spec.strip_width_b), rel=5e-3)


def test_mask_vertex_count_twenty_turns():
    spec = SpiralSpec.from_nm(b_nm=1000, h_nm=100, t_nm=100, d_nm=100, n_turns=20)
    curve = build_spiral(spec, samples_per_turn=64)
    assert curve.n_samples == 20 * 64 + 1
    assert mask_polygon(curve, spec.strip_width_b).n_vertices == 2564


def test_mask_polygon_detects_overlap(row2_curve):
    # strip wider than the pitch: adjacent windings overlap
    with pytest.raises(GeometryCollisionError):
        mask_polygon(row2_curve, 3000 * NM)


def test_mask_writers(tmp_path, row2_spec, row2_curve):
    polygon = mask_polygon(row2_curve, row2_spec.strip_width_b)
    csv_path = write_mask_csv(polygon, tmp_path / "mask.csv")
    svg_path = write_mask_svg(polygon, tmp_path / "mask.svg")

    lines = csv_path.read_text().splitlines()
    assert lines[0] == "x_nm,y_nm"
    assert len(lines) == polygon.n_vertices + 1
    svg = svg_path.read_text()
    assert svg.startswith("<?xml")
    assert svg.count('<path d="M') == 1
