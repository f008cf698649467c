#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Spiral Geometry Package

Parametrization of uniform Archimedean spirals, centerline sampling with
local frames, strip footprint and fabrication mask outlines.
"""

from .types import (
    NM,
    ALUMINUM,
    Boundary,
    Material,
    SpiralSpec,
    SpiralCurve,
    ClosedPolygon,
    InvalidSpecError,
    UnderResolutionError,
    GeometryCollisionError,
)
from .curve import build_spiral, spiral_point, strip_edges, min_clearance, sample_count
from .mask import (
    footprint_area,
    polygon_area,
    mask_polygon,
    find_self_intersection,
    is_simple_polygon,
    polygon_svg,
    write_mask_svg,
    write_mask_csv,
)

__version__ = "1.0.0"

__all__ = [
    # Types
    "NM",
    "ALUMINUM",
    "Boundary",
    "Material",
    "SpiralSpec",
    "SpiralCurve",
    "ClosedPolygon",
    # Errors
    "InvalidSpecError",
    "UnderResolutionError",
    "GeometryCollisionError",
    # Curve
    "build_spiral",
    "spiral_point",
    "strip_edges",
    "min_clearance",
    "sample_count",
    # Mask
    "footprint_area",
    "polygon_area",
    "mask_polygon",
    "find_self_intersection",
    "is_simple_polygon",
    "polygon_svg",
    "write_mask_svg",
    "write_mask_csv",
]
