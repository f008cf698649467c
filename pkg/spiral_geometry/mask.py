#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Strip outline, footprint area and mask export (SVG path, vertex CSV).
"""

import csv
from pathlib import Path
from typing import Optional, Tuple

import numpy as np

from .curve import strip_edges
from .types import NM, ClosedPolygon, GeometryCollisionError, SpiralCurve


def polygon_area(vertices: np.ndarray) -> float:
    """Unsigned shoelace area of a closed vertex ring (m^2)."""
    return ClosedPolygon(np.asarray(vertices, dtype=float)).area


def _outline(curve: SpiralCurve, strip_width_b: float) -> np.ndarray:
    outer, inner = strip_edges(curve, strip_width_b)
    centre = curve.positions[:, :2]
    # outer edge forward, end cap, inner edge backward, start cap
    return np.vstack([outer, centre[-1:], inner[::-1], centre[:1]])


def footprint_area(curve: SpiralCurve, strip_width_b: float) -> float:
    """
    Area of the strip footprint (m^2), the exact polygon area of the
    offset outline at the curve's sampling.
    """
    return polygon_area(_outline(curve, strip_width_b))


def find_self_intersection(vertices: np.ndarray) -> Optional[Tuple[int, int]]:
    """
    Segment-pair sweep over a closed ring.

    Non-adjacent segments that cross or touch are reported. Returns the
    first offending (i, j) segment index pair, or None for a simple ring.
    """
    v = np.asarray(vertices, dtype=float)
    m = v.shape[0]
    a = v
    b = np.roll(v, -1, axis=0)
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    scale = float(np.max(np.abs(v))) or 1.0
    eps = (scale * 1e-12) ** 2

    def orient(p, q, r):
        return (q[..., 0] - p[..., 0]) * (r[..., 1] - p[..., 1]) - (q[..., 1] - p[..., 1]) * (
            r[..., 0] - p[..., 0]
        )

    for i in range(m - 2):
        j = np.arange(i + 2, m)
        if i == 0:
            j = j[j != m - 1]
        if j.size == 0:
            continue
        overlap = np.all(lo[j] <= hi[i] + scale * 1e-15, axis=1) & np.all(
            hi[j] >= lo[i] - scale * 1e-15, axis=1
        )
        if not np.any(overlap):
            continue
        jj = j[overlap]
        o1 = orient(a[i], b[i], a[jj])
        o2 = orient(a[i], b[i], b[jj])
        o3 = orient(a[jj], b[jj], a[i])
        o4 = orient(a[jj], b[jj], b[i])
        hit = (o1 * o2 <= eps) & (o3 * o4 <= eps)
        if np.any(hit):
            return i, int(jj[np.argmax(hit)])
    return None


def is_simple_polygon(vertices: np.ndarray) -> bool:
    """True when no two non-adjacent edges cross or touch."""
    return find_self_intersection(vertices) is None


def mask_polygon(curve: SpiralCurve, strip_width_b: float) -> ClosedPolygon:
    """
    Single closed outline tracing both strip edges.

    Vertex count is 2 * samples + 2 (one cap vertex on the centerline at
    each end).

    Raises:
        GeometryCollisionError: if the outline is not simple
    """
    vertices = _outline(curve, strip_width_b)
    crossing = find_self_intersection(vertices)
    if crossing is not None:
        i, j = crossing
        raise GeometryCollisionError(
            f"Strip outline self-intersects (edges {i} and {j}); "
            f"gap too small or sampling too coarse"
        )
    return ClosedPolygon(vertices)


def polygon_svg(polygon: ClosedPolygon) -> str:
    """SVG document with the outline as one closed path, 1 user unit = 1 nm."""
    pts = polygon.vertices_nm()
    xmin, ymin = pts.min(axis=0)
    xmax, ymax = pts.max(axis=0)
    pad = 0.02 * max(xmax - xmin, ymax - ymin)
    x0, y0 = xmin - pad, ymin - pad
    width, height = (xmax - xmin) + 2 * pad, (ymax - ymin) + 2 * pad

    commands = [f"M {pts[0, 0]:.3f} {pts[0, 1]:.3f}"]
    commands.extend(f"L {x:.3f} {y:.3f}" for x, y in pts[1:])
    commands.append("Z")

    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{x0:.3f} {y0:.3f} {width:.3f} {height:.3f}" '
        f'width="{width:.3f}" height="{height:.3f}">\n'
        f'  <rect x="{x0:.3f}" y="{y0:.3f}" width="{width:.3f}" height="{height:.3f}" fill="white"/>\n'
        f'  <path d="{" ".join(commands)}" fill="black" stroke="none"/>\n'
        "</svg>\n"
    )


def write_mask_svg(polygon: ClosedPolygon, path: str | Path) -> Path:
    """Write the outline as an SVG file."""
    path = Path(path)
    path.write_text(polygon_svg(polygon), encoding="utf-8")
    return path


def write_mask_csv(polygon: ClosedPolygon, path: str | Path) -> Path:
    """Write vertices as `x_nm,y_nm` rows; closure is implicit."""
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["x_nm", "y_nm"])
        for x, y in polygon.vertices / NM:
            writer.writerow([f"{x:.4f}", f"{y:.4f}"])
    return path
