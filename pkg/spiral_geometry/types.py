#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Type definitions and data classes for spiral geometry.

All stored lengths are SI meters; the `from_nm` constructors accept the
nanometer values used in device tables.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

import numpy as np

NM = 1e-9


class InvalidSpecError(ValueError):
    """Raised when a spiral or material parametrization is not physical."""


class UnderResolutionError(ValueError):
    """Raised when a discretization density is below the supported minimum."""


class GeometryCollisionError(InvalidSpecError):
    """Raised when strip outlines touch or cross (t <= 0 or under-sampling)."""


class Boundary(Enum):
    """Mechanical anchoring of the released spiral."""

    OUTER_CLAMPED = "outer_clamped"
    BOTH_CLAMPED = "both_clamped"

    @classmethod
    def parse(cls, value: "str | Boundary") -> "Boundary":
        """Accept enum members, values, or CamelCase names ("OuterClamped")."""
        if isinstance(value, Boundary):
            return value
        key = str(value).strip().lower().replace("-", "_")
        aliases = {"outerclamped": "outer_clamped", "bothclamped": "both_clamped"}
        key = aliases.get(key, key)
        for member in cls:
            if member.value == key:
                return member
        raise InvalidSpecError(f"Unknown boundary condition: {value!r}")


@dataclass(frozen=True)
class Material:
    """Isotropic elastic material."""

    youngs_E: float  # Pa
    poisson_nu: float
    density_rho: float  # kg/m^3
    residual_stress_sigma: float = 0.0  # Pa, membrane baseline only
    name: str = "Al"

    def __post_init__(self) -> None:
        if not self.youngs_E > 0:
            raise InvalidSpecError(f"Young's modulus must be > 0, got {self.youngs_E}")
        if not 0.0 <= self.poisson_nu < 0.5:
            raise InvalidSpecError(f"Poisson ratio must be in [0, 0.5), got {self.poisson_nu}")
        if not self.density_rho > 0:
            raise InvalidSpecError(f"Density must be > 0, got {self.density_rho}")
        if self.residual_stress_sigma < 0:
            raise InvalidSpecError(
                f"Residual stress must be >= 0, got {self.residual_stress_sigma}"
            )

    @property
    def shear_modulus(self) -> float:
        """G = E / 2(1 + nu)."""
        return self.youngs_E / (2.0 * (1.0 + self.poisson_nu))

    def with_stress(self, sigma: float) -> "Material":
        """Copy of this material carrying residual stress `sigma` (Pa)."""
        return Material(self.youngs_E, self.poisson_nu, self.density_rho, sigma, self.name)

    @classmethod
    def from_config(cls, cfg: Dict[str, Any], overrides: Optional[Dict[str, Any]] = None) -> "Material":
        """
        Build a material from the `material` section of config.yml.

        Args:
            cfg: Full configuration dictionary
            overrides: Optional keys in the same units overriding the defaults

        Returns:
            Material instance in SI units
        """
        section = dict(cfg.get("material", {}))
        section.update(overrides or {})
        return cls(
            youngs_E=float(section.get("youngs_gpa", 70.0)) * 1e9,
            poisson_nu=float(section.get("poisson", 0.33)),
            density_rho=float(section.get("density_kg_m3", 2700.0)),
            residual_stress_sigma=float(section.get("residual_stress_mpa", 0.0)) * 1e6,
            name=str(section.get("name", "Al")),
        )


ALUMINUM = Material(youngs_E=70e9, poisson_nu=0.33, density_rho=2700.0)


@dataclass(frozen=True)
class SpiralSpec:
    """Full device parametrization of a uniform Archimedean spiral."""

    strip_width_b: float
    thickness_h: float
    gap_t: float
    plate_gap_d: float
    turns_N: float
    inner_radius: float = 1000 * NM
    material: Material = field(default=ALUMINUM)
    boundary: Boundary = Boundary.OUTER_CLAMPED

    def __post_init__(self) -> None:
        object.__setattr__(self, "boundary", Boundary.parse(self.boundary))
        if self.gap_t <= 0:
            raise GeometryCollisionError(
                f"Inter-turn gap must be > 0 so windings cannot touch, got t={self.gap_t}"
            )
        for name in ("strip_width_b", "thickness_h", "plate_gap_d", "inner_radius"):
            value = getattr(self, name)
            if not value > 0:
                raise InvalidSpecError(f"{name} must be > 0, got {value}")
        if not self.turns_N > 0:
            raise InvalidSpecError(f"turns_N must be > 0, got {self.turns_N}")
        # the innermost strip edge may reach the center but not cross it
        half_width = 0.5 * self.strip_width_b
        if self.inner_radius < half_width * (1.0 - 1e-12):
            raise InvalidSpecError(
                f"inner_radius {self.inner_radius:.4g} m must be >= half the strip width "
                f"b/2 = {half_width:.4g} m"
            )

    @property
    def pitch(self) -> float:
        """Radial pitch p = b + t."""
        return self.strip_width_b + self.gap_t

    @property
    def outer_radius(self) -> float:
        """Centerline radius at the outer end, rho(2 pi N)."""
        return self.inner_radius + self.turns_N * self.pitch

    def radius_at(self, theta: np.ndarray | float) -> np.ndarray | float:
        """Archimedean law rho(theta) = r_in + p theta / 2 pi."""
        return self.inner_radius + self.pitch * np.asarray(theta) / (2.0 * np.pi)

    def replace(self, **changes: Any) -> "SpiralSpec":
        """Copy with some fields changed (validated again)."""
        values = {
            "strip_width_b": self.strip_width_b,
            "thickness_h": self.thickness_h,
            "gap_t": self.gap_t,
            "plate_gap_d": self.plate_gap_d,
            "turns_N": self.turns_N,
            "inner_radius": self.inner_radius,
            "material": self.material,
            "boundary": self.boundary,
        }
        values.update(changes)
        return SpiralSpec(**values)

    @classmethod
    def from_nm(
        cls,
        b_nm: float,
        h_nm: float,
        t_nm: float,
        d_nm: float,
        n_turns: float,
        r_in_nm: float = 1000.0,
        material: Material = ALUMINUM,
        boundary: "Boundary | str" = Boundary.OUTER_CLAMPED,
    ) -> "SpiralSpec":
        """Build a spec from nanometer dimensions."""
        return cls(
            strip_width_b=b_nm * NM,
            thickness_h=h_nm * NM,
            gap_t=t_nm * NM,
            plate_gap_d=d_nm * NM,
            turns_N=float(n_turns),
            inner_radius=r_in_nm * NM,
            material=material,
            boundary=Boundary.parse(boundary),
        )


@dataclass(frozen=True, eq=False)
class SpiralCurve:
    """Sampled centerline of a spiral with local frames."""

    theta: np.ndarray  # (n,) rad
    radius: np.ndarray  # (n,) m
    positions: np.ndarray  # (n, 3) m
    tangents: np.ndarray  # (n, 3) unit
    normals: np.ndarray  # (n, 3) unit, in-plane, pointing outward
    cumulative_arc_length: np.ndarray  # (n,) m
    total_length: float
    pitch: float

    @property
    def n_samples(self) -> int:
        return int(self.theta.size)

    @property
    def radial_directions(self) -> np.ndarray:
        """Unit radial vectors e_rho at each sample, shape (n, 3)."""
        out = np.zeros_like(self.positions)
        out[:, 0] = np.cos(self.theta)
        out[:, 1] = np.sin(self.theta)
        return out


@dataclass(frozen=True, eq=False)
class ClosedPolygon:
    """Closed outline; the last vertex connects implicitly to the first."""

    vertices: np.ndarray  # (m, 2) m

    @property
    def n_vertices(self) -> int:
        return int(self.vertices.shape[0])

    @property
    def area(self) -> float:
        """Unsigned shoelace area (m^2)."""
        x = self.vertices[:, 0]
        y = self.vertices[:, 1]
        return 0.5 * abs(float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))))

    def vertices_nm(self) -> np.ndarray:
        return self.vertices / NM
