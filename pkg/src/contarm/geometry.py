"""Arm description and the joint-space <-> curve-parameter maps.

The arm is a single constant-curvature section whose backbone has a fixed
arc length ``L0``.  Three muscles sit on a circle of radius ``r`` around the
backbone, 120 degrees apart, the first one on the +X axis.  A configuration
is described either by the muscle length changes ``(l1, l2, l3)`` or by the
bending-plane angle ``theta`` and the subtended arc angle ``phi``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from os import PathLike
from typing import Iterator

import numpy as np

from contarm.errors import ConfigError, PhiOutOfRange

SQRT3 = math.sqrt(3.0)

# absolute slack (rad) when comparing a computed phi against phi_max
PHI_SLACK = 1e-12
# componentwise tolerance (m) for JointVector equality
JOINT_TOL = 1e-12


@dataclass(frozen=True)
class ArmGeometry:
    """Physical constants and limits of the arm.

    Attributes:
        L0: backbone (and rest muscle) length [m].
        r: distance from the backbone axis to each muscle [m].
        phi_max: largest admissible bending angle [rad], in (0, pi].
        l_limit: symmetric bound on each muscle length change [m].
            Defaults to a quarter of ``L0``.
    """

    L0: float
    r: float
    phi_max: float = math.pi
    l_limit: float | None = None

    def __post_init__(self):
        for name in ("L0", "r", "phi_max"):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ConfigError(f"{name} must be a finite number, got {value!r}")
        if self.L0 <= 0:
            raise ConfigError(f"L0 must be positive, got {self.L0}")
        if self.r <= 0:
            raise ConfigError(f"r must be positive, got {self.r}")
        if not 0 < self.phi_max <= math.pi:
            raise ConfigError(f"phi_max must lie in (0, pi], got {self.phi_max}")
        if self.l_limit is None:
            object.__setattr__(self, "l_limit", 0.25 * self.L0)
        elif not math.isfinite(self.l_limit) or self.l_limit <= 0:
            raise ConfigError(f"l_limit must be a positive number, got {self.l_limit}")
        for name in ("L0", "r", "phi_max", "l_limit"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @classmethod
    def from_mapping(cls, values: dict[str, str | float]) -> "ArmGeometry":
        """Build from ``L0_m``, ``r_m`` and optional ``phi_max_rad`` / ``l_limit_m``."""
        known = {"L0_m": "L0", "r_m": "r", "phi_max_rad": "phi_max", "l_limit_m": "l_limit"}
        unknown = sorted(set(values) - set(known))
        if unknown:
            raise ConfigError(f"unknown configuration key(s): {', '.join(unknown)}")
        missing = [k for k in ("L0_m", "r_m") if k not in values]
        if missing:
            raise ConfigError(f"missing required key(s): {', '.join(missing)}")
        kwargs = {}
        for key, value in values.items():
            try:
                number = float(value)
            except (TypeError, ValueError):
                raise ConfigError(f"{key}: not a number: {value!r}") from None
            kwargs[known[key]] = number
        return cls(**kwargs)

    @classmethod
    def from_config(cls, path: str | PathLike) -> "ArmGeometry":
        """Load a ``key = value`` file (``#`` starts a comment, ``:`` also accepted)."""
        values: dict[str, str] = {}
        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                for sep in ("=", ":"):
                    if sep in line:
                        key, value = (s.strip() for s in line.split(sep, 1))
                        break
                else:
                    raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw.strip()!r}")
                if not key or not value:
                    raise ConfigError(f"{path}:{lineno}: empty key or value")
                if key in values:
                    raise ConfigError(f"{path}:{lineno}: duplicate key {key!r}")
                values[key] = value
        return cls.from_mapping(values)


#: Dimensions of the prototype arm used in the simulation study.
PAPER_GEOMETRY = ArmGeometry(L0=0.37, r=0.018)


@dataclass(frozen=True)
class Point3:
    """Cartesian point [m]."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("x", "y", "z"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"Point3.{name} must be finite, got {value}")
            object.__setattr__(self, name, value)

    def __iter__(self) -> Iterator[float]:
        return iter((self.x, self.y, self.z))

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def distance(self, other: "Point3") -> float:
        return math.dist(tuple(self), tuple(other))


@dataclass(frozen=True)
class JointVector:
    """Muscle length changes.  Only ``l2`` and ``l3`` are stored; ``l1 = -(l2 + l3)``."""

    l2: float
    l3: float

    def __post_init__(self):
        for name in ("l2", "l3"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"JointVector.{name} must be finite, got {value}")
            object.__setattr__(self, name, value)

    @property
    def l1(self) -> float:
        return -(self.l2 + self.l3)

    @classmethod
    def from_triple(cls, l1: float, l2: float, l3: float, L0: float) -> "JointVector":
        """Accept a full triple only if it satisfies the sum-to-zero constraint."""
        if abs(l1 + l2 + l3) > 1e-12 * L0:
            raise ValueError(f"inconsistent joint triple: l1 + l2 + l3 = {l1 + l2 + l3:.3e} != 0")
        return cls(l2, l3)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.l1, self.l2, self.l3)

    def isclose(self, other: "JointVector", tol: float = JOINT_TOL) -> bool:
        return abs(self.l2 - other.l2) <= tol and abs(self.l3 - other.l3) <= tol


@dataclass(frozen=True)
class CurveParams:
    """Circular-arc descriptors of the backbone.

    ``theta`` is the bending-plane angle measured from +X, in [-pi, pi];
    ``phi`` is the angle subtended by the arc, in [0, pi].  A zero ``phi``
    is the straight arm and forces ``theta`` to 0.
    """

    theta: float
    phi: float
    straight: bool = field(init=False)

    def __post_init__(self):
        theta, phi = float(self.theta), float(self.phi)
        if not (math.isfinite(theta) and -math.pi <= theta <= math.pi):
            raise ValueError(f"theta must lie in [-pi, pi], got {theta}")
        if not (math.isfinite(phi) and 0.0 <= phi <= math.pi):
            raise ValueError(f"phi must lie in [0, pi], got {phi}")
        straight = phi == 0.0
        object.__setattr__(self, "theta", 0.0 if straight else theta)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "straight", straight)

    def radius(self, geom: ArmGeometry) -> float | None:
        """Radius of curvature ``L0 / phi``; ``None`` for the straight arm."""
        if self.straight:
            return None
        return geom.L0 / self.phi


STRAIGHT = CurveParams(0.0, 0.0)


def actuator_anchors(geom: ArmGeometry) -> tuple[Point3, Point3, Point3]:
    """Base-plane attachment points A1, A2, A3 of the three muscles."""
    r = geom.r
    return (
        Point3(r, 0.0, 0.0),
        Point3(-0.5 * r, 0.5 * SQRT3 * r, 0.0),
        Point3(-0.5 * r, -0.5 * SQRT3 * r, 0.0),
    )


def projection_distances(geom: ArmGeometry, theta: float) -> tuple[float, float, float]:
    """Signed distances from the base centre to each anchor projected on the bending direction."""
    r = geom.r
    return (
        r * math.cos(theta),
        r * math.cos(2.0 * math.pi / 3.0 - theta),
        r * math.cos(4.0 * math.pi / 3.0 - theta),
    )


def joints_from_curve(geom: ArmGeometry, c: CurveParams) -> JointVector:
    """Muscle length changes that realise the arc ``c`` on a constant-length backbone."""
    r, ct, st = geom.r, math.cos(c.theta), math.sin(c.theta)
    l2 = (0.5 * r * ct - 0.5 * SQRT3 * r * st) * c.phi
    l3 = (0.5 * r * ct + 0.5 * SQRT3 * r * st) * c.phi
    return JointVector(l2, l3)


def bending_angle(geom: ArmGeometry, q: JointVector) -> float:
    """phi(q) without any limit check."""
    quad = q.l2 * q.l2 + q.l3 * q.l3 + q.l2 * q.l3
    return (2.0 / geom.r) * math.sqrt(max(quad, 0.0) / 3.0)


def curve_from_joints(geom: ArmGeometry, q: JointVector) -> CurveParams:
    """Curve parameters of a joint vector.

    Raises:
        PhiOutOfRange: the bending angle exceeds ``geom.phi_max``.
    """
    phi = bending_angle(geom, q)
    if phi == 0.0:
        return STRAIGHT
    if phi > geom.phi_max + PHI_SLACK:
        raise PhiOutOfRange(phi, geom.phi_max)
    theta = math.atan2(q.l3 - q.l2, SQRT3 * (q.l2 + q.l3))
    return CurveParams(theta, min(phi, geom.phi_max))


def curvature_radius(geom: ArmGeometry, q: JointVector) -> float | None:
    """lambda(q) in closed form; ``None`` for the straight arm."""
    quad = q.l2 * q.l2 + q.l3 * q.l3 + q.l2 * q.l3
    if quad <= 0.0:
        return None
    return 0.5 * geom.r * geom.L0 * math.sqrt(3.0 / quad)


def total_lengths(geom: ArmGeometry, q: JointVector) -> tuple[float, float, float]:
    """Absolute muscle lengths L0 + l_i."""
    return tuple(geom.L0 + li for li in q.as_tuple())
