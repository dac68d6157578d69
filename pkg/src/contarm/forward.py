"""Pose of backbone frames from curve parameters or joint values."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from contarm.errors import BadSampleCount, XiOutOfRange
from contarm.geometry import ArmGeometry, CurveParams, JointVector, Point3, curve_from_joints

# below this bending angle the arc factors switch to their Taylor expansions
SERIES_THRESHOLD = 1e-4


def arc_factors(phi: float, xi: float = 1.0, series: bool | None = None) -> tuple[float, float]:
    """Return ``((1 - cos(xi*phi)) / phi, sin(xi*phi) / phi)``, finite at ``phi = 0``.

    ``series`` forces the expansion (True) or the direct form (False); by
    default the expansion is used below ``SERIES_THRESHOLD``.
    """
    if series is None:
        series = phi < SERIES_THRESHOLD
    if series:
        x2, x3 = xi * xi, xi * xi * xi
        return 0.5 * x2 * phi - x2 * x2 * phi ** 3 / 24.0, xi - x3 * phi * phi / 6.0
    half = math.sin(0.5 * xi * phi)
    return 2.0 * half * half / phi, math.sin(xi * phi) / phi


def arc_factors_array(phi, xi=1.0):
    """Vectorised :func:`arc_factors` with automatic switching."""
    phi = np.asarray(phi, dtype=float)
    xi = np.asarray(xi, dtype=float)
    small = phi < SERIES_THRESHOLD
    safe = np.where(small, 1.0, phi)
    half = np.sin(0.5 * xi * safe)
    a = np.where(small, 0.5 * xi**2 * phi - xi**4 * phi**3 / 24.0, 2.0 * half * half / safe)
    b = np.where(small, xi - xi**3 * phi**2 / 6.0, np.sin(xi * safe) / safe)
    return a, b


@dataclass(frozen=True)
class Pose:
    """Rotation ``R`` (3x3, row-major) and position ``p`` of a backbone frame."""

    R: np.ndarray
    p: Point3

    def as_matrix(self) -> np.ndarray:
        T = np.eye(4)
        T[:3, :3] = self.R
        T[:3, 3] = self.p.as_array()
        return T

    def to_dict(self) -> dict:
        return {"R": [[float(v) for v in row] for row in self.R], "p": list(self.p)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class BackboneSample:
    xi: float
    pose: Pose

    def __post_init__(self):
        if not 0.0 <= self.xi <= 1.0:
            raise XiOutOfRange(f"xi must lie in [0, 1], got {self.xi}")


def _check_xi(xi: float) -> float:
    xi = float(xi)
    if not 0.0 <= xi <= 1.0:
        raise XiOutOfRange(f"xi must lie in [0, 1], got {xi}")
    return xi


def rotation_at(c: CurveParams, xi: float) -> np.ndarray:
    """Rotation of the frame at ``xi``.

    Entries use ``1 - cos(xi*phi) = 2 sin^2(xi*phi/2)``, which keeps the base
    frame exactly the identity and avoids cancellation for small bends.
    """
    ct, st = math.cos(c.theta), math.sin(c.theta)
    half = math.sin(0.5 * xi * c.phi)
    vers = 2.0 * half * half
    sp = math.sin(xi * c.phi)
    r12 = -ct * st * vers
    r13 = ct * sp
    r23 = st * sp
    return np.array(
        [
            [1.0 - ct * ct * vers, r12, r13],
            [r12, 1.0 - st * st * vers, r23],
            [-r13, -r23, 1.0 - vers],
        ]
    )


def position_at(geom: ArmGeometry, c: CurveParams, xi: float) -> Point3:
    a, b = arc_factors(c.phi, xi)
    return Point3(geom.L0 * math.cos(c.theta) * a, geom.L0 * math.sin(c.theta) * a, geom.L0 * b)


def pose_at(geom: ArmGeometry, c: CurveParams, xi: float) -> Pose:
    """Frame at backbone coordinate ``xi`` (0 = base, 1 = tip)."""
    xi = _check_xi(xi)
    return Pose(rotation_at(c, xi), position_at(geom, c, xi))


def tip_position(geom: ArmGeometry, c: CurveParams) -> Point3:
    return position_at(geom, c, 1.0)


def tip_positions(geom: ArmGeometry, theta, phi, xi=1.0) -> np.ndarray:
    """Broadcasting version of :func:`position_at`; returns shape ``(..., 3)``."""
    theta = np.asarray(theta, dtype=float)
    a, b = arc_factors_array(phi, xi)
    a, b, theta = np.broadcast_arrays(a, b, theta)
    return geom.L0 * np.stack([np.cos(theta) * a, np.sin(theta) * a, b], axis=-1)


def backbone_polyline(geom: ArmGeometry, c: CurveParams, n: int) -> list[Point3]:
    """``n`` equally spaced backbone points from base to tip."""
    if n < 2:
        raise BadSampleCount(f"a polyline needs at least 2 samples, got {n}")
    return [position_at(geom, c, k / (n - 1)) for k in range(n)]


def fk_from_joints(geom: ArmGeometry, q: JointVector, xi: float) -> Pose:
    return pose_at(geom, curve_from_joints(geom, q), xi)


def _rot_z(a: float) -> np.ndarray:
    c, s = math.cos(a), math.sin(a)
    return np.array([[c, -s, 0, 0], [s, c, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], dtype=float)


def _rot_y(a: float) -> np.ndarray:
    c, s = math.cos(a), math.sin(a)
    return np.array([[c, 0, s, 0], [0, 1, 0, 0], [-s, 0, c, 0], [0, 0, 0, 1]], dtype=float)


def _trans_x(d: float) -> np.ndarray:
    T = np.eye(4)
    T[0, 3] = d
    return T


def htm_product(geom: ArmGeometry, c: CurveParams, xi: float) -> np.ndarray:
    """4x4 transform as the product Rz(theta) Px(lambda) Ry(xi*phi) Px(-lambda) Rz(-theta).

    Only defined for a bent arm; used to cross-check :func:`pose_at`.
    """
    if c.straight:
        raise ValueError("the product form needs a finite radius of curvature (phi > 0)")
    lam = geom.L0 / c.phi
    return _rot_z(c.theta) @ _trans_x(lam) @ _rot_y(xi * c.phi) @ _trans_x(-lam) @ _rot_z(-c.theta)
