"""Closed-form inverse kinematics from a tip position.

The tip of a constant-length arc satisfies ``rho / Pz = tan(phi / 2)`` with
``rho`` the horizontal distance of the tip from the base axis, so the
bending angle follows from a single two-argument arctangent.  The reachable
tips form a 2-DOF surface; every solution is therefore checked by running
the forward map again and comparing against the target.

All routines here assume the tip frame, i.e. backbone coordinate 1.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from contarm.errors import DegenerateInput, PhiOutOfRange, Unreachable
from contarm.forward import fk_from_joints, tip_positions
from contarm.geometry import (
    PHI_SLACK,
    ArmGeometry,
    CurveParams,
    JointVector,
    Point3,
    joints_from_curve,
)

DEFAULT_TOL = 1e-6


@dataclass(frozen=True)
class IkSolution:
    curve: CurveParams
    joints: JointVector
    residual: float

    def to_dict(self, geom: ArmGeometry) -> dict:
        return {
            "theta": self.curve.theta,
            "phi": self.curve.phi,
            "lambda": self.curve.radius(geom),
            "l1": self.joints.l1,
            "l2": self.joints.l2,
            "l3": self.joints.l3,
            "residual": self.residual,
        }

    def to_json(self, geom: ArmGeometry) -> str:
        return json.dumps(self.to_dict(geom))


def _as_point(target) -> Point3:
    return target if isinstance(target, Point3) else Point3(*target)


def solve_tip(geom: ArmGeometry, target) -> tuple[float, float, float]:
    """Closed-form ``(theta, phi, residual)`` for ``target`` without limit checks.

    ``phi`` lies in [0, 2 pi]; values above pi come from targets below the
    base plane, which the arm cannot reach.
    """
    target = _as_point(target)
    rho = math.hypot(target.x, target.y)
    if rho < 1e-12 * geom.L0:
        theta = phi = 0.0
    else:
        theta = math.atan2(target.y, target.x)
        phi = 2.0 * math.atan2(rho, target.z)
    tip = tip_positions(geom, theta, phi)
    return theta, phi, math.dist(tip, tuple(target))


def curve_from_tip(geom: ArmGeometry, target, tol: float = DEFAULT_TOL) -> CurveParams:
    """Curve parameters placing the tip at ``target``.

    Raises:
        Unreachable: the reconstructed tip misses ``target`` by more than ``tol``.
        PhiOutOfRange: the target lies on the arc surface beyond ``phi_max``.
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    theta, phi, residual = solve_tip(geom, target)
    if residual > tol:
        raise Unreachable(residual, tol)
    if phi > geom.phi_max + PHI_SLACK:
        raise PhiOutOfRange(phi, geom.phi_max)
    return CurveParams(theta, min(phi, geom.phi_max))


def joints_from_tip(geom: ArmGeometry, target, tol: float = DEFAULT_TOL) -> IkSolution:
    target = _as_point(target)
    c = curve_from_tip(geom, target, tol)
    q = joints_from_curve(geom, c)
    residual = fk_from_joints(geom, q, 1.0).p.distance(target)
    if residual > tol:
        raise Unreachable(residual, tol)
    return IkSolution(c, q, residual)


def phi_paper_form(geom: ArmGeometry, target) -> float:
    """Bending angle via the single-argument-arctangent expression ``2 Py / (F1 F2)``.

    Only meaningful for tips in the first quadrant of the XY plane; kept
    as an independent check of :func:`curve_from_tip`.
    """
    px, py, pz = _as_point(target)
    if px == 0.0 or py == 0.0:
        raise DegenerateInput("closed form needs Px != 0 and Py != 0")
    f1 = geom.L0 * math.sin(math.atan(py / px))
    f2 = pz**2 / geom.L0**2 + py**2 / f1**2
    return 2.0 * py / (f1 * f2)


def curves_from_tips(geom: ArmGeometry, targets) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorised :func:`solve_tip` over an ``(..., 3)`` array.

    Returns ``(theta, phi, residual)`` arrays; straight tips get ``theta = 0``.
    """
    targets = np.asarray(targets, dtype=float)
    x, y, z = targets[..., 0], targets[..., 1], targets[..., 2]
    rho = np.hypot(x, y)
    straight = rho < 1e-12 * geom.L0
    theta = np.where(straight, 0.0, np.arctan2(y, x))
    phi = np.where(straight, 0.0, 2.0 * np.arctan2(rho, z))
    residual = np.linalg.norm(tip_positions(geom, theta, phi) - targets, axis=-1)
    return theta, phi, residual
