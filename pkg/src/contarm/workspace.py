"""Possibility map of joint values and the reachable tip surface."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from contarm.errors import BadSampleCount
from contarm.forward import tip_positions
from contarm.geometry import PHI_SLACK, SQRT3, ArmGeometry, JointVector, bending_angle

# slack (m) on the muscle bound so that points on the boundary stay valid
MUSCLE_SLACK = 1e-15


class ViolationKind(enum.Enum):
    PHI_LIMIT = "PhiLimit"
    MUSCLE_LIMIT = "MuscleLimit"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    detail: str


@dataclass(frozen=True)
class ValidityReport:
    phi: float
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "phi": self.phi,
            "violations": [{"kind": v.kind.value, "detail": v.detail} for v in self.violations],
        }


def check_joints(geom: ArmGeometry, q: JointVector) -> ValidityReport:
    """Membership of ``q`` in the closed region ``{phi <= phi_max} & {|l_i| <= l_limit}``."""
    phi = bending_angle(geom, q)
    violations = []
    if phi > geom.phi_max + PHI_SLACK:
        violations.append(
            Violation(ViolationKind.PHI_LIMIT, f"phi={phi:.9g} rad > phi_max={geom.phi_max:.9g} rad")
        )
    for i, li in enumerate(q.as_tuple(), start=1):
        if abs(li) > geom.l_limit + MUSCLE_SLACK:
            violations.append(
                Violation(ViolationKind.MUSCLE_LIMIT, f"|l{i}|={abs(li):.9g} m > l_limit={geom.l_limit:.9g} m")
            )
    return ValidityReport(phi, tuple(violations))


def in_region(geom: ArmGeometry, l2, l3) -> np.ndarray:
    """Vectorised membership test; NaN entries are reported as outside."""
    l2 = np.asarray(l2, dtype=float)
    l3 = np.asarray(l3, dtype=float)
    l1 = -(l2 + l3)
    phi = (2.0 / geom.r) * np.sqrt(np.maximum(l2 * l2 + l3 * l3 + l2 * l3, 0.0) / 3.0)
    lim = geom.l_limit + MUSCLE_SLACK
    with np.errstate(invalid="ignore"):
        return (
            (phi <= geom.phi_max + PHI_SLACK)
            & (np.abs(l1) <= lim)
            & (np.abs(l2) <= lim)
            & (np.abs(l3) <= lim)
        )


def theta_grid(n: int) -> np.ndarray:
    """``n`` angles spaced uniformly over [-pi, pi)."""
    return -math.pi + 2.0 * math.pi * np.arange(n) / n


def boundary_ellipse(geom: ArmGeometry, n: int) -> np.ndarray:
    """``(n, 2)`` array of ``(l2, l3)`` on the ``phi = phi_max`` locus, ordered by theta."""
    if n < 3:
        raise BadSampleCount(f"boundary needs at least 3 samples, got {n}")
    theta = theta_grid(n)
    scale = geom.r * geom.phi_max
    ct, st = np.cos(theta), np.sin(theta)
    return np.column_stack([(0.5 * ct - 0.5 * SQRT3 * st) * scale, (0.5 * ct + 0.5 * SQRT3 * st) * scale])


def principal_axes(points) -> tuple[np.ndarray, np.ndarray]:
    """Semi-axis lengths (descending) and unit directions of a centred ellipse sample.

    Valid for points spread uniformly in the ellipse's angular parameter.
    """
    pts = np.asarray(points, dtype=float)
    cov = pts.T @ pts / len(pts)
    evals, evecs = np.linalg.eigh(cov)
    order = np.argsort(evals)[::-1]
    return np.sqrt(2.0 * evals[order]), evecs[:, order].T


def reachable_surface(geom: ArmGeometry, n_theta: int, n_phi: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Tip positions over theta in [-pi, pi) (rows) and phi in [0, phi_max] (columns).

    Returns ``(theta, phi, points)`` with ``points.shape == (n_theta, n_phi, 3)``.
    """
    if n_theta < 1 or n_phi < 2:
        raise BadSampleCount(f"surface grid needs n_theta >= 1 and n_phi >= 2, got {n_theta}x{n_phi}")
    theta = theta_grid(n_theta)
    phi = np.linspace(0.0, geom.phi_max, n_phi)
    points = tip_positions(geom, theta[:, None], phi[None, :])
    return theta, phi, points
