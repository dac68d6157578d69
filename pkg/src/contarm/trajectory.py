"""Spiral tip path over the reachable dome and the inverse-kinematics sweep along it."""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from contarm.errors import EmptyInput, SpecInvalid
from contarm.forward import tip_positions
from contarm.geometry import PHI_SLACK, ArmGeometry, CurveParams, joints_from_curve
from contarm.inverse import DEFAULT_TOL, solve_tip
from contarm.workspace import check_joints, in_region


@dataclass(frozen=True)
class PathSpec:
    """Spiral winding in (theta, phi) space.

    ``phi_end=None`` resolves to ``0.9 * phi_max`` of the geometry in use.
    """

    turns: float = 3
    n_samples: int = 500
    phi_start: float = 0.01
    phi_end: float | None = None

    def resolve(self, geom: ArmGeometry) -> "PathSpec":
        phi_end = 0.9 * geom.phi_max if self.phi_end is None else float(self.phi_end)
        spec = PathSpec(self.turns, self.n_samples, float(self.phi_start), phi_end)
        if not isinstance(spec.n_samples, int) or spec.n_samples < 2:
            raise SpecInvalid(f"n_samples must be an integer >= 2, got {spec.n_samples!r}")
        if not (math.isfinite(spec.turns) and spec.turns > 0):
            raise SpecInvalid(f"turns must be positive, got {spec.turns}")
        if not 0.0 <= spec.phi_start < phi_end <= geom.phi_max:
            raise SpecInvalid(
                f"need 0 <= phi_start < phi_end <= phi_max={geom.phi_max:.9g}, "
                f"got phi_start={spec.phi_start}, phi_end={phi_end}"
            )
        return spec


@dataclass(frozen=True)
class PathSample:
    s: float
    px: float
    py: float
    pz: float
    theta_ik: float
    phi_ik: float
    l1: float
    l2: float
    l3: float
    valid: bool
    residual: float


@dataclass(frozen=True)
class SweepSummary:
    n_samples: int
    n_valid: int
    n_invalid: int
    max_residual: float
    theta_ik_min: float
    theta_ik_max: float
    phi_ik_min: float
    phi_ik_max: float
    l2_min: float
    l2_max: float
    l3_min: float
    l3_max: float
    inside_fraction: float

    def to_dict(self) -> dict:
        # NaN is not valid JSON
        return {k: (None if isinstance(v, float) and math.isnan(v) else v) for k, v in asdict(self).items()}


def spiral_parameters(geom: ArmGeometry, spec: PathSpec) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Path parameter ``s``, unwound ``theta`` and ``phi`` at every sample."""
    spec = spec.resolve(geom)
    s = np.arange(spec.n_samples) / (spec.n_samples - 1)
    theta = -math.pi + 2.0 * math.pi * spec.turns * s
    phi = spec.phi_start + s * (spec.phi_end - spec.phi_start)
    return s, theta, phi


def generate_spiral(geom: ArmGeometry, spec: PathSpec = PathSpec()) -> np.ndarray:
    """``(n_samples, 3)`` tip targets winding outwards from the top of the dome."""
    _, theta, phi = spiral_parameters(geom, spec)
    wrapped = -math.pi + np.mod(theta + math.pi, 2.0 * math.pi)
    return tip_positions(geom, wrapped, phi)


def unwrap_angles(theta) -> np.ndarray:
    """Continue each angle onto the revolution nearest the previous finite one."""
    out = np.array(theta, dtype=float)
    prev = None
    for k, a in enumerate(out):
        if not math.isfinite(a):
            continue
        if prev is not None:
            a += 2.0 * math.pi * round((prev - a) / (2.0 * math.pi))
            out[k] = a
        prev = a
    return out


def _sample(geom: ArmGeometry, s: float, target, tol: float) -> PathSample:
    px, py, pz = (float(v) for v in target)
    theta, phi, residual = solve_tip(geom, (px, py, pz))
    if residual > tol:
        nan = math.nan
        return PathSample(s, px, py, pz, nan, nan, nan, nan, nan, False, residual)
    if phi > math.pi:
        # on the extension of the arc surface past a half circle: no physical joints
        nan = math.nan
        return PathSample(s, px, py, pz, theta, phi, nan, nan, nan, False, residual)
    q = joints_from_curve(geom, CurveParams(theta, phi))
    valid = phi <= geom.phi_max + PHI_SLACK and check_joints(geom, q).valid
    return PathSample(s, px, py, pz, theta, phi, q.l1, q.l2, q.l3, valid, residual)


def run_ik_sweep(geom: ArmGeometry, path, tol: float = DEFAULT_TOL, max_workers: int | None = None) -> list[PathSample]:
    """Solve every target of ``path`` and validate it against the possibility map.

    Unreachable targets are kept, with ``valid=False``, the residual, and NaN
    in place of the curve parameters and joints.  ``theta_ik`` is unwrapped
    along the path.  ``max_workers > 1`` spreads the samples over threads;
    the output order always matches ``path``.
    """
    path = np.asarray(path, dtype=float).reshape(-1, 3)
    if len(path) == 0:
        raise EmptyInput("path is empty")
    s = np.arange(len(path)) / max(len(path) - 1, 1)
    if max_workers and max_workers > 1:
        with ThreadPoolExecutor(max_workers) as pool:
            samples = list(pool.map(lambda k: _sample(geom, s[k], path[k], tol), range(len(path))))
    else:
        samples = [_sample(geom, s[k], path[k], tol) for k in range(len(path))]
    unwrapped = unwrap_angles([x.theta_ik for x in samples])
    return [
        PathSample(**{**asdict(x), "theta_ik": float(t)}) for x, t in zip(samples, unwrapped)
    ]


def _range(values: np.ndarray) -> tuple[float, float]:
    finite = values[np.isfinite(values)]
    if finite.size == 0:
        return math.nan, math.nan
    return float(finite.min()), float(finite.max())


def sweep_report(samples: list[PathSample], geom: ArmGeometry) -> SweepSummary:
    """Counts, extremes, and the share of ``(l2, l3)`` pairs inside the possibility region."""
    if not samples:
        raise EmptyInput("no samples to summarise")
    col = {name: np.array([getattr(x, name) for x in samples], dtype=float)
           for name in ("theta_ik", "phi_ik", "l2", "l3", "residual")}
    n_valid = sum(x.valid for x in samples)
    inside = in_region(geom, col["l2"], col["l3"])
    return SweepSummary(
        n_samples=len(samples),
        n_valid=n_valid,
        n_invalid=len(samples) - n_valid,
        max_residual=float(col["residual"].max()),
        theta_ik_min=_range(col["theta_ik"])[0],
        theta_ik_max=_range(col["theta_ik"])[1],
        phi_ik_min=_range(col["phi_ik"])[0],
        phi_ik_max=_range(col["phi_ik"])[1],
        l2_min=_range(col["l2"])[0],
        l2_max=_range(col["l2"])[1],
        l3_min=_range(col["l3"])[0],
        l3_max=_range(col["l3"])[1],
        inside_fraction=float(inside.mean()),
    )
