"""CSV / JSON writers for the data the CLI emits."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import astuple, fields

import numpy as np

from contarm.forward import Pose
from contarm.geometry import ArmGeometry, Point3
from contarm.inverse import IkSolution
from contarm.trajectory import PathSample, SweepSummary
from contarm.workspace import ValidityReport, theta_grid

POSE_HEADER = ["xi", "x", "y", "z"] + [f"r{i}{j}" for i in range(1, 4) for j in range(1, 4)]
POLYLINE_HEADER = ["xi", "x", "y", "z"]
IK_HEADER = ["theta", "phi", "lambda", "l1", "l2", "l3", "residual"]
CHECK_HEADER = ["l1", "l2", "l3", "phi", "valid", "violations"]
BOUNDARY_HEADER = ["theta", "l2", "l3"]
SURFACE_HEADER = ["theta", "phi", "x", "y", "z"]
SWEEP_HEADER = [f.name for f in fields(PathSample)]


def fmt(value) -> str:
    """Nine significant digits; booleans as 0/1, ``None`` as empty."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value) + 0.0, ".9g")  # + 0.0 folds -0.0 into 0.0


def write_csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) if not isinstance(v, str) else v for v in row])
    return buf.getvalue()


def _clean(obj):
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, np.generic):
        return _clean(obj.item())
    return obj


def write_json(obj) -> str:
    return json.dumps(_clean(obj), indent=2) + "\n"


def pose_csv(pose: Pose, xi: float) -> str:
    return write_csv(POSE_HEADER, [[xi, *pose.p, *pose.R.ravel()]])


def pose_json(pose: Pose, xi: float) -> str:
    return write_json({"xi": xi, **pose.to_dict()})


def polyline_csv(points: list[Point3]) -> str:
    n = len(points)
    return write_csv(POLYLINE_HEADER, [[k / (n - 1), *p] for k, p in enumerate(points)])


def polyline_json(points: list[Point3]) -> str:
    n = len(points)
    return write_json({"xi": [k / (n - 1) for k in range(n)], "points": [list(p) for p in points]})


def ik_csv(sol: IkSolution, geom: ArmGeometry) -> str:
    d = sol.to_dict(geom)
    return write_csv(IK_HEADER, [[d[k] for k in IK_HEADER]])


def ik_json(sol: IkSolution, geom: ArmGeometry) -> str:
    return write_json(sol.to_dict(geom))


def check_csv(report: ValidityReport, l1: float, l2: float, l3: float) -> str:
    kinds = ";".join(v.kind.value for v in report.violations)
    return write_csv(CHECK_HEADER, [[l1, l2, l3, report.phi, report.valid, kinds]])


def check_json(report: ValidityReport, l1: float, l2: float, l3: float) -> str:
    return write_json({"l1": l1, "l2": l2, "l3": l3, **report.to_dict()})


def boundary_csv(points: np.ndarray) -> str:
    theta = theta_grid(len(points))
    return write_csv(BOUNDARY_HEADER, [[t, a, b] for t, (a, b) in zip(theta, points)])


def boundary_json(points: np.ndarray) -> str:
    theta = theta_grid(len(points))
    return write_json({"theta": theta.tolist(), "l2": points[:, 0].tolist(), "l3": points[:, 1].tolist()})


def surface_csv(theta: np.ndarray, phi: np.ndarray, points: np.ndarray) -> str:
    """Rows run over phi fastest, theta slowest."""
    rows = ([t, f, *points[i, j]] for i, t in enumerate(theta) for j, f in enumerate(phi))
    return write_csv(SURFACE_HEADER, rows)


def surface_json(theta: np.ndarray, phi: np.ndarray, points: np.ndarray) -> str:
    return write_json({"theta": theta.tolist(), "phi": phi.tolist(), "points": points.tolist()})


def sweep_csv(samples: list[PathSample]) -> str:
    return write_csv(SWEEP_HEADER, (astuple(x) for x in samples))


def sweep_json(samples: list[PathSample]) -> str:
    return write_json([dict(zip(SWEEP_HEADER, astuple(x))) for x in samples])


def summary_json(summary: SweepSummary) -> str:
    return write_json(summary.to_dict())
