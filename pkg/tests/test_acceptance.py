"""Exit criteria of the package, one test per criterion.

Each test records PASS/FAIL; the lines are printed in the terminal summary.
"""
import contextlib
import json
import math
import subprocess
import sys
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_RESULTS
from contarm import (
    PAPER_GEOMETRY,
    CurveParams,
    JointVector,
    PathSpec,
    boundary_ellipse,
    check_joints,
    curve_from_joints,
    curve_from_tip,
    curves_from_tips,
    generate_spiral,
    joints_from_curve,
    phi_paper_form,
    pose_at,
    run_ik_sweep,
    sweep_report,
    tip_position,
    tip_positions,
)
from contarm.forward import SERIES_THRESHOLD, arc_factors
from contarm.trajectory import spiral_parameters
from contarm.workspace import principal_axes

G = PAPER_GEOMETRY
L0 = G.L0


@contextlib.contextmanager
def criterion(n, name):
    ACCEPTANCE_RESULTS[n] = (name, False)
    yield
    ACCEPTANCE_RESULTS[n] = (name, True)


def wrap_err(a, b):
    d = np.mod(np.asarray(a) - np.asarray(b), 2 * np.pi)
    return np.minimum(d, 2 * np.pi - d)


@pytest.fixture(scope="module")
def grid():
    theta, phi = np.meshgrid(np.linspace(-np.pi, np.pi, 181), np.linspace(0.01, 3.1, 179), indexing="ij")
    return theta.ravel(), phi.ravel()


def test_1_fk_ik_round_trip(grid):
    with criterion(1, "FK/IK round trip on 181x179 grid, 1e-9, < 1 s"):
        theta, phi = grid
        t0 = time.perf_counter()
        th_rec, phi_rec, _ = curves_from_tips(G, tip_positions(G, theta, phi))
        elapsed = time.perf_counter() - t0
        assert elapsed < 1.0
        assert wrap_err(th_rec, theta).max() <= 1e-9
        assert np.abs(phi_rec - phi).max() <= 1e-9
        # the scalar path agrees too (untimed)
        for t, f in zip(theta[::7], phi[::7]):
            c = curve_from_tip(G, tip_position(G, CurveParams(t, f)))
            assert abs(c.phi - f) <= 1e-9 and wrap_err(c.theta, t) <= 1e-9


def test_2_joint_map_round_trip(grid):
    with criterion(2, "joint-map round trip 1e-9, l1+l2+l3 = 0 to 1e-15*L0"):
        worst_angle = worst_sum = 0.0
        for t, f in zip(*grid):
            q = joints_from_curve(G, CurveParams(t, f))
            c = curve_from_joints(G, q)
            worst_angle = max(worst_angle, abs(c.phi - f), wrap_err(c.theta, t))
            worst_sum = max(worst_sum, abs(q.l1 + q.l2 + q.l3))
        assert worst_angle <= 1e-9
        assert worst_sum <= 1e-15 * L0


def test_3_so3_and_inextensibility():
    with criterion(3, "SO(3) to 1e-12 and backbone speed within 1e-5*L0 over 10,000 samples"):
        rng = np.random.default_rng(20240601)
        h = 1e-6
        theta = rng.uniform(-np.pi, np.pi, 10_000)
        phi = rng.uniform(0.0, np.pi, 10_000)
        xi = rng.uniform(0.0, 1.0 - h, 10_000)
        worst_orth = worst_det = worst_speed = 0.0
        for t, f, x in zip(theta, phi, xi):
            c = CurveParams(t, f)
            pose = pose_at(G, c, x)
            R = pose.R
            worst_orth = max(worst_orth, np.abs(R.T @ R - np.eye(3)).max())
            worst_det = max(worst_det, abs(np.linalg.det(R) - 1.0))
            speed = pose_at(G, c, x + h).p.distance(pose.p) / h
            worst_speed = max(worst_speed, abs(speed - L0))
        assert worst_orth <= 1e-12
        assert worst_det <= 1e-12
        assert worst_speed <= 1e-5 * L0


def test_4_paper_formula_oracle():
    with criterion(4, "single-arctangent phi formula matches robust phi to 1e-9 on 1,000 targets"):
        rng = np.random.default_rng(7)
        theta = rng.uniform(0.05, np.pi / 2 - 0.05, 1000)
        phi = rng.uniform(0.05, 3.0, 1000)
        worst = 0.0
        for t, f in zip(theta, phi):
            target = tip_position(G, CurveParams(t, f))
            worst = max(worst, abs(phi_paper_form(G, target) - curve_from_tip(G, target).phi))
        assert worst <= 1e-9


def test_5_singularity_continuity():
    with criterion(5, "tip at phi=1e-8 within 1e-6*L0 of straight; series crossover continuous to 1e-12"):
        for t in np.linspace(-np.pi, np.pi, 73):
            p = tip_position(G, CurveParams(t, 1e-8)).as_array()
            assert np.linalg.norm(p - [0, 0, L0]) <= 1e-6 * L0
        for xi in np.linspace(0.05, 1.0, 20):
            a_s, b_s = arc_factors(SERIES_THRESHOLD, xi, series=True)
            a_d, b_d = arc_factors(SERIES_THRESHOLD, xi, series=False)
            assert abs(a_s - a_d) <= 1e-12 * abs(a_d)
            assert abs(b_s - b_d) <= 1e-12 * abs(b_d)
        below = tip_position(G, CurveParams(0.3, math.nextafter(SERIES_THRESHOLD, 0))).as_array()
        above = tip_position(G, CurveParams(0.3, SERIES_THRESHOLD)).as_array()
        assert np.all(np.abs(below - above) <= 1e-12 * np.abs(above))


def test_6_spiral_sweep_reproduction():
    with criterion(6, "default spiral sweep: all valid, inside map, monotone phi, 2*pi*turns span, residual <= 1e-9, < 1 s"):
        spec = PathSpec()
        t0 = time.perf_counter()
        samples = run_ik_sweep(G, generate_spiral(G, spec))
        elapsed = time.perf_counter() - t0
        summary = sweep_report(samples, G)
        assert elapsed < 1.0
        # (a)
        assert all(x.valid for x in samples) and summary.n_valid == 500
        # (b)
        assert summary.inside_fraction == 1.0
        assert all(check_joints(G, JointVector(x.l2, x.l3)).valid for x in samples)
        # (c)
        phi = np.array([x.phi_ik for x in samples])
        theta = np.array([x.theta_ik for x in samples])
        assert np.all(np.diff(phi) > 0)
        assert theta[-1] - theta[0] == pytest.approx(2 * np.pi * spec.turns, abs=1e-9)
        _, theta_ref, phi_ref = spiral_parameters(G, spec)
        assert np.abs(theta - theta_ref).max() <= 1e-9
        assert np.abs(phi - phi_ref).max() <= 1e-9
        # (d)
        assert summary.max_residual <= 1e-9


def test_7_workspace_shape():
    with criterion(7, "possibility-map boundary: axis ratio sqrt(3) to 1e-6, swap symmetric"):
        pts = boundary_ellipse(G, 360)
        semi, dirs = principal_axes(pts)
        assert abs(semi[0] / semi[1] - math.sqrt(3)) <= 1e-6
        # principal directions are the diagonals of the (l2, l3) plane
        assert abs(abs(dirs[0] @ [1, -1]) / math.sqrt(2) - 1) <= 1e-9
        assert abs(abs(dirs[1] @ [1, 1]) / math.sqrt(2) - 1) <= 1e-9
        swapped = pts[:, ::-1]
        gaps = np.linalg.norm(pts[:, None, :] - swapped[None, :, :], axis=-1).min(axis=0)
        assert gaps.max() <= 1e-15
        for a, b in pts:
            assert check_joints(G, JointVector(a, b)).valid == check_joints(G, JointVector(b, a)).valid


def _cli(*argv, cwd):
    return subprocess.run([sys.executable, "-m", "contarm", *argv], capture_output=True, cwd=cwd)


def test_8_cli_black_box(tmp_path):
    with criterion(8, "CLI exit codes and byte-identical output across runs"):
        cases = [
            (["fk", "--l2", "0", "--l3", "0"], 0),
            (["fk", "--theta", "0", "--phi", "1.5707963", "--xi", "1"], 0),
            (["fk", "--xi", "1.5", "--theta", "0", "--phi", "1"], 2),
            (["ik", "--x", "0", "--y", "0", "--z", "0.37"], 0),
            (["ik", "--x", "0.235549", "--y", "0", "--z", "0.235549"], 0),
            (["ik", "--x", "0.1", "--y", "0.1", "--z", "0.1"], 1),
            (["workspace", "--check", "--l2", "0.02", "--l3", "0.02"], 0),
            (["workspace", "--check", "--l2", "0.03", "--l3", "0.03"], 1),
            (["workspace", "--boundary", "360"], 0),
            (["simulate"], 0),
            (["simulate", "--phi-end", "3.2"], 2),
            (["simulate", "--samples", "1"], 2),
        ]
        for argv, expected in cases:
            first, second = _cli(*argv, cwd=tmp_path), _cli(*argv, cwd=tmp_path)
            assert first.returncode == expected, (argv, first.stderr)
            assert first.stdout == second.stdout
        assert _cli("workspace", "--boundary", "360", cwd=tmp_path).stdout.count(b"\n") == 361
        summary = json.loads(_cli("simulate", cwd=tmp_path).stdout)
        assert summary["inside_fraction"] == 1.0
        # file sinks are deterministic as well
        outputs = []
        for k in range(2):
            out = tmp_path / f"sweep{k}.csv"
            assert _cli("simulate", "--out", str(out), cwd=tmp_path).returncode == 0
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1] and outputs[0].startswith(b"s,px,py,pz,theta_ik,phi_ik,l1,l2,l3,valid,residual\n")
