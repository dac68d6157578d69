"""Command-line front end: ``contarm {fk,ik,workspace,simulate}``.

Exit codes: 0 success, 1 domain error (unreachable target, limit violation,
invalid sweep samples), 2 invalid flags or configuration.
"""
from __future__ import annotations

import argparse
import sys

from contarm import export
from contarm.errors import (
    BadSampleCount,
    ConfigError,
    KinematicsError,
    SpecInvalid,
    Unreachable,
    XiOutOfRange,
)
from contarm.forward import backbone_polyline, pose_at
from contarm.geometry import PAPER_GEOMETRY, ArmGeometry, CurveParams, JointVector, curve_from_joints
from contarm.inverse import DEFAULT_TOL, joints_from_tip
from contarm.trajectory import PathSpec, generate_spiral, run_ik_sweep, sweep_report
from contarm.workspace import boundary_ellipse, check_joints, reachable_surface


class UsageError(Exception):
    """Bad flag combination or value; maps to exit status 2."""


def _global_flags(parser: argparse.ArgumentParser, default) -> None:
    g = parser.add_argument_group("global options")
    g.add_argument("--config", default=default, help="geometry file with L0_m, r_m[, phi_max_rad, l_limit_m]")
    g.add_argument("--L0", type=float, default=default, help="backbone length [m]")
    g.add_argument("--r", type=float, default=default, help="muscle pitch radius [m]")
    g.add_argument("--phi-max", type=float, default=default, help="bending limit [rad]")
    g.add_argument("--l-limit", type=float, default=default, help="muscle length-change bound [m]")
    g.add_argument("--format", choices=("csv", "json"), default=default)
    g.add_argument("--out", default=default, help="output file (default: standard output)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="contarm", description=__doc__.splitlines()[0])
    _global_flags(parser, None)
    # repeated on every subcommand so the flags may follow it; SUPPRESS keeps the top-level value
    sub = parser.add_subparsers(dest="command", required=True)

    fk = sub.add_parser("fk", help="forward kinematics")
    _global_flags(fk, argparse.SUPPRESS)
    fk.add_argument("--l2", type=float)
    fk.add_argument("--l3", type=float)
    fk.add_argument("--theta", type=float)
    fk.add_argument("--phi", type=float)
    fk.add_argument("--xi", type=float, default=1.0)
    fk.add_argument("--polyline", type=int, metavar="N")

    ik = sub.add_parser("ik", help="inverse kinematics from a tip position")
    _global_flags(ik, argparse.SUPPRESS)
    ik.add_argument("--x", type=float, required=True)
    ik.add_argument("--y", type=float, required=True)
    ik.add_argument("--z", type=float, required=True)
    ik.add_argument("--tol", type=float, default=DEFAULT_TOL)

    ws = sub.add_parser("workspace", help="possibility map and reachable surface")
    _global_flags(ws, argparse.SUPPRESS)
    mode = ws.add_mutually_exclusive_group(required=True)
    mode.add_argument("--boundary", type=int, metavar="N")
    mode.add_argument("--surface", type=int, nargs=2, metavar=("NT", "NP"))
    mode.add_argument("--check", action="store_true")
    ws.add_argument("--l2", type=float)
    ws.add_argument("--l3", type=float)

    sim = sub.add_parser("simulate", help="spiral path inverse-kinematics sweep")
    _global_flags(sim, argparse.SUPPRESS)
    defaults = PathSpec()
    sim.add_argument("--turns", type=float, default=defaults.turns)
    sim.add_argument("--samples", type=int, default=defaults.n_samples)
    sim.add_argument("--phi-start", type=float, default=defaults.phi_start)
    sim.add_argument("--phi-end", type=float, default=None, help="default: 0.9 * phi_max")
    sim.add_argument("--tol", type=float, default=DEFAULT_TOL)
    sim.add_argument("--workers", type=int, default=None)
    return parser


def _geometry(args) -> ArmGeometry:
    inline = {k: getattr(args, k) for k in ("L0", "r", "phi_max", "l_limit") if getattr(args, k) is not None}
    if args.config is not None:
        if inline:
            raise UsageError("give either --config or inline geometry flags, not both")
        return ArmGeometry.from_config(args.config)
    if not inline:
        return PAPER_GEOMETRY
    kwargs = {"L0": PAPER_GEOMETRY.L0, "r": PAPER_GEOMETRY.r, **inline}
    return ArmGeometry(**kwargs)


def _emit(args, text: str) -> None:
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_fk(args, geom: ArmGeometry) -> int:
    joint_mode = args.l2 is not None or args.l3 is not None
    curve_mode = args.theta is not None or args.phi is not None
    if joint_mode == curve_mode:
        raise UsageError("fk needs exactly one of (--l2, --l3) or (--theta, --phi)")
    if joint_mode and (args.l2 is None or args.l3 is None):
        raise UsageError("--l2 and --l3 must be given together")
    if curve_mode and (args.theta is None or args.phi is None):
        raise UsageError("--theta and --phi must be given together")
    if not 0.0 <= args.xi <= 1.0:
        raise XiOutOfRange(f"--xi must lie in [0, 1], got {args.xi}")
    if args.polyline is not None and args.polyline < 2:
        raise BadSampleCount(f"--polyline needs at least 2 samples, got {args.polyline}")

    if joint_mode:
        c = curve_from_joints(geom, JointVector(args.l2, args.l3))
    else:
        c = CurveParams(args.theta, args.phi)
    if args.polyline is not None:
        pts = backbone_polyline(geom, c, args.polyline)
        _emit(args, export.polyline_json(pts) if args.format == "json" else export.polyline_csv(pts))
    else:
        pose = pose_at(geom, c, args.xi)
        _emit(args, export.pose_json(pose, args.xi) if args.format == "json" else export.pose_csv(pose, args.xi))
    return 0


def cmd_ik(args, geom: ArmGeometry) -> int:
    if not args.tol > 0:
        raise UsageError(f"--tol must be positive, got {args.tol}")
    sol = joints_from_tip(geom, (args.x, args.y, args.z), args.tol)
    _emit(args, export.ik_json(sol, geom) if args.format == "json" else export.ik_csv(sol, geom))
    return 0


def cmd_workspace(args, geom: ArmGeometry) -> int:
    if args.check:
        if args.l2 is None or args.l3 is None:
            raise UsageError("--check needs --l2 and --l3")
        q = JointVector(args.l2, args.l3)
        report = check_joints(geom, q)
        writer = export.check_json if args.format == "json" else export.check_csv
        _emit(args, writer(report, q.l1, q.l2, q.l3))
        for v in report.violations:
            print(f"contarm: {v.kind.value}: {v.detail}", file=sys.stderr)
        return 0 if report.valid else 1
    if args.l2 is not None or args.l3 is not None:
        raise UsageError("--l2/--l3 are only used with --check")
    if args.boundary is not None:
        pts = boundary_ellipse(geom, args.boundary)
        _emit(args, export.boundary_json(pts) if args.format == "json" else export.boundary_csv(pts))
    else:
        theta, phi, pts = reachable_surface(geom, *args.surface)
        writer = export.surface_json if args.format == "json" else export.surface_csv
        _emit(args, writer(theta, phi, pts))
    return 0


def cmd_simulate(args, geom: ArmGeometry) -> int:
    if not args.tol > 0:
        raise UsageError(f"--tol must be positive, got {args.tol}")
    spec = PathSpec(args.turns, args.samples, args.phi_start, args.phi_end)
    path = generate_spiral(geom, spec)
    samples = run_ik_sweep(geom, path, args.tol, max_workers=args.workers)
    summary = sweep_report(samples, geom)
    if args.out is not None:
        _emit(args, export.sweep_json(samples) if args.format == "json" else export.sweep_csv(samples))
    sys.stdout.write(export.summary_json(summary))
    return 0 if summary.n_invalid == 0 else 1


COMMANDS = {"fk": cmd_fk, "ik": cmd_ik, "workspace": cmd_workspace, "simulate": cmd_simulate}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "csv"
    try:
        geom = _geometry(args)
        return COMMANDS[args.command](args, geom)
    except (UsageError, ConfigError, XiOutOfRange, BadSampleCount, SpecInvalid) as exc:
        print(f"contarm {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"contarm {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except Unreachable as exc:
        print(f"contarm {args.command}: {exc} (residual={exc.residual:.9g})", file=sys.stderr)
        return 1
    except (KinematicsError, ValueError) as exc:
        print(f"contarm {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
