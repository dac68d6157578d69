"""Kinematics of a single-section, constant-length, three-muscle continuum arm."""
from contarm.errors import (
    BadSampleCount,
    ConfigError,
    DegenerateInput,
    EmptyInput,
    KinematicsError,
    PhiOutOfRange,
    SpecInvalid,
    Unreachable,
    XiOutOfRange,
)
from contarm.forward import (
    BackboneSample,
    Pose,
    backbone_polyline,
    fk_from_joints,
    htm_product,
    pose_at,
    tip_position,
    tip_positions,
)
from contarm.geometry import (
    PAPER_GEOMETRY,
    ArmGeometry,
    CurveParams,
    JointVector,
    Point3,
    actuator_anchors,
    curvature_radius,
    curve_from_joints,
    joints_from_curve,
    projection_distances,
    total_lengths,
)
from contarm.inverse import IkSolution, curve_from_tip, curves_from_tips, joints_from_tip, phi_paper_form
from contarm.trajectory import PathSample, PathSpec, SweepSummary, generate_spiral, run_ik_sweep, sweep_report
from contarm.workspace import ValidityReport, boundary_ellipse, check_joints, reachable_surface

__version__ = "0.1.0"
