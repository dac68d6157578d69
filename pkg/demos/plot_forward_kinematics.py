"""
Bending the arm in different directions
=======================================

The backbone of the arm is a circular arc of fixed length.  Two numbers
describe it: the bending-plane angle ``theta`` and the angle ``phi`` the arc
subtends.  Here we draw the backbone for a few of them, and check that the
tip frame is a proper rotation.
"""
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from contarm import PAPER_GEOMETRY, CurveParams, backbone_polyline, pose_at

geom = PAPER_GEOMETRY
print(f"L0 = {geom.L0} m, r = {geom.r} m")

###############################################################################
# A fan of bends, every 60 degrees around the base, at three bending angles

fig = plt.figure(figsize=(6, 6))
ax = fig.add_subplot(projection="3d")
for theta in np.deg2rad(np.arange(-180, 180, 60)):
    for phi in (0.5, 1.5, 2.5):
        pts = np.array([p.as_array() for p in backbone_polyline(geom, CurveParams(theta, phi), 50)])
        ax.plot(pts[:, 0], pts[:, 1], pts[:, 2], lw=1)
ax.plot([0, 0], [0, 0], [0, geom.L0], "k--", lw=2, label="straight")
ax.set_xlabel("x [m]")
ax.set_ylabel("y [m]")
ax.set_zlabel("z [m]")
ax.legend()

###############################################################################
# The tip frame of a quarter bend towards +X: the local z axis points along +X

pose = pose_at(geom, CurveParams(0.0, np.pi / 2), 1.0)
print("tip position:", np.round(pose.p.as_array(), 6))
print("tip rotation:\n", np.round(pose.R, 6))
print("max |R^T R - I| =", np.abs(pose.R.T @ pose.R - np.eye(3)).max())

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(exist_ok=True)
fig.savefig(out / "forward_kinematics.png", dpi=120)
