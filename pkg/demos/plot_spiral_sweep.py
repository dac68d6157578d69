"""
Spiral sweep over the reachable dome
====================================

A tip path that starts at the top of the dome and spirals outwards is fed
through the inverse kinematics.  We plot the path, the recovered curve
parameters and muscle lengths, and overlay the muscle lengths on the map of
valid combinations.
"""
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from contarm import PAPER_GEOMETRY, PathSpec, boundary_ellipse, generate_spiral, run_ik_sweep, sweep_report

geom = PAPER_GEOMETRY
spec = PathSpec(turns=3, n_samples=500)
path = generate_spiral(geom, spec)
samples = run_ik_sweep(geom, path)
summary = sweep_report(samples, geom)
print(summary)

s = np.array([x.s for x in samples])
theta = np.array([x.theta_ik for x in samples])
phi = np.array([x.phi_ik for x in samples])
l2 = np.array([x.l2 for x in samples])
l3 = np.array([x.l3 for x in samples])

fig = plt.figure(figsize=(11, 8))

###############################################################################
# The path

ax = fig.add_subplot(2, 2, 1, projection="3d")
ax.plot(*path.T)
ax.set_title("tip path")

###############################################################################
# Curve-parameter profiles: theta unwrapped, phi linear

ax = fig.add_subplot(2, 2, 2)
ax.plot(s, theta, label="theta_ik")
ax.plot(s, phi, label="phi_ik")
ax.set_xlabel("s")
ax.legend()

###############################################################################
# Muscle-length profiles

ax = fig.add_subplot(2, 2, 3)
ax.plot(s, l2, label="l2")
ax.plot(s, l3, label="l3")
ax.set_xlabel("s")
ax.set_ylabel("[m]")
ax.legend()

###############################################################################
# Every sample sits inside the valid region

ax = fig.add_subplot(2, 2, 4)
b = boundary_ellipse(geom, 360)
ax.plot(*np.vstack([b, b[:1]]).T, "k-", label="phi = phi_max")
ax.plot(l2, l3, ".", ms=2, label="sweep")
ax.set_aspect("equal")
ax.legend()

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(exist_ok=True)
fig.tight_layout()
fig.savefig(out / "spiral_sweep.png", dpi=120)
