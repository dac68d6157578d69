"""
Valid muscle length combinations
================================

Only ``l2`` and ``l3`` are free; ``l1`` follows from ``l1 + l2 + l3 = 0``.
The bending limit ``phi <= phi_max`` traces an ellipse in the ``(l2, l3)``
plane, whose long axis is sqrt(3) times the short one.
"""
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from contarm import PAPER_GEOMETRY, boundary_ellipse
from contarm.workspace import in_region, principal_axes

geom = PAPER_GEOMETRY
boundary = boundary_ellipse(geom, 360)
semi, dirs = principal_axes(boundary)
print("semi-axes [m]:", semi, "ratio:", semi[0] / semi[1])
print("major axis direction:", np.round(dirs[0], 6))

###############################################################################
# Shade a grid by membership and overlay the boundary

span = 1.2 * np.abs(boundary).max()
l2, l3 = np.meshgrid(np.linspace(-span, span, 301), np.linspace(-span, span, 301))
inside = in_region(geom, l2, l3)

fig, ax = plt.subplots(figsize=(5, 5))
ax.contourf(l2, l3, inside, levels=[0.5, 1.5], colors=["#cfe3f5"])
ax.plot(*np.vstack([boundary, boundary[:1]]).T, "b-", label="phi = phi_max")
ax.set_xlabel("l2 [m]")
ax.set_ylabel("l3 [m]")
ax.set_aspect("equal")
ax.legend()

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(exist_ok=True)
fig.savefig(out / "possibility_map.png", dpi=120)
