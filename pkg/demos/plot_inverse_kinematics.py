"""
Recovering curve parameters from a tip position
================================================

Only a 2-D surface of tip positions is reachable, because the backbone
cannot stretch.  Targets on that surface come back exactly; targets off it
are rejected with the distance by which they miss.
"""
import math

from contarm import PAPER_GEOMETRY, CurveParams, Unreachable, joints_from_tip, phi_paper_form, tip_position

geom = PAPER_GEOMETRY

###############################################################################
# A target produced by the forward map comes back to the same parameters

target = tip_position(geom, CurveParams(2.5, 1.2))
sol = joints_from_tip(geom, target)
print(f"theta = {sol.curve.theta:.12f}  phi = {sol.curve.phi:.12f}")
print(f"l1, l2, l3 = {sol.joints.as_tuple()}  (sum {sum(sol.joints.as_tuple()):.1e})")
print(f"residual = {sol.residual:.2e} m")

###############################################################################
# The single-arctangent formula agrees in the first quadrant ...

target = tip_position(geom, CurveParams(math.pi / 4, 1.0))
print("first quadrant:", phi_paper_form(geom, target))

###############################################################################
# ... but gives a wrong sign in the second, where the two-argument arctangent does not

target = tip_position(geom, CurveParams(3 * math.pi / 4, 1.0))
print("second quadrant:", phi_paper_form(geom, target), "vs", joints_from_tip(geom, target).curve.phi)

###############################################################################
# A point inside the dome is not on the reachable surface

try:
    joints_from_tip(geom, (0.1, 0.1, 0.1))
except Unreachable as exc:
    print(f"unreachable, misses by {exc.residual:.4f} m")
