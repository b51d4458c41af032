"""
Phases as solid angles on the Bloch sphere
==========================================

Each phase is half the solid angle of a closed loop built from
precession arcs and geodesic closures.
"""

import math

from offdiagphase import bloch, phases

###############################################################################
# The off-diagonal loop runs + -> U+ -> - -> U- -> +.  Its two precession
# arcs sit on opposite latitude circles, so the loop wraps half the sphere.

for theta, alpha in [(90, 90), (60, 45), (30, 225), (135, -180)]:
    loop = bloch.off_diagonal_loop(theta, alpha, 2048)
    omega = bloch.loop_solid_angle(loop)
    print(f"theta={theta:4d} alpha={alpha:5d}  Omega={omega:+.6f}",
          f" distance to 2pi (mod 4pi) = {bloch.solid_angle_distance(omega, 2 * math.pi):.1e}")

###############################################################################
# The direct-evolution loop pairs the two states' precession arcs with their
# geodesic closures.  Its area depends on alpha and theta.  Solid angles of
# a closed loop are only fixed modulo 4pi, so compare with that in mind.

theta, alpha = 60.0, 90.0
loop = bloch.direct_evolution_loop(theta, alpha, 2048)
omega = bloch.loop_solid_angle(loop)
expected = bloch.expected_direct_solid_angle(theta, alpha)
print("direct Omega      :", omega)
print("2pi + 2 alpha cos :", expected)
print("distance mod 4pi  :", bloch.solid_angle_distance(omega, expected))
print("phase from area   :", phases.wrap_degrees(bloch.phase_from_solid_angle(omega)))
print("algebraic phase   :", phases.generalized_bp_phase(theta, alpha).value)

###############################################################################
# At alpha = 360 the precessed states return to themselves and the loop has
# no unique closure.

try:
    bloch.off_diagonal_loop(90, 360)
except bloch.UndefinedLoop as exc:
    print("undefined:", exc)

###############################################################################
# Waypoints can be written out for plotting.

loop.to_csv("direct_loop.csv")
print("wrote direct_loop.csv with", len(loop.polygon()), "distinct points")
