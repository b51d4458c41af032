"""
The off-diagonal phase is always pi
===================================

Two orthogonal spin states, tilted by theta from the field axis, precess by
alpha.  The product of the two cross matrix elements is real and negative,
so its phase is 180 degrees for every (theta, alpha) where it is defined.
"""

import numpy as np

from offdiagphase import phases

###############################################################################
# The product <+|U|-><-|U|+> equals -sin^2(theta) sin^2(alpha/2).

thetas = [30.0, 60.0, 90.0, 135.0]
alphas = [45.0, 90.0, 180.0, 225.0, 360.0]

print("theta  alpha   gamma_off   |product|")
for theta in thetas:
    for alpha in alphas:
        r = phases.off_diagonal_phase(theta, alpha)
        value = f"{r.value:9.3f}" if r.defined else "undefined"
        print(f"{theta:5.0f}  {alpha:5.0f}   {value}   {r.magnitude:.4f}")

###############################################################################
# At alpha = 360 the cross elements vanish and the phase is undefined.  The
# diagonal (Pancharatnam) phase of the unanalyzed beam behaves differently:
# it jumps from 0 to 180 degrees across alpha = 90 on the equator, where the
# overlap passes through zero.

for alpha in np.arange(80.0, 101.0, 5.0):
    r = phases.pancharatnam_phase_hbeam(90, alpha)
    print(f"alpha={alpha:5.1f}  diagonal phase =",
          f"{r.value:7.2f}" if r.defined else "undefined")

###############################################################################
# Dynamical phases are opposite for the two states, so they cancel in the
# product but not in the single-state decomposition.

theta, alpha = 60.0, 90.0
bp = phases.generalized_bp_phase(theta, alpha)
print("generalized BP phase:", round(bp.value, 6))
print("dynamical I, II:", phases.dynamical_phase(theta, alpha, "I"),
      phases.dynamical_phase(theta, alpha, "II"))
print("total:", round(phases.direct_decomposition(theta, alpha).value, 6))
