"""
How imperfect polarization bends the 180 degree line
====================================================

A partially polarized beam is a mixture f |+><+| + (1 - f) |-><-|.  The two
components give O-beam fringes with different amplitudes, so the measured
phase shift drifts away from 180 degrees.
"""

import numpy as np

from offdiagphase.beamline import O_BEAM, BeamConfig, synthesize_pair
from offdiagphase.fitters import fit_sinusoid, phase_shift


def measured_shift(theta, alpha, f, **kwargs):
    rotated, reference = synthesize_pair(
        BeamConfig(theta=theta, alpha=alpha, polarization_fraction=f, **kwargs), O_BEAM)
    fit, ref = fit_sinusoid(rotated), fit_sinusoid(reference)
    return phase_shift(fit, ref), fit


###############################################################################
# Noise-free predictions at f = 0.87.

alphas = [-225.0, -180.0, -90.0, -45.0, 45.0, 90.0, 180.0, 225.0]
print("alpha  " + "  ".join(f"theta={t:<5.0f}" for t in (30, 60, 135)))
for alpha in alphas:
    cells = []
    for theta in (30.0, 60.0, 135.0):
        shift, _ = measured_shift(theta, alpha, 0.87)
        cells.append(f"{shift.value:10.3f}" if shift.defined else "       n/a")
    print(f"{alpha:5.0f}  " + "  ".join(cells))

###############################################################################
# The deviation disappears as the beam becomes fully polarized.

for f in (0.8, 0.87, 0.95, 0.99, 1.0):
    shift, _ = measured_shift(60, 90, f)
    print(f"f={f:.2f}  deviation from 180 = {180 - abs(shift.value):.4f} deg")

###############################################################################
# With counting noise and a reduced instrument contrast the fitted amplitude
# can be compared against its own uncertainty.  Points whose amplitude does
# not exceed three standard errors are flagged as not oscillating.

for counts in (10, 30, 100, 2000):
    flags = [measured_shift(30, 90, 0.87, instrument_contrast=0.4, mean_counts=counts,
                            noise_seed=s)[1].oscillating for s in range(50)]
    print(f"mean counts {counts:5d}: oscillating in {np.sum(flags)}/50 runs")
