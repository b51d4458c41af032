"""
A quantum eraser in the interferometer
======================================

Precession labels the two paths with different spin states.  Without spin
analysis (H-beam) the labeling washes out the fringe.  Projecting onto a
spin state (O-beam) erases the which-path information and restores it.
"""

import numpy as np

from offdiagphase.beamline import H_BEAM, O_BEAM
from offdiagphase.fitters import visibility_curve

###############################################################################
# On the equator the H-beam visibility is |cos alpha| while the O-beam stays
# at full visibility for every nonzero alpha.

alphas = [0.0, 30.0, 67.0, 90.0, 135.0, 180.0]
h = dict(visibility_curve(90, H_BEAM, alphas))
o = dict(visibility_curve(90, O_BEAM, alphas))
print("alpha   H vis   |cos a|   O vis")
for a in alphas:
    print(f"{a:5.0f}   {h[a]:.4f}   {abs(np.cos(np.radians(a))):.4f}    {o[a]:.4f}")

###############################################################################
# The O-beam at alpha = 0 carries no intensity at all (the analyzer is
# orthogonal to the incident spin), so its visibility is reported as nan.
#
# A real instrument has finite empty-interferometer contrast.  It scales
# every visibility by the same factor.

scaled = dict(visibility_curve(90, H_BEAM, alphas, instrument_contrast=0.64))
print("H vis ratio at contrast 0.64:",
      [round(scaled[a] / h[a], 6) for a in alphas if h[a] > 1e-6])
