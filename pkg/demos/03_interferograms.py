"""
Synthetic interferograms and phase-shift fits
=============================================

Counts from the analyzed (O) and unanalyzed (H) output beams are simulated
as the phase shifter sweeps chi, then fitted with A + B cos(chi - phi).
"""

import numpy as np

from offdiagphase.beamline import H_BEAM, O_BEAM, BeamConfig, synthesize_pair
from offdiagphase.fitters import fit_sinusoid, phase_shift, shift_uncertainty

###############################################################################
# Noise-free: the O-beam fringe shifts by exactly 180 degrees.

config = BeamConfig(theta=90, alpha=-180, mean_counts=2000)
rotated, reference = synthesize_pair(config, O_BEAM)
fit, ref = fit_sinusoid(rotated), fit_sinusoid(reference)
print("noise-free shift:", phase_shift(fit, ref).value)

###############################################################################
# With Poisson counting noise the fit reports a phase uncertainty.

noisy = BeamConfig(theta=90, alpha=-180, mean_counts=2000, noise_seed=1)
rotated, reference = synthesize_pair(noisy, O_BEAM)
fit, ref = fit_sinusoid(rotated), fit_sinusoid(reference)
print(f"noisy shift: {phase_shift(fit, ref).value:.2f} +- {shift_uncertainty(fit, ref):.2f} deg")
print("counts:", rotated.intensity[:8], "...")

###############################################################################
# The H-beam at alpha = 90 shows no oscillation: the two paths carry
# orthogonal spins, so the shift is undefined.

rotated, reference = synthesize_pair(BeamConfig(theta=90, alpha=90, mean_counts=2000,
                                                noise_seed=1), H_BEAM)
fit = fit_sinusoid(rotated)
print(f"H-beam alpha=90: amplitude {fit.amplitude:.1f} +- {fit.amplitude_uncertainty:.1f},",
      "oscillating" if fit.oscillating else "not oscillating")

###############################################################################
# A full 360 degree rotation flips the sign of the spinor: the H-beam fringe
# is shifted by 180 degrees and only returns after 720.

for alpha in (0, 180, 360, 540, 720):
    rotated, reference = synthesize_pair(BeamConfig(theta=90, alpha=alpha), H_BEAM)
    shift = phase_shift(fit_sinusoid(rotated), fit_sinusoid(reference))
    print(f"alpha={alpha:3d}  H shift = {np.round(shift.value, 6) if shift.defined else None}")
