"""
Least-squares sinusoid fits of interferograms.

The model ``I = A + B cos(chi - phi)`` is fitted in its linear form
``A + P cos(chi) + Q sin(chi)``, so there is no starting guess and no
iteration.  Uncertainties come from the covariance of ``(A, P, Q)``.
"""

import math
from dataclasses import dataclass

import numpy as np

from .beamline import BeamConfig, synthesize_interferogram
from .phases import PhaseResult, wrap_degrees

K_SIGMA = 3.0

#: mean relative intensity below which a beam counts as dark
DARK_LEVEL = 1e-12

# amplitudes below this fraction of the offset count as no oscillation,
# whatever the estimated uncertainty (noise-free data has sigma ~ 0)
_RELATIVE_FLOOR = 1e-9


class InsufficientData(ValueError):
    pass


class DegenerateGrid(ValueError):
    pass


@dataclass(frozen=True)
class SinusoidFit:
    offset: float
    amplitude: float
    phase: float
    visibility: float
    phase_uncertainty: float
    oscillating: bool
    amplitude_uncertainty: float = 0.0
    offset_uncertainty: float = 0.0

    def to_dict(self):
        return {
            "offset": self.offset,
            "amplitude": self.amplitude,
            "phase_deg": self.phase,
            "visibility": self.visibility,
            "phase_sigma_deg": self.phase_uncertainty,
            "oscillating": self.oscillating,
        }


def _weights(g, weighting):
    if weighting is None:
        if g.config is not None:
            weighting = "poisson" if g.noisy else "uniform"
        else:
            integral = np.all(np.asarray(g.intensity) == np.round(g.intensity))
            weighting = "poisson" if integral else "uniform"
    if weighting == "poisson":
        return 1.0 / np.maximum(np.asarray(g.intensity, dtype=float), 1.0), True
    if weighting == "uniform":
        return np.ones(len(g.chi)), False
    raise ValueError(f"unknown weighting {weighting!r}")


def fit_sinusoid(g, weighting=None, k_sigma=K_SIGMA):
    """
    Fit ``A + B cos(chi - phi)`` to an interferogram.

    ``weighting`` is ``"poisson"`` (weights ``1/max(counts, 1)``, absolute
    covariance) or ``"uniform"`` (covariance scaled by the residual
    variance).  By default Poisson weights are used for seeded synthetic data
    and for bare integer count series.
    """
    chi = np.radians(np.asarray(g.chi, dtype=float))
    y = np.asarray(g.intensity, dtype=float)
    n = len(y)
    if n < 4:
        raise InsufficientData(f"need at least 4 points, got {n}")
    design = np.column_stack([np.ones(n), np.cos(chi), np.sin(chi)])
    if np.linalg.matrix_rank(design) < 3:
        raise DegenerateGrid("phase-shifter settings do not constrain a sinusoid")

    w, absolute = _weights(g, weighting)
    sw = np.sqrt(w)
    coef, *_ = np.linalg.lstsq(design * sw[:, None], y * sw, rcond=None)
    normal_inv = np.linalg.inv(design.T @ (design * w[:, None]))
    if absolute:
        cov = normal_inv
    else:
        resid = y - design @ coef
        dof = max(n - 3, 1)
        cov = normal_inv * float(w @ resid ** 2) / dof

    a, p, q = (float(c) for c in coef)
    amplitude = math.hypot(p, q)
    phase = wrap_degrees(math.degrees(math.atan2(q, p)))
    if amplitude > 0:
        grad_b = np.array([0.0, p, q]) / amplitude
        grad_phi = np.array([0.0, -q, p]) / amplitude ** 2
        sigma_b = math.sqrt(max(float(grad_b @ cov @ grad_b), 0.0))
        sigma_phi = math.degrees(math.sqrt(max(float(grad_phi @ cov @ grad_phi), 0.0)))
    else:
        sigma_b = math.sqrt(max(float(cov[1, 1] + cov[2, 2]) / 2, 0.0))
        sigma_phi = 180.0
    visibility = amplitude / a if a > 0 else 0.0
    oscillating = (amplitude > k_sigma * sigma_b
                   and amplitude > _RELATIVE_FLOOR * abs(a))
    return SinusoidFit(
        offset=a,
        amplitude=amplitude,
        phase=phase,
        visibility=visibility,
        phase_uncertainty=min(sigma_phi, 180.0),
        oscillating=oscillating,
        amplitude_uncertainty=sigma_b,
        offset_uncertainty=math.sqrt(max(float(cov[0, 0]), 0.0)),
    )


def phase_shift(fit, reference):
    """Fringe shift of ``fit`` relative to ``reference``; undefined unless both oscillate."""
    if not (fit.oscillating and reference.oscillating):
        return PhaseResult(0.0, False, fit.amplitude)
    return PhaseResult(wrap_degrees(fit.phase - reference.phase), True, fit.amplitude)


def shift_uncertainty(fit, reference):
    return math.hypot(fit.phase_uncertainty, reference.phase_uncertainty)


def visibility_curve(theta, beam, alphas, instrument_contrast=1.0, polarization_fraction=1.0,
                     chi_grid=None):
    """
    Fitted fringe visibility against rotation angle, from noise-free synthesis.

    Returns a list of ``(alpha, visibility)``.  A beam with no intensity at all
    (the analyzed beam without rotation) gives ``nan``.
    """
    out = []
    for alpha in alphas:
        config = BeamConfig(theta=theta, alpha=float(alpha),
                            polarization_fraction=polarization_fraction,
                            instrument_contrast=instrument_contrast)
        fit = fit_sinusoid(synthesize_interferogram(config, beam, chi_grid))
        vis = fit.visibility if fit.offset > DARK_LEVEL else math.nan
        out.append((float(alpha), vis))
    return out
