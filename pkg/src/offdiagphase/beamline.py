"""
Two-path interferometer with and without final spin analysis.

The O-beam passes a polarizer projecting on ``psi-`` after recombination of
the arms ``P(psi-) U^-1`` and ``P(psi-) U``; the H-beam is recorded without
analysis (arms ``U^-1`` and ``U``).  Intensities are relative to a single arm
of unit intensity, so an unanalyzed interferometer swings between 0 and 4.

Imperfect polarization is an incoherent mixture of the nominal incident
spinor with its orthogonal partner, both sent through the same apparatus.
Instrument contrast scales the oscillating part about its mean.
"""

import math
from dataclasses import asdict, dataclass, replace

import numpy as np

from .spinor import make_minus_state, make_plus_state, precession_unitary, projector

O_BEAM = "o"
H_BEAM = "h"
BEAMS = (O_BEAM, H_BEAM)

_BEAM_CODES = {O_BEAM: 0, H_BEAM: 1}


@dataclass(frozen=True)
class BeamConfig:
    """Settings of one interferometer run.

    ``polarization_fraction`` is the weight of the nominal incident spinor,
    ``instrument_contrast`` the multiplicative visibility loss and
    ``mean_counts`` the expected counts at unit relative intensity.
    """

    theta: float = 90.0
    alpha: float = 0.0
    polarization_fraction: float = 1.0
    instrument_contrast: float = 1.0
    mean_counts: float = 1.0
    noise_seed: int | None = None

    def __post_init__(self):
        if not 0.0 <= self.theta <= 180.0:
            raise ValueError(f"theta must lie in [0, 180] degrees, got {self.theta}")
        if not math.isfinite(self.alpha):
            raise ValueError("alpha must be finite")
        if not 0.0 <= self.polarization_fraction <= 1.0:
            raise ValueError("polarization_fraction must lie in [0, 1]")
        if not 0.0 <= self.instrument_contrast <= 1.0:
            raise ValueError("instrument_contrast must lie in [0, 1]")
        if not self.mean_counts >= 0.0:
            raise ValueError("mean_counts must be non-negative")
        if self.noise_seed is not None and self.noise_seed < 0:
            raise ValueError("noise_seed must be non-negative")

    def with_alpha(self, alpha):
        return replace(self, alpha=float(alpha))

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        fields = {k: data[k] for k in cls.__dataclass_fields__ if k in data}
        return cls(**fields)


@dataclass(frozen=True, eq=False)
class Interferogram:
    chi: np.ndarray
    intensity: np.ndarray
    beam: str
    config: BeamConfig | None = None

    def __post_init__(self):
        chi = np.asarray(self.chi, dtype=float)
        intensity = np.asarray(self.intensity)
        if chi.ndim != 1 or chi.shape != intensity.shape:
            raise ValueError("chi and intensity must be 1-d arrays of equal length")
        if np.any(np.diff(chi) <= 0):
            raise ValueError("chi must be strictly increasing")
        if np.any(intensity < 0):
            raise ValueError("intensities must be non-negative")
        if self.beam not in BEAMS:
            raise ValueError(f"beam must be one of {BEAMS}, got {self.beam!r}")
        object.__setattr__(self, "chi", chi)
        object.__setattr__(self, "intensity", intensity)

    @property
    def noisy(self):
        return self.config is not None and self.config.noise_seed is not None


def _check_beam(beam):
    if beam not in BEAMS:
        raise ValueError(f"beam must be one of {BEAMS}, got {beam!r}")


def arm_operators(theta, alpha, beam):
    """Operators ``(A, B)`` applied in the phase-shifted and the plain arm."""
    _check_beam(beam)
    u = precession_unitary(alpha)
    u_inv = precession_unitary(-float(alpha))
    if beam == H_BEAM:
        return u_inv, u
    analyzer = projector(make_minus_state(theta))
    return analyzer @ u_inv, analyzer @ u


def fringe_coefficients(theta, alpha, beam, incident=None):
    """
    Offset and complex fringe amplitude of ``||e^{i chi} A psi + B psi||^2``.

    The intensity is ``offset + Re(fringe * e^{i chi})``.  ``incident``
    defaults to ``make_plus_state(theta)``.
    """
    a_op, b_op = arm_operators(theta, alpha, beam)
    psi = make_plus_state(theta) if incident is None else np.asarray(incident, dtype=complex)
    first, second = a_op @ psi, b_op @ psi
    offset = float(np.vdot(first, first).real + np.vdot(second, second).real)
    return offset, 2 * complex(np.vdot(second, first))


def o_beam_intensity(theta, alpha, chi):
    """Spin-analyzed output ``||e^{i chi} P U^-1 psi+ + P U psi+||^2``."""
    a_op, b_op = arm_operators(theta, alpha, O_BEAM)
    psi = make_plus_state(theta)
    phase = np.exp(1j * np.radians(np.asarray(chi, dtype=float)))
    amp = np.multiply.outer(phase, a_op @ psi) + b_op @ psi
    return np.sum(np.abs(amp) ** 2, axis=-1)


def o_beam_intensity_closed_form(theta, alpha, chi):
    """``2 sin^2(theta) sin^2(alpha/2) (1 + cos(chi - 180))``."""
    th, al = math.radians(theta), math.radians(alpha)
    chi = np.radians(np.asarray(chi, dtype=float))
    return 2 * math.sin(th) ** 2 * math.sin(al / 2) ** 2 * (1 + np.cos(chi - math.pi))


def h_beam_intensity(theta, alpha, chi):
    """Unanalyzed output ``||(e^{i chi} U^-1 + U) psi+||^2``."""
    a_op, b_op = arm_operators(theta, alpha, H_BEAM)
    psi = make_plus_state(theta)
    phase = np.exp(1j * np.radians(np.asarray(chi, dtype=float)))
    amp = np.multiply.outer(phase, a_op @ psi) + b_op @ psi
    return np.sum(np.abs(amp) ** 2, axis=-1)


def beam_intensity(theta, alpha, beam, chi):
    _check_beam(beam)
    fn = o_beam_intensity if beam == O_BEAM else h_beam_intensity
    return fn(theta, alpha, chi)


def mixed_fringe(config, beam):
    """Offset and fringe amplitude of the depolarized, contrast-reduced beam."""
    f = config.polarization_fraction
    offset, fringe = 0.0, 0j
    for weight, spinor in ((f, make_plus_state(config.theta)),
                           (1.0 - f, make_minus_state(config.theta))):
        if weight == 0.0:
            continue
        o, z = fringe_coefficients(config.theta, config.alpha, beam, spinor)
        offset += weight * o
        fringe += weight * z
    return offset, config.instrument_contrast * fringe


def mixed_intensity(config, beam, chi):
    """Relative intensity of the mixed-state model at phase(s) ``chi``."""
    offset, fringe = mixed_fringe(config, beam)
    chi = np.radians(np.asarray(chi, dtype=float))
    value = offset + (fringe * np.exp(1j * chi)).real
    # cancellation can leave tiny negatives at fringe minima
    return np.maximum(value, 0.0)


def default_chi_grid(start=0.0, end=720.0, steps=32):
    """``steps`` phase-shifter settings from ``start`` up to, excluding, ``end``."""
    if steps < 1:
        raise ValueError("steps must be positive")
    if end <= start:
        raise ValueError("chi grid end must exceed start")
    return start + (end - start) * np.arange(steps) / steps


def _poisson(expected, seed, beam, role):
    out = np.empty(len(expected), dtype=np.int64)
    for i, lam in enumerate(expected):
        rng = np.random.default_rng([seed, _BEAM_CODES[beam], role, i])
        out[i] = rng.poisson(lam)
    return out


def synthesize_interferogram(config, beam, chi_grid=None, role=0):
    """
    Expected or Poisson-sampled counts over ``chi_grid`` (degrees).

    With ``config.noise_seed`` set, point ``i`` is drawn from a stream keyed by
    ``(seed, beam, role, i)``, so the result does not depend on evaluation
    order.  ``role`` separates the rotated run (0) from its reference (1).
    """
    _check_beam(beam)
    chi = default_chi_grid() if chi_grid is None else np.asarray(chi_grid, dtype=float)
    expected = config.mean_counts * mixed_intensity(config, beam, chi)
    if config.noise_seed is None:
        counts = expected
    else:
        counts = _poisson(expected, int(config.noise_seed), beam, role)
    return Interferogram(chi, counts, beam, config)


def reference_config(config, beam):
    """
    Configuration of the paired rotators-off reference run.

    The reference is the same beam with ``alpha = 0``.  A perfectly polarized
    O-beam is dark with rotators off; its reference is then recorded without
    the analyzer (flagged by returning ``H_BEAM``), which carries the same
    phase-shifter zero.
    """
    ref = config.with_alpha(0.0)
    if beam == O_BEAM and config.polarization_fraction == 1.0:
        return ref, H_BEAM
    return ref, beam


def synthesize_pair(config, beam, chi_grid=None):
    """Rotated interferogram and its ``alpha = 0`` reference on the same grid."""
    rotated = synthesize_interferogram(config, beam, chi_grid)
    ref_cfg, ref_beam = reference_config(config, beam)
    reference = synthesize_interferogram(ref_cfg, ref_beam, rotated.chi, role=1)
    return rotated, reference
