"""
Geometric and dynamical phases of a precessing spin-1/2.

All phases are in degrees.  Phases that come from a complex number are
returned as :class:`PhaseResult`, which carries the modulus so callers can
tell a well-defined phase from the argument of (numerically) zero.
"""

import math
from dataclasses import dataclass

import numpy as np

from .spinor import (
    check_polar,
    check_rotation,
    make_minus_state,
    make_plus_state,
    matrix_element,
    precession_unitary,
)

#: below this modulus a phase is reported as undefined
EPSILON_UNDEFINED = 1e-9

# values this close to -180 are reported as +180
_SNAP_DEG = 1e-9


def wrap_degrees(value):
    """Map an angle in degrees to (-180, 180], with +180 as representative."""
    wrapped = 180.0 - ((180.0 - value) % 360.0)
    if wrapped <= -180.0 + _SNAP_DEG:
        wrapped += 360.0
    return wrapped


def angular_difference(a, b):
    """Signed difference ``a - b`` in degrees, wrapped to (-180, 180]."""
    return wrap_degrees(a - b)


@dataclass(frozen=True)
class PhaseResult:
    """Phase of a complex quantity.

    ``value`` is meaningless when ``defined`` is false.
    """

    value: float
    defined: bool
    magnitude: float

    @property
    def radians(self):
        return math.radians(self.value)


def phase_of(z, epsilon=EPSILON_UNDEFINED):
    """Argument of ``z`` in degrees; undefined when ``|z| < epsilon``."""
    z = complex(z)
    magnitude = abs(z)
    if magnitude < epsilon:
        return PhaseResult(0.0, False, magnitude)
    return PhaseResult(wrap_degrees(math.degrees(math.atan2(z.imag, z.real))), True, magnitude)


def off_diagonal_product(theta, alpha, unitary=None):
    """<psi+|U|psi-><psi-|U|psi+> for precession by ``alpha`` degrees.

    ``unitary`` overrides the evolution operator.
    """
    plus, minus = make_plus_state(theta), make_minus_state(theta)
    u = precession_unitary(alpha) if unitary is None else unitary
    return matrix_element(plus, u, minus) * matrix_element(minus, u, plus)


def off_diagonal_phase(theta, alpha):
    """
    Off-diagonal geometric phase of the pair ``psi+``, ``psi-``.

    Equal to 180 degrees whenever the off-diagonal elements of the precession
    do not vanish.  Undefined for ``alpha = 0 mod 360`` and for
    ``theta`` in {0, 180}.
    """
    return phase_of(off_diagonal_product(theta, alpha))


def dynamical_phase(theta, alpha, branch):
    """
    Dynamical phase accumulated under z-precession, in degrees.

    ``branch`` is ``"+"`` / ``"-"`` for the states ``psi+`` / ``psi-`` evolving
    under the same precession, or ``"II"`` / ``"I"`` for the two interferometer
    paths (``U`` and ``U^-1`` acting on ``psi+``).  ``"+"`` and ``"II"`` give
    ``+(alpha/2) cos(theta)``, the others its negative.
    """
    if branch in ("+", "II"):
        sign = 1.0
    elif branch in ("-", "I"):
        sign = -1.0
    else:
        raise ValueError(f"unknown branch {branch!r}")
    cos_theta = math.cos(check_polar(theta))
    check_rotation(alpha)
    return sign * 0.5 * float(alpha) * cos_theta


def hbeam_overlap(theta, alpha):
    """<psi+|U(2 alpha)|psi+> = cos(alpha) + i cos(theta) sin(alpha)."""
    plus = make_plus_state(theta)
    return matrix_element(plus, precession_unitary(2 * float(alpha)), plus)


def pancharatnam_phase_hbeam(theta, alpha):
    """
    Diagonal (Pancharatnam) phase seen by the unanalyzed beam.

    The two arms precess by ``+alpha`` and ``-alpha``, so the fringe shift is
    the phase of the overlap after a doubled rotation ``2 alpha``.
    """
    return phase_of(hbeam_overlap(theta, alpha))


def direct_path_states(theta, alpha):
    """The two interfering kets ``P(psi-) U^-1 psi+`` and ``P(psi-) U psi+``."""
    plus, minus = make_plus_state(theta), make_minus_state(theta)
    u = precession_unitary(alpha)
    u_inv = precession_unitary(-float(alpha))
    psi_i = matrix_element(minus, u_inv, plus) * minus
    psi_ii = matrix_element(minus, u, plus) * minus
    return psi_i, psi_ii


def generalized_bp_phase(theta, alpha):
    """
    Geometric part of the direct two-path evolution.

    The measured overlap <psi_I|psi_II> carries the geometric phase plus the
    dynamical phases of the two paths; removing ``Phi_I - Phi_II`` leaves
    ``180 + alpha cos(theta)`` (wrapped).  The magnitude is ``|<psi_I|psi_II>|``.
    """
    psi_i, psi_ii = direct_path_states(theta, alpha)
    measured = phase_of(np.vdot(psi_i, psi_ii))
    if not measured.defined:
        return measured
    dyn = dynamical_phase(theta, alpha, "I") - dynamical_phase(theta, alpha, "II")
    return PhaseResult(wrap_degrees(measured.value - dyn), True, measured.magnitude)


def direct_decomposition(theta, alpha):
    """Geometric plus dynamical parts of the direct evolution; 180 when defined."""
    bp = generalized_bp_phase(theta, alpha)
    if not bp.defined:
        return bp
    total = bp.value + dynamical_phase(theta, alpha, "I") - dynamical_phase(theta, alpha, "II")
    return PhaseResult(wrap_degrees(total), True, bp.magnitude)
