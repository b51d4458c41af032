"""
Spin-1/2 spinor and 2x2 operator algebra.

Spinors are complex arrays of shape ``(2,)`` ordered ``(up, down)`` in the
``|+z>, |-z>`` basis; operators are complex ``(2, 2)`` arrays.  Every angle
taken by the public functions is in degrees.
"""

import math

import numpy as np

ATOL = 1e-12

IDENTITY = np.eye(2, dtype=complex)


def check_polar(theta):
    """Validate a polar angle in degrees and return it in radians."""
    theta = float(theta)
    if not 0.0 <= theta <= 180.0:
        raise ValueError(f"polar angle must lie in [0, 180] degrees, got {theta}")
    return math.radians(theta)


def check_rotation(alpha):
    """Validate a precession angle in degrees and return it in radians."""
    alpha = float(alpha)
    if not math.isfinite(alpha):
        raise ValueError(f"rotation angle must be finite, got {alpha}")
    return math.radians(alpha)


def make_plus_state(theta):
    """
    Incident spinor tilted by ``theta`` degrees from +z.

    Returns ``(cos(theta/2), sin(theta/2))`` with real components, which puts
    the Bloch vector in the x-z plane.
    """
    half = check_polar(theta) / 2
    return np.array([math.cos(half), math.sin(half)], dtype=complex)


def make_minus_state(theta):
    """Spinor ``(-sin(theta/2), cos(theta/2))`` orthogonal to ``make_plus_state``."""
    return orthogonal(make_plus_state(theta))


def orthogonal(s):
    """
    Orthogonal complement of a normalized spinor.

    Uses the convention ``(up, down) -> (-conj(down), conj(up))``; applying it
    twice returns ``-s``.
    """
    s = np.asarray(s, dtype=complex)
    return np.array([-np.conj(s[1]), np.conj(s[0])])


def inner(a, b):
    """Hermitian inner product <a|b>."""
    return complex(np.vdot(a, b))


def matrix_element(bra, op, ket):
    """<bra|op|ket>."""
    return complex(np.vdot(bra, np.asarray(op) @ ket))


def precession_unitary(alpha):
    """
    Larmor precession about +z by ``alpha`` degrees.

    ``diag(exp(i alpha/2), exp(-i alpha/2))``; a 360 degree rotation gives
    minus the identity.
    """
    half = check_rotation(alpha) / 2
    return np.diag([np.exp(1j * half), np.exp(-1j * half)])


def projector(s):
    """|s><s| for a normalized spinor ``s`` (an ideal spin polarizer)."""
    s = np.asarray(s, dtype=complex)
    return np.outer(s, np.conj(s))


def basis_transform(theta):
    """Real rotation taking ``make_plus_state(theta)`` to ``(1, 0)``."""
    half = check_polar(theta) / 2
    c, s = math.cos(half), math.sin(half)
    return np.array([[c, s], [-s, c]], dtype=complex)


def conjugate_evolution(theta, alpha):
    """
    Precession operator expressed in the ``|psi+>, |psi->`` basis.

    Returns ``T U T^-1`` with ``T = basis_transform(theta)`` and
    ``U = precession_unitary(alpha)``.  Both off-diagonal entries equal
    ``-i sin(theta) sin(alpha/2)``.
    """
    t = basis_transform(theta)
    # T is real orthogonal, so its inverse is its transpose
    return t @ precession_unitary(alpha) @ t.T


def is_unitary(op, atol=ATOL):
    op = np.asarray(op)
    return np.allclose(op.conj().T @ op, IDENTITY, rtol=0, atol=atol)


def is_projector(op, atol=ATOL):
    op = np.asarray(op)
    return (np.allclose(op @ op, op, rtol=0, atol=atol)
            and np.allclose(op.conj().T, op, rtol=0, atol=atol))


def norm2(s):
    """|up|^2 + |down|^2."""
    return float(np.vdot(s, s).real)
