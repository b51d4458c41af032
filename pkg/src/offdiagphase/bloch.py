"""
Poincare-sphere geometry of the precession experiment.

Bloch vectors are float arrays of shape ``(3,)``.  Trajectories are sampled
from the actual spinor evolution, geodesics by spherical linear
interpolation, and solid angles by summing signed spherical triangles fanned
from a reference direction.
"""

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from .spinor import (
    check_polar,
    check_rotation,
    make_minus_state,
    make_plus_state,
)

DEFAULT_SAMPLES = 4096

TRAJECTORY = "trajectory"
GEODESIC = "geodesic"

_ANTIPODAL_TOL = 1e-9
_JOIN_TOL = 1e-9


class AntipodalPoints(ValueError):
    """The geodesic between two antipodal points is not unique."""


class UndefinedLoop(ValueError):
    """A loop needs a geodesic between antipodal points."""


class OpenLoop(ValueError):
    """Solid angle requested for a loop that does not close."""


def to_bloch(s):
    """Bloch vector ``(2 Re(u* d), 2 Im(u* d), |u|^2 - |d|^2)`` of a spinor."""
    up, down = complex(s[0]), complex(s[1])
    cross = up.conjugate() * down
    return np.array([2 * cross.real, 2 * cross.imag, abs(up) ** 2 - abs(down) ** 2])


def _unit(v):
    return v / np.linalg.norm(v)


@dataclass(frozen=True)
class Arc:
    start: np.ndarray
    end: np.ndarray
    kind: str
    waypoints: np.ndarray = field(repr=False)

    def reversed(self):
        return Arc(self.end, self.start, self.kind, self.waypoints[::-1].copy())

    @property
    def degenerate(self):
        return len(self.waypoints) == 1


@dataclass(frozen=True)
class BlochLoop:
    arcs: tuple
    closed: bool

    @classmethod
    def from_arcs(cls, arcs):
        arcs = tuple(arcs)
        for a, b in zip(arcs, arcs[1:]):
            if np.linalg.norm(a.end - b.start) > _JOIN_TOL:
                raise ValueError("consecutive arcs do not share an endpoint")
        closed = bool(arcs) and np.linalg.norm(arcs[-1].end - arcs[0].start) <= _JOIN_TOL
        return cls(arcs, closed)

    def reversed(self):
        return BlochLoop(tuple(a.reversed() for a in reversed(self.arcs)), self.closed)

    def polygon(self):
        """Waypoints of all arcs with repeated points removed, closing point dropped."""
        pts = np.vstack([a.waypoints for a in self.arcs])
        keep = np.ones(len(pts), dtype=bool)
        keep[1:] = np.linalg.norm(np.diff(pts, axis=0), axis=1) > 1e-14
        pts = pts[keep]
        if len(pts) > 1 and np.linalg.norm(pts[-1] - pts[0]) <= 1e-14:
            pts = pts[:-1]
        return pts

    def to_csv(self, path):
        """Write waypoints as ``arc_index,kind,x,y,z`` rows."""
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["arc_index", "kind", "x", "y", "z"])
            for i, arc in enumerate(self.arcs):
                for x, y, z in arc.waypoints:
                    writer.writerow([i, arc.kind, repr(float(x)), repr(float(y)), repr(float(z))])


def precession_trajectory(theta, alpha, n_samples=DEFAULT_SAMPLES, state="+"):
    """
    Bloch path of ``psi+`` (or ``psi-`` with ``state="-"``) under precession.

    The waypoints are the Bloch vectors of ``U(t alpha) psi`` for ``t`` equally
    spaced in [0, 1]; they stay on the latitude circle ``z = +-cos(theta)``.
    A zero rotation yields a single-point arc.
    """
    if n_samples < 2:
        raise ValueError("n_samples must be at least 2")
    check_polar(theta)
    check_rotation(alpha)
    if state == "+":
        spinor = make_plus_state(theta)
    elif state == "-":
        spinor = make_minus_state(theta)
    else:
        raise ValueError(f"state must be '+' or '-', got {state!r}")
    if float(alpha) == 0.0:
        p = to_bloch(spinor)
        return Arc(p, p.copy(), TRAJECTORY, p[None, :].copy())
    # spinor evolution in closed form over the whole sample
    half = np.radians(float(alpha)) * np.linspace(0.0, 1.0, n_samples) / 2
    up = spinor[0] * np.exp(1j * half)
    down = spinor[1] * np.exp(-1j * half)
    cross = np.conj(up) * down
    pts = np.column_stack([2 * cross.real, 2 * cross.imag, np.abs(up) ** 2 - np.abs(down) ** 2])
    return Arc(pts[0].copy(), pts[-1].copy(), TRAJECTORY, pts)


def geodesic_arc(a, b, n_samples=DEFAULT_SAMPLES):
    """Minor great-circle arc from ``a`` to ``b`` (slerp waypoints)."""
    if n_samples < 2:
        raise ValueError("n_samples must be at least 2")
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    cos_w = float(np.clip(a @ b, -1.0, 1.0))
    if cos_w < -1.0 + _ANTIPODAL_TOL:
        raise AntipodalPoints(f"no unique geodesic between {a} and {b}")
    # angle from atan2 keeps precision for nearly coincident points
    w = math.atan2(np.linalg.norm(np.cross(a, b)), cos_w)
    if w < 1e-12:
        return Arc(a.copy(), a.copy(), GEODESIC, a[None, :].copy())
    t = np.linspace(0.0, 1.0, n_samples)[:, None]
    pts = (np.sin((1 - t) * w) * a + np.sin(t * w) * b) / math.sin(w)
    pts /= np.linalg.norm(pts, axis=1)[:, None]
    pts[0], pts[-1] = a, b
    return Arc(a.copy(), b.copy(), GEODESIC, pts)


def _fibonacci_directions(n=64):
    k = np.arange(n) + 0.5
    z = 1 - 2 * k / n
    r = np.sqrt(1 - z * z)
    phi = math.pi * (3 - math.sqrt(5)) * k
    return np.column_stack([r * np.cos(phi), r * np.sin(phi), z])


def _reference_direction(pts):
    # The fan sum counts regions relative to the antipode of the reference,
    # so the antipode has to stay clear of the polygon.
    centroid = pts.mean(axis=0)
    norm = np.linalg.norm(centroid)
    if norm > 1e-3:
        c = centroid / norm
        if np.max(pts @ -c) < math.cos(0.05):
            return c
    candidates = np.vstack([np.eye(3), _fibonacci_directions()])
    closest = np.max(pts @ -candidates.T, axis=0)
    return candidates[int(np.argmin(closest))]


def polygon_solid_angle(pts, reference=None):
    """
    Signed solid angle of a closed spherical polygon (implicitly closed).

    Sums ``2 atan2(c.(p x q), 1 + c.p + c.q + p.q)`` over the triangles
    ``(c, p_i, p_i+1)``.  Counter-clockwise seen from outside is positive.
    """
    pts = np.asarray(pts, dtype=float)
    if len(pts) < 3:
        return 0.0
    c = _reference_direction(pts) if reference is None else _unit(np.asarray(reference, float))
    nxt = np.roll(pts, -1, axis=0)
    num = np.cross(pts, nxt) @ c
    den = 1.0 + pts @ c + nxt @ c + np.einsum("ij,ij->i", pts, nxt)
    return float(2.0 * np.arctan2(num, den).sum())


def loop_solid_angle(loop):
    """Signed solid angle enclosed by a closed loop, in steradians."""
    if not loop.closed:
        raise OpenLoop("loop does not return to its starting point")
    return polygon_solid_angle(loop.polygon())


def wrap_solid_angle(omega):
    """Map a solid angle to (-2 pi, 2 pi]; loops are only defined modulo 4 pi."""
    four_pi = 4 * math.pi
    wrapped = 2 * math.pi - ((2 * math.pi - omega) % four_pi)
    return wrapped + four_pi if wrapped <= -2 * math.pi + 1e-12 else wrapped


def solid_angle_distance(a, b):
    """|a - b| modulo 4 pi."""
    return abs(wrap_solid_angle(a - b))


def phase_from_solid_angle(omega):
    """Geometric phase (degrees) carried by a loop of solid angle ``omega``."""
    return math.degrees(omega / 2)


def _checked_geodesic(a, b, n_samples):
    try:
        return geodesic_arc(a, b, n_samples)
    except AntipodalPoints as exc:
        raise UndefinedLoop(str(exc)) from exc


def off_diagonal_loop(theta, alpha, n_samples=DEFAULT_SAMPLES):
    """
    Loop ``[Gamma+, G+-, Gamma-, G-+]`` bounding the off-diagonal phase.

    ``Gamma+-`` are the precession paths of ``psi+`` and ``psi-``; the
    geodesics join the end of one path to the start of the other.  Its solid
    angle is 2 pi (mod 4 pi) for every defined case.
    """
    if float(alpha) % 360.0 == 0.0:
        raise UndefinedLoop("off-diagonal elements vanish for alpha = 0 mod 360")
    gamma_p = precession_trajectory(theta, alpha, n_samples, "+")
    gamma_m = precession_trajectory(theta, alpha, n_samples, "-")
    g_pm = _checked_geodesic(gamma_p.end, gamma_m.start, n_samples)
    g_mp = _checked_geodesic(gamma_m.end, gamma_p.start, n_samples)
    return BlochLoop.from_arcs([gamma_p, g_pm, gamma_m, g_mp])


def direct_evolution_loop(theta, alpha, n_samples=DEFAULT_SAMPLES):
    """
    Loop of the direct two-path interpretation.

    Traversed as ``[Gamma_II, G_II, reversed G_I, reversed Gamma_I]``: out from
    ``psi+`` along the ``U`` path, projected onto ``psi-``, and back along the
    ``U^-1`` path.  This orientation gives ``2 pi + 2 alpha cos(theta)``
    (mod 4 pi).
    """
    gamma_i = precession_trajectory(theta, -float(alpha), n_samples, "+")
    gamma_ii = precession_trajectory(theta, alpha, n_samples, "+")
    target = to_bloch(make_minus_state(theta))
    g_i = _checked_geodesic(gamma_i.end, target, n_samples)
    g_ii = _checked_geodesic(gamma_ii.end, target, n_samples)
    return BlochLoop.from_arcs([gamma_ii, g_ii, g_i.reversed(), gamma_i.reversed()])


def expected_direct_solid_angle(theta, alpha):
    """2 pi + 2 alpha cos(theta), alpha in radians."""
    return 2 * math.pi + 2 * check_rotation(alpha) * math.cos(check_polar(theta))
