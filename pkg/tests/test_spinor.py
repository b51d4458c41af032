import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from offdiagphase.spinor import (
    basis_transform,
    conjugate_evolution,
    is_projector,
    is_unitary,
    make_plus_state,
    norm2,
    orthogonal,
    precession_unitary,
    projector,
)

import oracles

thetas = st.floats(0, 180, allow_nan=False)
alphas = st.floats(-1080, 1080, allow_nan=False)
ATOL = 1e-12


@st.composite
def spinors(draw):
    theta = draw(st.floats(0, math.pi))
    phi = draw(st.floats(0, 2 * math.pi))
    gauge = draw(st.floats(0, 2 * math.pi))
    s = np.array([math.cos(theta / 2), math.sin(theta / 2) * np.exp(1j * phi)])
    return s * np.exp(1j * gauge)


@pytest.mark.parametrize("theta, expected", [
    (0, (1, 0)),
    (90, (1 / math.sqrt(2), 1 / math.sqrt(2))),
    (60, (0.8660254037844387, 0.5)),
])
def test_plus_state(theta, expected):
    np.testing.assert_allclose(make_plus_state(theta), expected, atol=ATOL)
    assert np.all(make_plus_state(theta).imag == 0)


@pytest.mark.parametrize("theta", [-1, 180.5, float("nan")])
def test_plus_state_rejects_bad_theta(theta):
    with pytest.raises(ValueError):
        make_plus_state(theta)


def test_orthogonal_examples():
    np.testing.assert_allclose(orthogonal([1, 0]), [0, 1], atol=ATOL)
    r = 1 / math.sqrt(2)
    np.testing.assert_allclose(orthogonal([r, r]), [-r, r], atol=ATOL)


@given(spinors())
def test_orthogonal_properties(s):
    t = orthogonal(s)
    assert abs(np.vdot(t, s)) < ATOL
    np.testing.assert_allclose(orthogonal(t), -s, atol=ATOL)


@pytest.mark.parametrize("alpha, expected", [
    (0, np.eye(2)),
    (180, np.diag([1j, -1j])),
    (360, -np.eye(2)),
])
def test_precession_unitary(alpha, expected):
    np.testing.assert_allclose(precession_unitary(alpha), expected, atol=ATOL)


@given(alphas, spinors())
def test_precession_preserves_norm_and_inverts(alpha, s):
    u = precession_unitary(alpha)
    assert is_unitary(u)
    assert abs(norm2(u @ s) - 1) < ATOL
    np.testing.assert_allclose(u @ precession_unitary(-alpha), np.eye(2), atol=ATOL)


def test_projector_examples():
    np.testing.assert_allclose(projector([1, 0]), [[1, 0], [0, 0]], atol=ATOL)
    r = 1 / math.sqrt(2)
    np.testing.assert_allclose(projector([r, r]), np.full((2, 2), 0.5), atol=ATOL)


@given(spinors())
def test_projector_properties(s):
    p = projector(s)
    assert is_projector(p)
    np.testing.assert_allclose(p @ s, s, atol=ATOL)


def test_basis_transform_examples():
    np.testing.assert_allclose(basis_transform(0), np.eye(2), atol=ATOL)
    r = 1 / math.sqrt(2)
    np.testing.assert_allclose(basis_transform(90), [[r, r], [-r, r]], atol=ATOL)


@given(thetas)
def test_basis_transform_properties(theta):
    t = basis_transform(theta)
    np.testing.assert_allclose(t @ t.T, np.eye(2), atol=ATOL)
    np.testing.assert_allclose(t @ make_plus_state(theta), [1, 0], atol=ATOL)


def test_conjugate_evolution_examples():
    np.testing.assert_allclose(conjugate_evolution(90, 180), [[0, -1j], [-1j, 0]], atol=ATOL)
    # mpmath product T U T^T at 40 digits
    expected = np.array(oracles.conjugate_evolution(60, 90).tolist(), dtype=complex)
    np.testing.assert_allclose(conjugate_evolution(60, 90), expected, atol=ATOL)
    # frozen values of the same oracle
    np.testing.assert_allclose(
        conjugate_evolution(60, 90),
        [[0.7071067811865476 + 0.3535533905932738j, -0.6123724356957945j],
         [-0.6123724356957945j, 0.7071067811865476 - 0.3535533905932738j]],
        atol=ATOL)


@given(thetas, alphas)
def test_conjugate_evolution_properties(theta, alpha):
    u = conjugate_evolution(theta, alpha)
    assert is_unitary(u)
    th, al = math.radians(theta), math.radians(alpha)
    off = -1j * math.sin(th) * math.sin(al / 2)
    assert abs(u[0, 1] - off) < ATOL
    assert abs(u[1, 0] - off) < ATOL
    product = u[0, 1] * u[1, 0]
    assert abs(product - (-(math.sin(th) ** 2) * math.sin(al / 2) ** 2)) < ATOL
    assert product.real <= ATOL
