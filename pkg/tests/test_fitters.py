import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.optimize import curve_fit

from offdiagphase.beamline import (
    H_BEAM,
    O_BEAM,
    BeamConfig,
    Interferogram,
    default_chi_grid,
    mixed_fringe,
    synthesize_interferogram,
)
from offdiagphase.fitters import (
    DegenerateGrid,
    InsufficientData,
    SinusoidFit,
    fit_sinusoid,
    phase_shift,
    visibility_curve,
)
from offdiagphase.phases import angular_difference

GRID_THETA = [30.0, 60.0, 90.0, 135.0]
GRID_ALPHA = [45.0, -67.5, 67.5, -90.0, 90.0, -180.0, 180.0, -225.0, 225.0]


def _fit(phase, oscillating=True, amplitude=1.0):
    return SinusoidFit(offset=2.0, amplitude=amplitude, phase=phase, visibility=0.5,
                       phase_uncertainty=1.0, oscillating=oscillating)


def _truth(config, beam):
    # I = A + Re(F e^{i chi}) = A + |F| cos(chi - phi) with phi = -arg F
    offset, fringe = mixed_fringe(config, beam)
    return offset, abs(fringe), -math.degrees(np.angle(fringe))


def test_ideal_o_beam_example():
    fit = fit_sinusoid(synthesize_interferogram(BeamConfig(theta=90, alpha=180), O_BEAM))
    assert abs(angular_difference(fit.phase, 180)) < 1e-10
    assert abs(fit.visibility - 1) < 1e-10
    assert fit.oscillating


@pytest.mark.parametrize("beam", [O_BEAM, H_BEAM])
@pytest.mark.parametrize("theta", GRID_THETA)
@pytest.mark.parametrize("alpha", GRID_ALPHA)
def test_noise_free_round_trip(beam, theta, alpha):
    config = BeamConfig(theta=theta, alpha=alpha, mean_counts=1000)
    fit = fit_sinusoid(synthesize_interferogram(config, beam))
    a, b, phi = _truth(config, beam)
    a, b = 1000 * a, 1000 * b
    assert abs(fit.offset - a) <= 1e-9 * a
    assert abs(fit.amplitude - b) <= 1e-9 * a
    if b > 1e-6 * a:
        assert abs(angular_difference(fit.phase, phi)) < 1e-9


def test_flat_not_oscillating():
    chi = default_chi_grid()
    fit = fit_sinusoid(Interferogram(chi, np.full(len(chi), 1500.0), H_BEAM))
    assert fit.amplitude < 1e-9
    assert not fit.oscillating


def test_too_few_points():
    with pytest.raises(InsufficientData):
        fit_sinusoid(Interferogram([0, 90, 180], [1, 2, 3], O_BEAM))


@pytest.mark.parametrize("chi", [[0, 360, 720, 1080], [0, 180, 360, 540, 720]])
def test_degenerate_grid(chi):
    with pytest.raises(DegenerateGrid):
        fit_sinusoid(Interferogram(chi, np.ones(len(chi)), O_BEAM))


@pytest.mark.parametrize("seed", range(5))
def test_matches_scipy_curve_fit(seed):
    config = BeamConfig(theta=60, alpha=100, polarization_fraction=0.9,
                        mean_counts=2000, noise_seed=seed)
    g = synthesize_interferogram(config, O_BEAM)
    fit = fit_sinusoid(g, weighting="uniform")

    def model(chi, a, b, phi):
        return a + b * np.cos(np.radians(chi) - phi)

    (a, b, phi), _ = curve_fit(model, g.chi, g.intensity.astype(float),
                               p0=[g.intensity.mean(), g.intensity.std(), 0.0])
    if b < 0:
        b, phi = -b, phi + math.pi
    assert abs(fit.offset - a) < 1e-6 * a
    assert abs(fit.amplitude - b) < 1e-6 * a
    assert abs(angular_difference(fit.phase, math.degrees(phi))) < 1e-5


def test_phase_shift_examples():
    r = phase_shift(_fit(170), _fit(-10))
    assert r.defined and r.value == 180.0
    assert not phase_shift(_fit(170, oscillating=False), _fit(-10)).defined
    assert not phase_shift(_fit(170), _fit(-10, oscillating=False)).defined
    f = _fit(33.3, amplitude=4.0)
    r = phase_shift(f, f)
    assert r.defined and r.value == 0 and r.magnitude == 4.0


@given(st.floats(-180, 180), st.floats(-180, 180))
def test_phase_shift_antisymmetric(a, b):
    forward = phase_shift(_fit(a), _fit(b)).value
    backward = phase_shift(_fit(b), _fit(a)).value
    assert abs(math.remainder(forward + backward, 360)) < 1e-9


@given(st.integers(-5, 5))
def test_fit_invariant_under_full_turns(k):
    config = BeamConfig(theta=60, alpha=90, polarization_fraction=0.87,
                        mean_counts=2000, noise_seed=4)
    g = synthesize_interferogram(config, O_BEAM)
    shifted = Interferogram(g.chi + 360 * k, g.intensity, g.beam, g.config)
    a, b = fit_sinusoid(g), fit_sinusoid(shifted)
    assert abs(a.offset - b.offset) < 1e-8 * a.offset
    assert abs(a.amplitude - b.amplitude) < 1e-8 * a.offset
    assert abs(angular_difference(a.phase, b.phase)) < 1e-8
    assert abs(a.phase_uncertainty - b.phase_uncertainty) < 1e-8


def test_visibility_curve_examples():
    alphas = [67.0, 90.0, 180.0]
    h = visibility_curve(90, H_BEAM, alphas)
    o = visibility_curve(90, O_BEAM, alphas)
    for (alpha, vh), (_, vo) in zip(h, o):
        assert abs(vh - abs(math.cos(math.radians(alpha)))) < 1e-9
        assert abs(vo - 1) < 1e-9
    assert abs(h[1][1]) < 1e-9


def test_visibility_curve_dark_beam():
    (alpha, vis), = visibility_curve(90, O_BEAM, [0.0])
    assert alpha == 0.0 and math.isnan(vis)


@given(st.floats(0, 180), st.floats(-720, 720))
def test_h_visibility_closed_form(theta, alpha):
    (_, vis), = visibility_curve(theta, H_BEAM, [alpha])
    th, al = math.radians(theta), math.radians(alpha)
    expected = math.sqrt(math.cos(al) ** 2 + math.cos(th) ** 2 * math.sin(al) ** 2)
    assert abs(vis - expected) < 1e-9


def test_visibility_curve_contrast():
    plain = visibility_curve(60, H_BEAM, [30.0, 120.0])
    scaled = visibility_curve(60, H_BEAM, [30.0, 120.0], instrument_contrast=0.64)
    for (_, v), (_, w) in zip(plain, scaled):
        assert abs(w - 0.64 * v) < 1e-9


def _phase_bias(counts, n_seeds=400):
    # mean signed phase error at a point with a strong asymmetric mixture
    config = BeamConfig(theta=60, alpha=120, polarization_fraction=0.9)
    _, _, truth = _truth(config, H_BEAM)
    errors = []
    for seed in range(n_seeds):
        g = synthesize_interferogram(
            BeamConfig(theta=60, alpha=120, polarization_fraction=0.9,
                       mean_counts=counts, noise_seed=seed), H_BEAM)
        errors.append(angular_difference(fit_sinusoid(g).phase, truth))
    errors = np.array(errors)
    return abs(errors.mean()), errors.std() / math.sqrt(n_seeds)


def test_phase_estimator_consistent():
    results = [_phase_bias(c) for c in (200, 2000, 20000)]
    spreads = [s for _, s in results]
    # the error distribution narrows like 1/sqrt(counts) and the bias stays
    # within its own Monte-Carlo resolution at every level
    assert spreads[0] > spreads[1] > spreads[2]
    for bias, stderr in results:
        assert bias < 4 * stderr + 1e-3
    assert results[2][0] < 0.1


def test_poisson_uncertainty_calibrated():
    sigmas, errors = [], []
    for seed in range(200):
        g = synthesize_interferogram(
            BeamConfig(theta=90, alpha=180, mean_counts=2000, noise_seed=seed), O_BEAM)
        fit = fit_sinusoid(g)
        sigmas.append(fit.phase_uncertainty)
        errors.append(angular_difference(fit.phase, 180))
    ratio = np.std(errors) / np.mean(sigmas)
    assert 0.8 < ratio < 1.2
