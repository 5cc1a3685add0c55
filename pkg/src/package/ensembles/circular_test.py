import numpy as np
import pytest
from scipy import stats

from package.core.rng import RngSpec
from package.core.types import FiniteLine
from package.ensembles.circular import (
    sample_cbe,
    sample_cbe_many,
    sample_cbe_verblunsky_many,
    sample_sine_beta_window,
)
from package.ensembles.spec import EnsembleSpec
from package.opuc.verblunsky import VerblunskySequence, rotate_verblunsky
from package.stats.ks import ks_two_sample


def test_verblunsky_coefficients_are_valid():
    alphas = sample_cbe_verblunsky_many(50, 6, 2.0, RngSpec(1))

    assert alphas.shape == (50, 6)
    assert np.all(np.abs(alphas[:, :-1]) < 1)
    np.testing.assert_allclose(np.abs(alphas[:, -1]), 1.0)


def test_first_coefficient_modulus_law():
    # |α_0|² ~ Beta(1, β(n−1)/2) has mean 2/(2 + β(n−1))
    alphas = sample_cbe_verblunsky_many(20000, 4, 2.0, RngSpec(2))
    assert np.mean(np.abs(alphas[:, 0]) ** 2) == pytest.approx(0.25, rel=0.03)


def test_sample_is_reproducible():
    a = sample_cbe(10, 1.0, RngSpec(3))
    b = sample_cbe(10, 1.0, RngSpec(3))

    assert len(a) == 10
    np.testing.assert_array_equal(a.angles, b.angles)


def test_two_point_gap_law():
    # for n = 2, β = 2 the gap g has density ∝ sin²(g/2), so X = 4 sin²(g/2) has mean 3 and variance 1
    angles = sample_cbe_many(4000, 2, 2.0, RngSpec(4))
    x = 4 * np.sin((angles[:, 1] - angles[:, 0]) / 2) ** 2

    assert np.mean(x) == pytest.approx(3.0, abs=0.08)
    assert np.var(x) == pytest.approx(1.0, abs=0.1)


def test_rotation_invariance():
    angles = sample_cbe_many(2000, 3, 1.0, RngSpec(5))
    centers = np.exp(1j * angles).sum(axis=1)

    assert abs(np.mean(centers)) < 0.1


def test_sine_window_density():
    spec = EnsembleSpec.sine_window(20.0, beta=2.0, approx_n=64)

    counts = []
    for i in range(100):
        window = sample_sine_beta_window(spec, RngSpec(6).spawn(i))
        assert isinstance(window.geometry, FiniteLine)
        assert np.all(np.abs(window.points) <= 20.0)
        counts.append(len(window))

    assert np.mean(counts) == pytest.approx(40 / (2 * np.pi), abs=0.3)


@pytest.mark.slow
def test_coefficient_phases_are_uniform():
    n = 5
    alphas = sample_cbe_verblunsky_many(5000, n, 2.0, RngSpec(7))

    for j in range(n):
        phases = np.mod(np.angle(alphas[:, j]), 2 * np.pi)
        assert stats.kstest(phases, "uniform", args=(0, 2 * np.pi)).pvalue > 1e-3


@pytest.mark.slow
def test_rotation_keeps_coefficient_law():
    n = 4
    eta = np.exp(0.7j)
    first = sample_cbe_verblunsky_many(4000, n, 1.0, RngSpec(8))
    second = sample_cbe_verblunsky_many(4000, n, 1.0, RngSpec(9))

    rotated = np.stack([rotate_verblunsky(VerblunskySequence(row), eta).alphas for row in first])

    np.testing.assert_allclose(np.abs(rotated), np.abs(first), rtol=1e-12)
    for j in range(n):
        assert ks_two_sample(np.angle(rotated[:, j]), np.angle(second[:, j])).p_value > 1e-3
    for j in range(n - 1):
        assert ks_two_sample(np.abs(rotated[:, j]), np.abs(second[:, j])).p_value > 1e-3
