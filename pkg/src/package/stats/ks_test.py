import numpy as np
import pytest

from package.core.errors import ConfigurationError
from package.stats.ks import ks_two_sample


def test_identical_samples():
    a = np.random.default_rng(1).normal(size=50)
    distance, p_value = ks_two_sample(a, a)

    assert distance == 0.0
    assert p_value == pytest.approx(1.0)


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ([1, 2, 3], [4, 5], 1.0),
        ([1, 3], [2, 4], 0.5),
        ([1, 2, 3, 4], [2.5], 0.5),
        ([0, 1, 2, 3], [0.5, 1.5, 2.5, 3.5], 0.25),
    ],
)
def test_small_sample_distances(a, b, expected):
    assert ks_two_sample(a, b).distance == pytest.approx(expected)


def test_null_and_shifted_uniforms():
    first = np.random.default_rng(2).uniform(size=10_000)
    second = np.random.default_rng(3).uniform(size=10_000)
    shifted = np.random.default_rng(4).uniform(0.1, 1.1, size=10_000)

    assert ks_two_sample(first, second).p_value > 0.01
    assert ks_two_sample(first, shifted).p_value < 1e-6


def test_rejects_empty():
    with pytest.raises(ConfigurationError):
        ks_two_sample([], [1.0])
