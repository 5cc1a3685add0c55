import numpy as np
import pytest
from scipy import stats

from package.core.errors import ConfigurationError
from package.core.rng import (
    RngSpec,
    sample_dirichlet_weights,
    sample_dirichlet_weights_many,
    sample_gamma_weights,
    standard_gamma,
)


def test_same_spec_same_stream():
    a = RngSpec(7, 3).generator().random(5)
    b = RngSpec(7, 3).generator().random(5)
    c = RngSpec(7, 4).generator().random(5)

    np.testing.assert_array_equal(a, b)
    assert not np.array_equal(a, c)


def test_spawned_streams_differ_and_replay():
    spec = RngSpec(1, 0)
    first = spec.spawn(0).generator().random(3)
    second = spec.spawn(1).generator().random(3)

    assert not np.array_equal(first, second)
    np.testing.assert_array_equal(first, RngSpec(1, 0).spawn(0).generator().random(3))


def test_str_round_trip():
    spec = RngSpec(42, 5).spawn(3).spawn(1)

    assert str(RngSpec(42, 5)) == "philox:42:5"
    assert RngSpec.from_str(str(spec)) == spec


def test_rejects_bad_seed():
    with pytest.raises(ConfigurationError):
        RngSpec(-1)

    with pytest.raises(ConfigurationError):
        RngSpec.from_str("mt19937:1:0")


def test_gamma_weights_mean():
    weights = sample_gamma_weights(10**6, 2.0, RngSpec(11))
    assert weights.mean() == pytest.approx(2.0, abs=0.01)


def test_gamma_weights_exponential_median():
    weights = sample_gamma_weights(10**6, 2.0, RngSpec(12))
    assert np.mean(weights > 2 * np.log(2)) == pytest.approx(0.5, abs=0.005)


def test_gamma_weights_empty_and_invalid():
    assert len(sample_gamma_weights(0, 2.0, RngSpec(1))) == 0

    with pytest.raises(ConfigurationError):
        sample_gamma_weights(3, 0.0, RngSpec(1))


@pytest.mark.parametrize("shape", [0.5, 0.1])
def test_boosted_gamma_moments(shape: float):
    count = 10**6
    draws = standard_gamma(shape, count, RngSpec(13))

    mean_se = np.sqrt(shape / count)
    # central fourth moment of Gamma(k, 1) is 3k² + 6k
    var_se = np.sqrt((3 * shape**2 + 6 * shape - shape**2) / count)

    assert np.all(draws > 0)
    assert abs(draws.mean() - shape) < 4 * mean_se
    assert abs(draws.var() - shape) < 4 * var_se


def test_dirichlet_sums_to_one():
    rho = sample_dirichlet_weights(10, 1.0, RngSpec(2))

    assert len(rho) == 10
    assert np.all(rho > 0)
    assert rho.sum() == pytest.approx(1.0, abs=1e-12)


def test_dirichlet_single_point():
    np.testing.assert_array_equal(sample_dirichlet_weights(1, 2.0, RngSpec(3)), [1.0])


def test_dirichlet_two_point_marginal_is_uniform():
    rho = sample_dirichlet_weights_many(10**5, 2, 2.0, RngSpec(4))
    distance = stats.kstest(rho[:, 0], "uniform").statistic

    assert distance < 0.01
