import numpy as np
import pytest
from scipy import special, stats

from package.core.errors import ConfigurationError
from package.core.rng import RngSpec
from package.ensembles.gaussian import sample_gbe, sample_gbe_many
from package.ensembles.spec import GbeMethod
from package.stats.ks import ks_two_sample


@pytest.mark.parametrize("method", GbeMethod.all())
def test_single_point_variance(method: GbeMethod):
    beta = 4.0
    points = sample_gbe_many(8000, 1, beta, method, RngSpec(1))

    assert points.shape == (8000, 1)
    assert np.var(points) == pytest.approx(2 / beta, rel=0.05)


@pytest.mark.parametrize("method", GbeMethod.all())
def test_two_point_largest_eigenvalue(method: GbeMethod):
    # the gap d of GβE(2) has density ∝ d^β exp(−βd²/8)
    beta = 2.0
    expected = 0.5 * np.sqrt(8 / beta) * special.gamma((beta + 2) / 2) / special.gamma((beta + 1) / 2)

    points = sample_gbe_many(4000, 2, beta, method, RngSpec(2))

    assert np.all(np.diff(points, axis=1) > 0)
    assert np.mean(points[:, 1]) == pytest.approx(expected, abs=0.08)


def test_sample_is_sorted_configuration():
    sample = sample_gbe(7, 1.0, GbeMethod.CORNERS_BOOTSTRAP, RngSpec(3))

    assert len(sample) == 7
    assert np.all(np.diff(sample.points) > 0)


def test_rejects_empty_ensemble():
    with pytest.raises(ConfigurationError):
        sample_gbe(0, 2.0, GbeMethod.TRIDIAGONAL_ORACLE, RngSpec(1))


@pytest.mark.slow
def test_corners_bootstrap_matches_tridiagonal_model():
    n, beta = 6, 1.5
    corners = sample_gbe_many(3000, n, beta, GbeMethod.CORNERS_BOOTSTRAP, RngSpec(4))
    tridiagonal = sample_gbe_many(3000, n, beta, GbeMethod.TRIDIAGONAL_ORACLE, RngSpec(5))

    for column in [0, n // 2, n - 1]:
        assert stats.ks_2samp(corners[:, column], tridiagonal[:, column]).pvalue > 1e-3


@pytest.mark.slow
@pytest.mark.parametrize("method", GbeMethod.all())
def test_largest_and_negated_smallest_share_a_law(method: GbeMethod):
    n, beta = 5, 1.0
    first = sample_gbe_many(4000, n, beta, method, RngSpec(6))
    second = sample_gbe_many(4000, n, beta, method, RngSpec(7))

    assert ks_two_sample(first[:, -1], -second[:, 0]).p_value > 1e-3
    assert ks_two_sample(first[:, 1], -second[:, n - 2]).p_value > 1e-3
