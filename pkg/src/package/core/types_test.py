import numpy as np
import pytest

from package.core.errors import ConfigurationError
from package.core.types import (
    CircularConfiguration,
    FiniteLine,
    PeriodicLift,
    PointConfiguration,
    WeightedConfiguration,
    max_angular_deviation,
)


def test_origin_index():
    config = PointConfiguration([-2.0, -0.5, 0.0, 1.5])
    assert config.origin_index == 2
    assert config.points[config.origin_index - 1] < 0 <= config.points[config.origin_index]

    assert PointConfiguration([1.0, 2.0]).origin_index == 0
    assert PointConfiguration([-3.0, -1.0]).origin_index == 2


def test_rejects_unsorted_and_duplicates():
    with pytest.raises(ConfigurationError):
        PointConfiguration([1.0, 0.0])

    with pytest.raises(ConfigurationError):
        PointConfiguration([0.0, 1.0, 1.0 + 1e-14])

    with pytest.raises(ConfigurationError):
        PointConfiguration([0.0, np.nan])


def test_periodic_canonicalization():
    config = PointConfiguration([7.0, -1.0], PeriodicLift(2))

    assert config.period == pytest.approx(4 * np.pi)
    assert np.all(config.points >= 0)
    assert np.all(config.points < 4 * np.pi)
    np.testing.assert_allclose(config.points, [7.0, 4 * np.pi - 1.0])


def test_periodic_wrap_gap_counts_as_duplicate():
    with pytest.raises(ConfigurationError):
        PointConfiguration([0.0, 4 * np.pi - 1e-15], PeriodicLift(2))

    with pytest.raises(ConfigurationError):
        PointConfiguration([0.0, 1.0, 2.0], PeriodicLift(2))


def test_periodic_gaps_sum_to_period():
    config = PointConfiguration([0.3, 6.0, 15.0], PeriodicLift(3))
    assert config.gaps().sum() == pytest.approx(6 * np.pi)


def test_unrolled_periodic_includes_translates():
    config = PointConfiguration([np.pi], PeriodicLift(1))
    unrolled = config.unrolled(-10.0, 10.0)

    np.testing.assert_allclose(unrolled, [-3 * np.pi, -np.pi, np.pi, 3 * np.pi])
    assert config.count_in(0.0, 2 * np.pi) == 1


def test_weighted_configuration_validation():
    config = PointConfiguration([0.0, 1.0])

    with pytest.raises(ConfigurationError):
        WeightedConfiguration(config, [1.0])

    with pytest.raises(ConfigurationError):
        WeightedConfiguration(config, [1.0, 0.0])

    periodic = PointConfiguration([0.0, 2.0], PeriodicLift(2))
    WeightedConfiguration(periodic, [1.5, 2.5], normalized=True)
    with pytest.raises(ConfigurationError):
        WeightedConfiguration(periodic, [1.0, 1.0], normalized=True)


def test_from_points_keeps_weights_attached():
    measure = WeightedConfiguration.from_points([3.0, -1.0, 0.5], [3.0, 1.0, 2.0])

    np.testing.assert_array_equal(measure.points, [-1.0, 0.5, 3.0])
    np.testing.assert_array_equal(measure.weights, [1.0, 2.0, 3.0])
    assert measure.geometry == FiniteLine()


def test_rho_for_periodic_measure(uniform_periodic_measure: WeightedConfiguration):
    assert uniform_periodic_measure.rho.sum() == pytest.approx(1.0)


def test_circular_configuration_sorts_weights_with_angles():
    circle = CircularConfiguration([5.0, 1.0, -0.5], [0.2, 0.3, 0.5])

    np.testing.assert_allclose(circle.angles, [1.0, 5.0, 2 * np.pi - 0.5])
    assert circle.weights is not None
    np.testing.assert_allclose(circle.weights, [0.3, 0.2, 0.5])


def test_circular_configuration_rejects_bad_weights():
    with pytest.raises(ConfigurationError):
        CircularConfiguration([0.0, 1.0], [0.5, 0.6])


def test_circle_weight_sum_tolerance_does_not_grow_with_size():
    n = 1000
    rho = np.full(n, 1 / n)
    rho[0] += 1e-11
    angles = 2 * np.pi * np.arange(n) / n

    with pytest.raises(ConfigurationError):
        CircularConfiguration(angles, rho)

    rho[0] -= 1e-11
    assert CircularConfiguration(angles, rho).weights is not None


def test_types_are_immutable():
    config = PointConfiguration([0.0, 1.0])
    with pytest.raises(ValueError):
        config.points[0] = 5.0


def test_max_angular_deviation_handles_wrap():
    a = CircularConfiguration([0.01, np.pi])
    b = CircularConfiguration([2 * np.pi - 0.01, np.pi + 0.01])

    assert max_angular_deviation(a, b) == pytest.approx(0.02)
