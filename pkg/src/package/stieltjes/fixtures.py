import numpy as np
import pytest

from package.core.types import PeriodicLift, PointConfiguration, WeightedConfiguration


@pytest.fixture
def antipodal_measure() -> WeightedConfiguration:
    return WeightedConfiguration(PointConfiguration([0.0], PeriodicLift(1)), [2.0], normalized=True)


@pytest.fixture
def symmetric_pair_measure() -> WeightedConfiguration:
    return WeightedConfiguration(
        PointConfiguration([0.0, 2 * np.pi], PeriodicLift(2)), [2.0, 2.0], normalized=True
    )


def random_periodic_measure(n: int, generator: np.random.Generator) -> WeightedConfiguration:
    period = 2 * np.pi * n
    points = np.sort(generator.uniform(0, period, n))
    weights = 2 * n * generator.dirichlet(np.ones(n))
    return WeightedConfiguration(PointConfiguration(points, PeriodicLift(n)), weights, normalized=True)
