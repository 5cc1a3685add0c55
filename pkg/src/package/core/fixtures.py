import numpy as np
import pytest

from package.core.rng import RngSpec
from package.core.types import (
    CircularConfiguration,
    PeriodicLift,
    PointConfiguration,
    WeightedConfiguration,
)


@pytest.fixture
def rng_spec() -> RngSpec:
    return RngSpec(seed=20240607, stream=0)


@pytest.fixture
def generator(rng_spec: RngSpec) -> np.random.Generator:
    return rng_spec.generator()


@pytest.fixture
def uniform_periodic_measure() -> WeightedConfiguration:
    """n=8 equally spaced points of the 16π-periodic lattice, all weights 2."""
    n = 8
    points = 2 * np.pi * np.arange(n) + 0.5
    return WeightedConfiguration(
        PointConfiguration(points, PeriodicLift(n)), np.full(n, 2.0), normalized=True
    )


@pytest.fixture
def two_point_circle() -> CircularConfiguration:
    return CircularConfiguration([0.0, np.pi], [0.5, 0.5])


def random_circle_measure(n: int, generator: np.random.Generator) -> CircularConfiguration:
    angles = np.sort(generator.uniform(0, 2 * np.pi, n))
    rho = generator.dirichlet(np.ones(n))
    return CircularConfiguration(angles, rho)


def random_finite_measure(n: int, generator: np.random.Generator, scale: float = 10.0) -> WeightedConfiguration:
    points = np.sort(generator.uniform(-scale, scale, n))
    weights = generator.exponential(1.0, n) + 0.1
    return WeightedConfiguration(PointConfiguration(points), weights)
