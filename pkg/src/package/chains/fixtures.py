import numpy as np
import pytest

from package.chains.params import ChainParams, WeightLaw
from package.core.types import PeriodicLift, PointConfiguration


@pytest.fixture
def periodic_line() -> PointConfiguration:
    generator = np.random.default_rng(404)
    n = 4
    return PointConfiguration(np.sort(generator.uniform(0, 2 * np.pi * n, n)), PeriodicLift(n))


@pytest.fixture
def bead_params() -> ChainParams:
    return ChainParams(beta=2.0, weight_law=WeightLaw.IID_GAMMA, steps=3)


def jittered_lattice(copies: int, jitter: np.ndarray) -> np.ndarray:
    """
    The points 2π(k + 1/2), −copies ≤ k < copies, with the central
    len(jitter) points moved by `jitter`.
    """
    points = 2 * np.pi * (np.arange(-copies, copies) + 0.5)
    center = copies - len(jitter) // 2
    points[center : center + len(jitter)] += jitter
    return points
