import numpy as np
from scipy import linalg

from package.chains.steps.corners import corners_step_batch
from package.core.errors import ConfigurationError
from package.core.rng import RngLike, as_generator, validate_beta
from package.core.types import PointConfiguration
from package.ensembles.spec import GbeMethod


def _validate(n: int, beta: float):
    validate_beta(beta)
    if n < 1:
        raise ConfigurationError(f"Ensemble size must be >= 1, got {n}")


def tridiagonal_gbe(n: int, beta: float, gen: np.random.Generator) -> np.ndarray:
    """
    Eigenvalues of the symmetric tridiagonal model with diagonal √(2/β)·N(0, 1)
    and off-diagonal χ_{β(n−k)}/√β, k = 1..n−1, whose joint eigenvalue density
    is ∝ exp(−β Σ λ²/4) Π |λ_j − λ_k|^β.
    """
    diagonal = np.sqrt(2 / beta) * gen.standard_normal(n)
    degrees = beta * np.arange(n - 1, 0, -1)
    off_diagonal = np.sqrt(gen.chisquare(degrees) / beta) if n > 1 else np.zeros(0)
    return linalg.eigvalsh_tridiagonal(diagonal, off_diagonal)


def sample_gbe_many(
    replicas: int,
    n: int,
    beta: float,
    method: GbeMethod,
    rng: RngLike,
) -> np.ndarray:
    """Sorted eigenvalues of `replicas` independent GβE(n) samples, shape (replicas, n)."""
    _validate(n, beta)
    gen = as_generator(rng)

    if method == GbeMethod.TRIDIAGONAL_ORACLE:
        return np.stack([tridiagonal_gbe(n, beta, gen) for _ in range(replicas)])

    points = np.sqrt(2 / beta) * gen.standard_normal((replicas, 1))
    for _ in range(n - 1):
        points = corners_step_batch(points, beta, gen)
    return points


def sample_gbe(n: int, beta: float, method: GbeMethod, rng: RngLike) -> PointConfiguration:
    return PointConfiguration(sample_gbe_many(1, n, beta, method, rng)[0])
