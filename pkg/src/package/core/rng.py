import numpy as np
from typing_extensions import Self

from package import key
from package.core.errors import ConfigurationError

MAX_UINT64 = 2**64 - 1


class RngSpec:
    """
    A reproducible random stream: the Philox counter-based generator keyed by
    (seed, stream). Replicas of a run derive their own streams with `spawn`,
    so results do not depend on how replicas are scheduled.
    """

    algorithm_id = key.RNG_ALGORITHM_ID

    def __init__(self, seed: int, stream: int = 0, path: tuple[int, ...] = ()):
        if not 0 <= seed <= MAX_UINT64:
            raise ConfigurationError(f"Seed must be a 64-bit unsigned integer, got {seed}")
        if not 0 <= stream <= MAX_UINT64:
            raise ConfigurationError(f"Stream must be a 64-bit unsigned integer, got {stream}")
        self.seed = int(seed)
        self.stream = int(stream)
        self.path = tuple(int(p) for p in path)

    def spawn(self, index: int) -> Self:
        """The child stream for replica or step `index`."""
        return self.__class__(self.seed, self.stream, self.path + (int(index),))

    def generator(self) -> np.random.Generator:
        sequence = np.random.SeedSequence(self.seed, spawn_key=(self.stream, *self.path))
        return np.random.Generator(np.random.Philox(sequence))

    def __str__(self) -> str:
        base = f"{self.algorithm_id}:{self.seed}:{self.stream}"
        if self.path:
            return base + "/" + "/".join(str(p) for p in self.path)
        return base

    def __repr__(self) -> str:
        return f"RngSpec({self})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RngSpec)
            and self.seed == other.seed
            and self.stream == other.stream
            and self.path == other.path
        )

    def __hash__(self) -> int:
        return hash((self.seed, self.stream, self.path))

    @staticmethod
    def from_str(value: str) -> "RngSpec":
        head, *rest = value.split("/")
        parts = head.split(":")
        if len(parts) != 3 or parts[0] != key.RNG_ALGORITHM_ID:
            raise ConfigurationError(f"Expected '{key.RNG_ALGORITHM_ID}:seed:stream', got {value!r}")
        return RngSpec(int(parts[1]), int(parts[2]), tuple(int(p) for p in rest))


RngLike = RngSpec | np.random.Generator


def as_generator(rng: RngLike) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    return rng.generator()


def validate_beta(beta: float):
    if not np.isfinite(beta) or beta <= 0:
        raise ConfigurationError(f"β must be a positive real, got {beta}")


def standard_gamma(shape: float, size, rng: RngLike) -> np.ndarray:
    """
    Gamma(shape, 1) draws. Shapes below one are boosted: a Gamma(shape + 1)
    draw times U^{1/shape} has the Gamma(shape) law.
    """
    gen = as_generator(rng)
    if shape >= 1:
        return gen.standard_gamma(shape, size=size)
    boosted = gen.standard_gamma(shape + 1, size=size)
    u = gen.random(size=size)
    # log-space keeps very small shapes from underflowing to an exact zero
    out = np.exp(np.log(boosted) + np.log1p(-u) / shape)
    return np.maximum(out, np.finfo(float).tiny)


def sample_gamma_weights(count: int, beta: float, rng: RngLike) -> np.ndarray:
    """I.i.d. draws of (4/β)·Gamma(β/2), each with mean 2."""
    validate_beta(beta)
    if count < 0:
        raise ConfigurationError(f"Count must be nonnegative, got {count}")
    return (4 / beta) * standard_gamma(beta / 2, count, rng)


def sample_dirichlet_weights(n: int, beta: float, rng: RngLike) -> np.ndarray:
    """A Dirichlet(β/2, …, β/2) probability vector of length n."""
    return sample_dirichlet_weights_many(1, n, beta, rng)[0]


def sample_dirichlet_weights_many(replicas: int, n: int, beta: float, rng: RngLike) -> np.ndarray:
    validate_beta(beta)
    if n < 1:
        raise ConfigurationError(f"Dirichlet dimension must be >= 1, got {n}")
    if n == 1:
        return np.ones((replicas, 1))
    g = standard_gamma(beta / 2, (replicas, n), rng)
    return g / g.sum(axis=1, keepdims=True)
