import numpy as np

from package.core.lift import lift_circle_to_line
from package.core.rng import RngLike, as_generator, validate_beta
from package.core.errors import ConfigurationError
from package.core.types import TWO_PI, CircularConfiguration, FiniteLine, PointConfiguration
from package.ensembles.spec import EnsembleKind, EnsembleSpec
from package.opuc.oracle import verblunsky_to_support
from package.opuc.verblunsky import VerblunskySequence

LARGEST_BELOW_ONE = np.nextafter(1.0, 0.0)


def _validate(n: int, beta: float):
    validate_beta(beta)
    if n < 1:
        raise ConfigurationError(f"Ensemble size must be >= 1, got {n}")


def sample_cbe_verblunsky_many(replicas: int, n: int, beta: float, rng: RngLike) -> np.ndarray:
    """
    Independent coefficients with |α_j|² ~ Beta(1, β(n − j − 1)/2) and uniform
    phases for j ≤ n − 2; the last coefficient is uniform on the circle.
    Returns an array of shape (replicas, n).
    """
    _validate(n, beta)
    gen = as_generator(rng)
    shapes = beta * (n - 1 - np.arange(n - 1)) / 2
    r2 = np.minimum(gen.beta(1.0, shapes, size=(replicas, n - 1)), LARGEST_BELOW_ONE)
    phases = gen.uniform(0, TWO_PI, size=(replicas, n))

    alphas = np.empty((replicas, n), dtype=complex)
    alphas[:, :-1] = np.sqrt(r2) * np.exp(1j * phases[:, :-1])
    alphas[:, -1] = np.exp(1j * phases[:, -1])
    return alphas


def sample_cbe_verblunsky(n: int, beta: float, rng: RngLike) -> VerblunskySequence:
    return VerblunskySequence(sample_cbe_verblunsky_many(1, n, beta, rng)[0])


def sample_cbe(n: int, beta: float, rng: RngLike) -> CircularConfiguration:
    """A circular β ensemble sample, as the support of its Verblunsky sequence."""
    return verblunsky_to_support(sample_cbe_verblunsky(n, beta, rng))


def sample_cbe_many(replicas: int, n: int, beta: float, rng: RngLike) -> np.ndarray:
    """Sorted angles of `replicas` independent samples, shape (replicas, n)."""
    alphas = sample_cbe_verblunsky_many(replicas, n, beta, rng)
    return np.stack([verblunsky_to_support(VerblunskySequence(row)).angles for row in alphas])


def sample_sine_beta_window(spec: EnsembleSpec, rng: RngLike) -> PointConfiguration:
    """
    A Sine_β approximation on [−w, w]: a circular β ensemble of size approx_n
    lifted to the line, shifted by a uniform amount and cut to the window.
    Its mean density is 1/2π.
    """
    if spec.kind != EnsembleKind.SINE_BETA_WINDOW:
        raise ConfigurationError(f"Expected a Sine_β window, got {spec.kind.value}")
    assert spec.approx_n is not None and spec.window_halfwidth is not None

    gen = as_generator(rng)
    circle = sample_cbe(spec.approx_n, spec.beta, gen)
    line = lift_circle_to_line(circle, spec.approx_n)
    assert line.period is not None
    shifted = line.translate(gen.uniform(0, line.period))

    w = spec.window_halfwidth
    return PointConfiguration(shifted.unrolled(-w, w), FiniteLine())
