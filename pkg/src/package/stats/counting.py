import math
from enum import Enum
from typing import Optional, Sequence

import numpy as np
import pandas as pd
from scipy import integrate

from package import key
from package.core.errors import ConfigurationError
from package.core.types import PointConfiguration


class CountingReference(Enum):
    LINEAR_2PI = "linear"
    SEMICIRCLE = "semicircle"

    @staticmethod
    def from_str(value: str) -> "CountingReference":
        for reference in CountingReference:
            if reference.value == value:
                return reference
        raise ConfigurationError(f"Unknown counting reference {value!r}")


def semicircle_count(n: int, low: float, high: float) -> float:
    """N_sc(low, high) = (n/2π) ∫_{low/√n}^{high/√n} √((4 − x²)_+) dx."""
    if n < 1:
        raise ConfigurationError(f"n must be >= 1, got {n}")
    if not low < high:
        raise ConfigurationError(f"Invalid interval [{low}, {high}]")

    a = max(low / math.sqrt(n), -2.0)
    b = min(high / math.sqrt(n), 2.0)
    if a >= b:
        return 0.0
    value, _ = integrate.quad(lambda x: math.sqrt(max(4 - x * x, 0.0)), a, b, epsabs=1e-13, epsrel=1e-13)
    return n / (2 * math.pi) * value


class CountingStat:
    """Counts of points in [low, high] across replicas, centered by a reference mean."""

    def __init__(self, low: float, high: float, counts: np.ndarray, reference: float):
        counts = np.asarray(counts)
        if np.any(counts < 0):
            raise ConfigurationError("Counts must be nonnegative")
        self.low = low
        self.high = high
        self.counts = counts.astype(int)
        self.reference = float(reference)

    @property
    def centered(self) -> np.ndarray:
        return self.counts - self.reference

    def __len__(self) -> int:
        return len(self.counts)

    def __repr__(self) -> str:
        return f"CountingStat(interval=[{self.low}, {self.high}], replicas={len(self)}, reference={self.reference})"


def reference_count(
    low: float, high: float, reference: CountingReference, n: Optional[int] = None
) -> float:
    if reference == CountingReference.LINEAR_2PI:
        return (high - low) / (2 * math.pi)
    if n is None:
        raise ConfigurationError("The semicircle reference needs n")
    if high <= low:
        return 0.0
    return semicircle_count(n, low, high)


def counting_stat(
    samples: Sequence[PointConfiguration],
    low: float,
    high: float,
    reference: CountingReference = CountingReference.LINEAR_2PI,
    n: Optional[int] = None,
) -> CountingStat:
    counts = np.array([sample.count_in(low, high) for sample in samples])
    return CountingStat(low, high, counts, reference_count(low, high, reference, n))


def jackknife_error(values: np.ndarray) -> float:
    """Jackknife standard error of the mean of `values`."""
    r = len(values)
    if r < 2:
        return math.inf
    leave_one_out = (values.sum() - values) / (r - 1)
    return float(np.sqrt((r - 1) / r * np.sum((leave_one_out - leave_one_out.mean()) ** 2)))


class VarianceProfile:
    def __init__(self, xs: np.ndarray, variances: np.ndarray, errors: np.ndarray, replicas: int):
        self.xs = xs
        self.variances = variances
        self.errors = errors
        self.replicas = replicas

    def to_list(self) -> list[tuple[float, float]]:
        return [(float(x), float(v)) for x, v in zip(self.xs, self.variances)]

    def to_df(self) -> pd.DataFrame:
        return pd.DataFrame({"x": self.xs, "variance": self.variances, "error": self.errors})


def counting_variance_profile(
    samples: Sequence[PointConfiguration],
    xs: Sequence[float],
    reference: CountingReference = CountingReference.LINEAR_2PI,
    n: Optional[int] = None,
    start: float = 0.0,
) -> VarianceProfile:
    """
    Empirical E[(Card(L ∩ [start, start + x]) − reference)²] for every x, with
    jackknife error bars.
    """
    if len(samples) < key.MIN_VARIANCE_REPLICAS:
        raise ConfigurationError(
            f"Need at least {key.MIN_VARIANCE_REPLICAS} replicas, got {len(samples)}"
        )
    xs = np.asarray(xs, dtype=float)
    variances = np.zeros(len(xs))
    errors = np.zeros(len(xs))
    for i, x in enumerate(xs):
        if x <= 0:
            continue
        squares = counting_stat(samples, start, start + x, reference, n).centered ** 2
        variances[i] = squares.mean()
        errors[i] = jackknife_error(squares)
    return VarianceProfile(xs, variances, errors, len(samples))


class LogFit:
    """Weighted least-squares fit variance ≈ a + b·log x."""

    def __init__(self, a: float, b: float, xs: np.ndarray, variances: np.ndarray):
        self.a = a
        self.b = b
        self.xs = xs
        self.variances = variances

    def predict(self, xs) -> np.ndarray:
        return self.a + self.b * np.log(np.asarray(xs, dtype=float))

    def max_ratio(self) -> float:
        """Largest ratio of a data point to the fitted curve."""
        return float(np.max(self.variances / self.predict(self.xs)))

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "max_ratio": self.max_ratio()}

    def __repr__(self) -> str:
        return f"LogFit(a={self.a:.4f}, b={self.b:.4f})"


def fit_log_growth(profile: VarianceProfile) -> LogFit:
    mask = profile.xs > 0
    if mask.sum() < 2:
        raise ConfigurationError("Fitting log growth needs at least two positive x values")
    xs, variances = profile.xs[mask], profile.variances[mask]
    errors = np.maximum(profile.errors[mask], 1e-12)
    b, a = np.polyfit(np.log(xs), variances, 1, w=1 / errors)
    return LogFit(float(a), float(b), xs, variances)


def log_bound_constant(profile: VarianceProfile, scale: float = 1.0, cap: float = math.inf) -> float:
    """The smallest C with variance(x) ≤ C·log(2 + min(scale·x, cap)) on the profile."""
    return float(np.max(profile.variances / np.log(2 + np.minimum(scale * profile.xs, cap))))


def max_discrepancy(line: PointConfiguration, x_max: float, exponent: float, density: float = 1 / (2 * math.pi)) -> float:
    """
    max over 0 < x ≤ x_max of |Card(L ∩ [0, x]) − d·x| / (1 + x)^exponent.
    The supremum is attained at a point of L, from the left or the right, or
    at x_max.
    """
    if x_max <= 0:
        raise ConfigurationError(f"x_max must be positive, got {x_max}")
    points = line.unrolled(0.0, x_max)
    points = points[points > 0]
    at_zero = line.count_in(0.0, 0.0)

    counts = at_zero + np.arange(1, len(points) + 1)
    scale = (1 + points) ** exponent
    right = np.abs(counts - density * points) / scale
    left = np.abs(counts - 1 - density * points) / scale
    end = abs(at_zero + len(points) - density * x_max) / (1 + x_max) ** exponent

    return float(max(np.max(right, initial=0.0), np.max(left, initial=0.0), end))
