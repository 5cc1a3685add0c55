from __future__ import annotations

from typing import Optional

import numpy as np
from typing_extensions import Self

from package import key
from package.core.errors import ConfigurationError

TWO_PI = 2 * np.pi


class FiniteLine:
    """A finite set of points on the real line."""

    is_periodic = False
    period: Optional[float] = None

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteLine)

    def __hash__(self) -> int:
        return hash("FiniteLine")

    def __repr__(self) -> str:
        return "FiniteLine()"


class PeriodicLift:
    """
    A 2πn-periodic set of points on the real line, stored as its n
    representatives in [0, 2πn).
    """

    is_periodic = True

    def __init__(self, n: int):
        if n < 1:
            raise ConfigurationError(f"Periodic lift needs n >= 1, got {n}")
        self.n = int(n)
        self.period = TWO_PI * self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, PeriodicLift) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("PeriodicLift", self.n))

    def __repr__(self) -> str:
        return f"PeriodicLift(n={self.n})"


Geometry = FiniteLine | PeriodicLift


def _frozen(values) -> np.ndarray:
    array = np.array(values, dtype=float).reshape(-1)
    array.setflags(write=False)
    return array


def mean_gap(points: np.ndarray, period: Optional[float] = None) -> float:
    if period is not None:
        return period / max(len(points), 1)
    if len(points) < 2:
        return 1.0
    return float(points[-1] - points[0]) / (len(points) - 1)


def check_distinct(points: np.ndarray, period: Optional[float] = None):
    """
    Raises if two consecutive points are closer than the duplicate tolerance,
    measured relative to the mean gap. The wrap-around gap counts for
    periodic configurations.
    """
    if len(points) < 2:
        return
    gaps = np.diff(points)
    if period is not None:
        gaps = np.append(gaps, points[0] + period - points[-1])
    threshold = key.DUPLICATE_TOLERANCE * mean_gap(points, period)
    if np.any(gaps <= threshold):
        idx = int(np.argmin(gaps))
        raise ConfigurationError(
            f"Points must be strictly increasing and distinct, gap {gaps[idx]:.3e} at index {idx}"
        )


class PointConfiguration:
    """
    Sorted point locations on a line segment or on the lift of a circle.

    Points are canonicalized at construction: periodic representatives are
    reduced to [0, 2πn) and sorted. Unsorted finite input is rejected.
    """

    def __init__(self, points, geometry: Optional[Geometry] = None):
        self.geometry: Geometry = geometry if geometry is not None else FiniteLine()
        values = np.array(points, dtype=float).reshape(-1)

        if not np.all(np.isfinite(values)):
            raise ConfigurationError("Point positions must be finite")

        if self.geometry.is_periodic:
            assert isinstance(self.geometry, PeriodicLift)
            if len(values) != self.geometry.n:
                raise ConfigurationError(
                    f"Periodic lift with n={self.geometry.n} needs exactly {self.geometry.n} representatives, got {len(values)}"
                )
            values = np.sort(np.mod(values, self.geometry.period))
            # mod can return the period itself for tiny negative input
            values[values >= self.geometry.period] = 0.0
            values = np.sort(values)

        check_distinct(values, self.geometry.period)
        self._points = _frozen(values)

    @property
    def points(self) -> np.ndarray:
        return self._points

    @property
    def origin_index(self) -> int:
        """Index of the first nonnegative point, so that λ_{i-1} < 0 <= λ_i."""
        return int(np.searchsorted(self._points, 0.0, side="left"))

    @property
    def is_periodic(self) -> bool:
        return self.geometry.is_periodic

    @property
    def period(self) -> Optional[float]:
        return self.geometry.period

    def __len__(self) -> int:
        return len(self._points)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PointConfiguration)
            and self.geometry == other.geometry
            and np.array_equal(self._points, other._points)
        )

    def __repr__(self) -> str:
        return f"PointConfiguration(points={self._points.tolist()}, geometry={self.geometry})"

    def mean_gap(self) -> float:
        return mean_gap(self._points, self.period)

    def gaps(self) -> np.ndarray:
        """Consecutive gaps, including the wrap-around gap for periodic lifts."""
        gaps = np.diff(self._points)
        if self.is_periodic:
            assert self.period is not None
            gaps = np.append(gaps, self._points[0] + self.period - self._points[-1])
        return gaps

    def translate(self, shift: float) -> Self:
        return self.__class__(self._points + shift, self.geometry)

    def unrolled(self, low: float, high: float) -> np.ndarray:
        """
        All points of the full configuration inside [low, high]. For periodic
        lifts this includes every translate by multiples of the period.
        """
        if not self.is_periodic:
            mask = (self._points >= low) & (self._points <= high)
            return self._points[mask]

        assert self.period is not None
        first = int(np.floor(low / self.period)) - 1
        last = int(np.ceil(high / self.period)) + 1
        copies = np.arange(first, last + 1)
        full = (self._points[None, :] + copies[:, None] * self.period).reshape(-1)
        return full[(full >= low) & (full <= high)]

    def count_in(self, low: float, high: float) -> int:
        return len(self.unrolled(low, high))

    def window(self, low: float, high: float) -> PointConfiguration:
        return PointConfiguration(self.unrolled(low, high), FiniteLine())


class WeightedConfiguration:
    """
    A point configuration paired with strictly positive weights γ_j, i.e. the
    measure Λ = Σ γ_j δ_{λ_j}.
    """

    def __init__(
        self,
        config: PointConfiguration,
        weights,
        normalized: bool = False,
    ):
        self.config = config
        w = np.array(weights, dtype=float).reshape(-1)

        if len(w) != len(config):
            raise ConfigurationError(
                f"Got {len(w)} weights for {len(config)} points"
            )
        if not np.all(np.isfinite(w)) or np.any(w <= 0):
            raise ConfigurationError("Weights must be finite and strictly positive")

        self.normalized = normalized
        if normalized and config.is_periodic:
            assert isinstance(config.geometry, PeriodicLift)
            total = 2 * config.geometry.n
            if abs(w.sum() - total) > key.NORMALIZATION_TOLERANCE * total:
                raise ConfigurationError(
                    f"Normalized periodic weights must sum to {total}, got {w.sum()}"
                )

        self._weights = _frozen(w)

    @classmethod
    def from_points(cls, points, weights, geometry: Optional[Geometry] = None, normalized: bool = False):
        """
        Builds a weighted configuration from possibly unsorted points, keeping
        each weight attached to its point through canonicalization.
        """
        values = np.array(points, dtype=float).reshape(-1)
        w = np.array(weights, dtype=float).reshape(-1)
        if len(w) != len(values):
            raise ConfigurationError(f"Got {len(w)} weights for {len(values)} points")
        if geometry is not None and geometry.is_periodic:
            assert geometry.period is not None
            values = np.mod(values, geometry.period)
        order = np.argsort(values, kind="stable")
        return cls(PointConfiguration(values[order], geometry), w[order], normalized)

    @property
    def points(self) -> np.ndarray:
        return self.config.points

    @property
    def weights(self) -> np.ndarray:
        return self._weights

    @property
    def geometry(self) -> Geometry:
        return self.config.geometry

    @property
    def rho(self) -> np.ndarray:
        """ρ_j = γ_j / 2n, a probability vector for normalized periodic weights."""
        if not self.config.is_periodic:
            raise ConfigurationError("ρ is only defined for periodic configurations")
        assert isinstance(self.geometry, PeriodicLift)
        return self._weights / (2 * self.geometry.n)

    def __len__(self) -> int:
        return len(self.config)

    def __repr__(self) -> str:
        return f"WeightedConfiguration(points={self.points.tolist()}, weights={self._weights.tolist()}, geometry={self.geometry})"

    def translate(self, shift: float) -> WeightedConfiguration:
        return WeightedConfiguration.from_points(
            self.points + shift, self._weights, self.geometry, self.normalized
        )


class CircularConfiguration:
    """
    n points u_j = e^{iθ_j} on the unit circle, angles stored in [0, 2π),
    optionally carrying a probability vector ρ_j (the measure σ = Σ ρ_j δ_{u_j}).
    """

    def __init__(self, angles, weights=None):
        theta = np.mod(np.array(angles, dtype=float).reshape(-1), TWO_PI)
        theta[theta >= TWO_PI] = 0.0
        order = np.argsort(theta, kind="stable")
        theta = theta[order]
        check_distinct(theta, TWO_PI)
        self._angles = _frozen(theta)

        self._weights: Optional[np.ndarray] = None
        if weights is not None:
            rho = np.array(weights, dtype=float).reshape(-1)
            if len(rho) != len(theta):
                raise ConfigurationError(f"Got {len(rho)} weights for {len(theta)} angles")
            if np.any(rho <= 0):
                raise ConfigurationError("Circle weights must be strictly positive")
            if abs(rho.sum() - 1.0) > key.PROBABILITY_TOLERANCE:
                raise ConfigurationError(f"Circle weights must sum to 1, got {rho.sum()!r}")
            self._weights = _frozen(rho[order])

    @property
    def angles(self) -> np.ndarray:
        return self._angles

    @property
    def weights(self) -> Optional[np.ndarray]:
        return self._weights

    @property
    def unit_points(self) -> np.ndarray:
        return np.exp(1j * self._angles)

    def __len__(self) -> int:
        return len(self._angles)

    def __repr__(self) -> str:
        weights = None if self._weights is None else self._weights.tolist()
        return f"CircularConfiguration(angles={self._angles.tolist()}, weights={weights})"

    def rotate(self, phi: float) -> CircularConfiguration:
        return CircularConfiguration(self._angles + phi, self._weights)


def circular_distance(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise angular distance on the circle."""
    diff = np.mod(np.asarray(a) - np.asarray(b), TWO_PI)
    return np.minimum(diff, TWO_PI - diff)


def max_angular_deviation(a: CircularConfiguration, b: CircularConfiguration) -> float:
    """
    Largest angular distance between matched points of two configurations of
    the same size, matching sorted angles up to a cyclic relabeling.
    """
    if len(a) != len(b):
        raise ConfigurationError(f"Cannot compare {len(a)} with {len(b)} points")
    best = np.inf
    for shift in range(len(a)):
        dev = float(np.max(circular_distance(a.angles, np.roll(b.angles, shift))))
        best = min(best, dev)
    return best
