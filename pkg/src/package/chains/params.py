import math
from enum import Enum
from typing import Optional

import numpy as np

from package import key
from package.core.errors import ConfigurationError
from package.core.rng import RngLike, as_generator, validate_beta
from package.core.types import FiniteLine, PointConfiguration
from package.opuc.verblunsky import h_to_eta


class WeightLaw(Enum):
    DIRICHLET_PERIODIC = "dirichlet"
    IID_GAMMA = "gamma"

    @staticmethod
    def from_str(value: str) -> "WeightLaw":
        for law in WeightLaw:
            if law.value == value:
                return law
        raise ConfigurationError(f"Unknown weight law {value!r}")

    @staticmethod
    def all() -> list["WeightLaw"]:
        return list(WeightLaw)


class LevelLaw(Enum):
    FIXED = "fixed"
    CAUCHY = "cauchy"

    @staticmethod
    def from_str(value: str) -> "LevelLaw":
        for law in LevelLaw:
            if law.value == value:
                return law
        raise ConfigurationError(f"Unknown level law {value!r}")

    @staticmethod
    def all() -> list["LevelLaw"]:
        return list(LevelLaw)


def level_from_alpha(alpha: float) -> float:
    """Level of the bulk limit of the corners chain at α√n: h = −α/√(4 − α²)."""
    if not -2 < alpha < 2:
        raise ConfigurationError(f"α must lie in (−2, 2), got {alpha}")
    return -alpha / math.sqrt(4 - alpha * alpha)


def boutillier_gamma(h: float) -> float:
    """γ = −h/√(1 + h²), the parameter of the β = 2 bead process at level h."""
    return -h / math.sqrt(1 + h * h)


class ChainParams:
    """
    Parameters of a chain run. The level is fixed unless `level_law` is
    Cauchy, in which case a fresh level h + scale·Cauchy is drawn every step,
    independently of the weights.
    """

    def __init__(
        self,
        beta: float,
        level_h: float = 0.0,
        weight_law: WeightLaw = WeightLaw.DIRICHLET_PERIODIC,
        steps: int = 1,
        window_halfwidth: Optional[float] = None,
        tail_density: Optional[float] = 1 / (2 * math.pi),
        level_law: LevelLaw = LevelLaw.FIXED,
        level_scale: float = 1.0,
    ):
        validate_beta(beta)
        if steps < 0:
            raise ConfigurationError(f"Steps must be nonnegative, got {steps}")
        if not np.isfinite(level_h):
            raise ConfigurationError(f"Level h must be finite, got {level_h}")
        if window_halfwidth is not None and window_halfwidth <= 0:
            raise ConfigurationError(f"Window half-width must be positive, got {window_halfwidth}")
        if level_scale <= 0:
            raise ConfigurationError(f"Level scale must be positive, got {level_scale}")

        self.beta = float(beta)
        self.level_h = float(level_h)
        self.weight_law = weight_law
        self.steps = int(steps)
        self.window_halfwidth = window_halfwidth
        self.tail_density = tail_density
        self.level_law = level_law
        self.level_scale = float(level_scale)

    @property
    def eta(self) -> complex:
        return h_to_eta(self.level_h)

    def level_sampler(self, rng: RngLike) -> float:
        if self.level_law == LevelLaw.FIXED:
            return self.level_h
        return self.level_h + self.level_scale * float(as_generator(rng).standard_cauchy())

    def to_dict(self) -> dict:
        return {
            key.BETA_KEY: self.beta,
            "level_h": self.level_h,
            "weight_law": self.weight_law.value,
            "steps": self.steps,
            "window_halfwidth": self.window_halfwidth,
            "tail_density": self.tail_density,
            "level_law": self.level_law.value,
            "level_scale": self.level_scale,
        }

    def __repr__(self) -> str:
        return f"ChainParams({self.to_dict()})"


class Rescale:
    """The bulk rescaling λ ↦ (λ − α√n)·√(n(4 − α²)) around α√n."""

    def __init__(self, alpha: float, base_n: int):
        if not -2 < alpha < 2:
            raise ConfigurationError(f"α must lie in (−2, 2), got {alpha}")
        if base_n < 1:
            raise ConfigurationError(f"Base dimension must be >= 1, got {base_n}")
        self.alpha = float(alpha)
        self.base_n = int(base_n)

    @property
    def center(self) -> float:
        return self.alpha * math.sqrt(self.base_n)

    @property
    def scale(self) -> float:
        return math.sqrt(self.base_n * (4 - self.alpha * self.alpha))

    @property
    def level(self) -> float:
        return level_from_alpha(self.alpha)

    def forward(self, points: np.ndarray) -> np.ndarray:
        return (np.asarray(points) - self.center) * self.scale

    def backward(self, points: np.ndarray) -> np.ndarray:
        return np.asarray(points) / self.scale + self.center

    def to_dict(self) -> dict:
        return {"alpha": self.alpha, "base_n": self.base_n, "level_h": self.level}

    def __repr__(self) -> str:
        return f"Rescale(alpha={self.alpha}, base_n={self.base_n})"


class CornersState:
    """
    The n + k points of the corners chain after k steps, stored in rescaled
    coordinates when a rescaling is attached.
    """

    def __init__(self, points: PointConfiguration, rescale: Optional[Rescale] = None):
        if not isinstance(points.geometry, FiniteLine):
            raise ConfigurationError("Corners states live on the finite line")
        if len(points) < 1:
            raise ConfigurationError("Corners states need at least one point")
        self.points = points
        self.rescale = rescale

    @property
    def dimension(self) -> int:
        return len(self.points)

    def rescaled(self, rescale: Rescale) -> "CornersState":
        """The same state expressed in the coordinates of `rescale`."""
        if self.rescale is not None:
            raise ConfigurationError("State is already rescaled")
        return CornersState(PointConfiguration(rescale.forward(self.points.points)), rescale)

    def unscaled(self) -> "CornersState":
        if self.rescale is None:
            return self
        return CornersState(PointConfiguration(self.rescale.backward(self.points.points)))

    def __repr__(self) -> str:
        return f"CornersState(dimension={self.dimension}, rescale={self.rescale})"


class BeadTrajectory:
    """
    Consecutive lines of a chain, with the level used at each step and the
    region in which each line is trusted.
    """

    def __init__(
        self,
        lines: list[PointConfiguration],
        params: ChainParams,
        levels: Optional[list[float]] = None,
        trusted_regions: Optional[list[tuple[float, float]]] = None,
        level_sets: Optional[list[Optional[dict]]] = None,
    ):
        self.lines = lines
        self.params = params
        self.levels = levels if levels is not None else []
        if trusted_regions is None:
            trusted_regions = [(-math.inf, math.inf)] * len(lines)
        self.trusted_regions = trusted_regions
        self.level_sets = level_sets if level_sets is not None else []

    def __len__(self) -> int:
        return len(self.lines)

    def __getitem__(self, level: int) -> PointConfiguration:
        return self.lines[level]

    @property
    def final(self) -> PointConfiguration:
        return self.lines[-1]

    def trusted_points(self, level: int) -> np.ndarray:
        low, high = self.trusted_regions[level]
        return self.lines[level].unrolled(low, high) if np.isfinite(low) else self.lines[level].points

    def __repr__(self) -> str:
        return f"BeadTrajectory(levels={len(self.lines)}, params={self.params})"
