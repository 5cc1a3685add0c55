import math
from logging import Logger
from typing import Optional

import numpy as np

from package.chains.params import ChainParams, WeightLaw
from package.chains.steps.interface import Step, StepBuilder, StepOutcome
from package.core.errors import ConfigurationError
from package.core.rng import RngLike, RngSpec, sample_gamma_weights
from package.core.types import FiniteLine, PointConfiguration, WeightedConfiguration
from package.logger import Timer
from package.stieltjes.evaluator import WindowCompensation, check_centered_window
from package.stieltjes.level_set import LevelSetResult, solve_level_set

# (4/β)·Gamma(β/2) weights have mean 2
MEAN_BEAD_WEIGHT = 2.0
SINE_DENSITY = 1 / (2 * math.pi)


class BeadStepResult:
    def __init__(self, level_set: LevelSetResult, boundary: np.ndarray):
        self.level_set = level_set
        self.roots = level_set.roots
        self.boundary = boundary
        self.residual = level_set.residual

    @property
    def interior(self) -> np.ndarray:
        return self.roots.points[~self.boundary]

    @property
    def interior_line(self) -> PointConfiguration:
        """The roots with the two outermost gaps dropped."""
        return PointConfiguration(self.interior)

    def __repr__(self) -> str:
        return f"BeadStepResult(roots={len(self.roots)}, boundary={int(self.boundary.sum())})"


def window_half_width(window: PointConfiguration, density: Optional[float] = SINE_DENSITY) -> float:
    """
    Half a mean gap beyond the outermost point of a window centered at 0.
    Off-center windows are rejected.
    """
    gap = 1 / density if density is not None else window.mean_gap()
    half_width = float(max(abs(window.points[0]), abs(window.points[-1])) + 0.5 * gap)
    check_centered_window(window.points, half_width, gap)
    return half_width


def bead_transition(
    measure: WeightedConfiguration,
    h: float,
    half_width: Optional[float] = None,
    density: Optional[float] = SINE_DENSITY,
) -> BeadStepResult:
    """
    Level set of the compensated window transform at h, with mean weight 2,
    zero tail offset and, when `density` is set, the mean-field tail of a
    stationary configuration outside [−c, c]. Roots in the two outermost gaps
    are flagged as boundary roots.
    """
    if not isinstance(measure.geometry, FiniteLine):
        raise ConfigurationError("The bead transition needs a finite window")
    if len(measure) < 2:
        raise ConfigurationError(f"Window needs at least 2 points, got {len(measure)}")
    if half_width is None:
        half_width = window_half_width(measure.config, density)
    if np.any(np.abs(measure.points) >= half_width):
        raise ConfigurationError(f"All window points must lie inside (−{half_width}, {half_width})")

    compensation = WindowCompensation(half_width, MEAN_BEAD_WEIGHT, 0.0, density)
    result = solve_level_set(measure, h, compensation=compensation)

    boundary = np.zeros(len(result.roots), dtype=bool)
    boundary[[0, -1]] = True
    return BeadStepResult(result, boundary)


def bead_step(
    window: PointConfiguration,
    h: float,
    beta: float,
    rng: RngLike,
    half_width: Optional[float] = None,
    density: Optional[float] = SINE_DENSITY,
) -> BeadStepResult:
    """One step of the windowed bead chain with fresh (4/β)·Gamma(β/2) weights."""
    if len(window) < 2:
        raise ConfigurationError(f"Window needs at least 2 points, got {len(window)}")
    weights = sample_gamma_weights(len(window), beta, rng)
    return bead_transition(WeightedConfiguration(window, weights), h, half_width, density)


class BeadStep(Step):
    """
    The windowed bead chain. Each step solves on [−c, c], where c is the
    half-width of the current trusted region, keeps the interior roots that
    fall inside the region shrunk by one mean gap per side, and hands them on.
    """

    NAME = "bead"

    def __init__(self, logger: Logger, timer: Timer, params: ChainParams):
        super().__init__(logger, timer, params)
        if params.weight_law != WeightLaw.IID_GAMMA:
            raise ConfigurationError("The bead chain uses i.i.d. gamma weights")

    @property
    def mean_gap(self) -> float:
        return 1 / self.params.tail_density if self.params.tail_density else 2 * math.pi

    def initial_region(self, line: PointConfiguration) -> tuple[float, float]:
        if self.params.window_halfwidth is not None:
            return (-self.params.window_halfwidth, self.params.window_halfwidth)
        half_width = window_half_width(line, self.params.tail_density)
        return (-half_width, half_width)

    def run(
        self,
        line: PointConfiguration,
        h: float,
        rng: RngSpec,
        trusted_region: Optional[tuple[float, float]] = None,
    ) -> StepOutcome:
        low, high = trusted_region if trusted_region is not None else self.initial_region(line)
        half_width = max(abs(low), abs(high))

        with self.timer.debug(f"Bead step with {len(line)} points on [−{half_width:.4g}, {half_width:.4g}]"):
            result = bead_step(
                line,
                h,
                self.params.beta,
                rng,
                half_width=half_width,
                density=self.params.tail_density,
            )
        self.logger.debug(f"Residual {result.residual:.2e}")

        low, high = low + self.mean_gap, high - self.mean_gap
        if low >= high:
            self.logger.warning("Trusted region collapsed, the window is too small for this many steps")
            low = high = 0.5 * (low + high)

        interior = result.interior
        kept = interior[(interior > low) & (interior < high)]
        if len(kept) < len(interior):
            self.logger.debug(f"{len(interior) - len(kept)} interior roots fall outside the trusted region")

        return StepOutcome(PointConfiguration(kept), (low, high), result.level_set.sidecar())


class BeadStepBuilder(StepBuilder):
    step = BeadStep
