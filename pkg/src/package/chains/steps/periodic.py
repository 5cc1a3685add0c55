from logging import Logger
from typing import Optional

import numpy as np

from package.chains.params import ChainParams, WeightLaw
from package.chains.steps.interface import Step, StepBuilder, StepOutcome
from package.core.errors import ConfigurationError
from package.core.rng import RngLike, RngSpec, as_generator, sample_dirichlet_weights_many
from package.core.types import PeriodicLift, PointConfiguration, WeightedConfiguration
from package.logger import Timer
from package.stieltjes.level_set import LevelSetResult, solve_level_set, solve_level_set_batch


def periodic_transition(measure: WeightedConfiguration, h: float) -> PointConfiguration:
    """The level set S_Λ⁻¹(h) of a periodic measure: n new representatives."""
    if not isinstance(measure.geometry, PeriodicLift):
        raise ConfigurationError("The periodic transition needs a periodic measure")
    return solve_level_set(measure, h).roots


def fresh_periodic_weights(n: int, beta: float, rng: RngLike) -> np.ndarray:
    """γ_j = 2n·ρ_j with ρ ~ Dirichlet(β/2, …, β/2)."""
    return 2 * n * sample_dirichlet_weights_many(1, n, beta, rng)[0]


def periodic_level_set(line: PointConfiguration, h: float, beta: float, rng: RngLike) -> LevelSetResult:
    if not isinstance(line.geometry, PeriodicLift):
        raise ConfigurationError("The periodic chain needs a periodic line")
    n = line.geometry.n
    measure = WeightedConfiguration(line, fresh_periodic_weights(n, beta, rng), normalized=True)
    return solve_level_set(measure, h)


def periodic_step(line: PointConfiguration, h: float, beta: float, rng: RngLike) -> PointConfiguration:
    """
    One step of the periodic chain: fresh 2n·Dirichlet(β/2) weights on the
    current line, then the level set at h.
    """
    return periodic_level_set(line, h, beta, rng).roots


def periodic_step_batch(points: np.ndarray, h, beta: float, rng: RngLike) -> np.ndarray:
    """
    One step for every row of `points` (shape (replicas, n), sorted rows in
    [0, 2πn)). Weights are drawn independently per row.
    """
    replicas, n = points.shape
    gen = as_generator(rng)
    weights = 2 * n * sample_dirichlet_weights_many(replicas, n, beta, gen)
    return solve_level_set_batch(points, weights, h, period=2 * np.pi * n).roots


class PeriodicStep(Step):
    NAME = "periodic"

    def __init__(self, logger: Logger, timer: Timer, params: ChainParams):
        super().__init__(logger, timer, params)
        if params.weight_law != WeightLaw.DIRICHLET_PERIODIC:
            raise ConfigurationError("The periodic chain uses Dirichlet weights")

    def run(
        self,
        line: PointConfiguration,
        h: float,
        rng: RngSpec,
        trusted_region: Optional[tuple[float, float]] = None,
    ) -> StepOutcome:
        result = periodic_level_set(line, h, self.params.beta, rng)
        return StepOutcome(result.roots, trusted_region, result.sidecar())


class PeriodicStepBuilder(StepBuilder):
    step = PeriodicStep
