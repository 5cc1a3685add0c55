from typing import Optional

import numpy as np
import pandas as pd

from package import key, storage
from package.chains.config import ChainConfig
from package.chains.params import BeadTrajectory, ChainParams, CornersState, WeightLaw
from package.chains.steps.bead import BeadStep, BeadStepBuilder
from package.chains.steps.corners import CornersStepBuilder
from package.chains.steps.interface import StepBuilder, full_region
from package.chains.steps.periodic import PeriodicStepBuilder
from package.core.errors import ConfigurationError
from package.core.rng import RngSpec
from package.core.types import PointConfiguration

Initial = PointConfiguration | CornersState


class Chain:
    """
    Iterates a step X_{k+1} = D(X_k, G_k), with fresh randomness G_k drawn
    from the k-th child stream of the run.
    """

    def __init__(
        self,
        step: StepBuilder,
        params: ChainParams,
        config: ChainConfig = ChainConfig(),
    ):
        self.params = params
        self.logger = config.logger
        self.timer = config.timer
        self.step = step.build(self.logger, self.timer, params)

    def run(
        self,
        initial: PointConfiguration,
        rng: RngSpec,
        trusted_region: Optional[tuple[float, float]] = None,
    ) -> BeadTrajectory:
        self.logger.debug(f"Starting {self.step} chain with params: {self.params}")

        lines = [initial]
        levels: list[float] = []
        regions = [trusted_region if trusted_region is not None else self.step.initial_region(initial)]
        level_sets: list[Optional[dict]] = []

        for k in range(1, self.params.steps + 1):
            line = lines[-1]
            if isinstance(self.step, BeadStep) and len(line) < 2:
                self.logger.warning(f"Window has {len(line)} points in iteration {k} - stopping")
                break

            step_rng = rng.spawn(k)
            h = self.params.level_sampler(step_rng.spawn(1))
            with self.timer.debug(f"Running iteration {k}"):
                outcome = self.step.run(line, h, step_rng.spawn(0), regions[-1])

            lines.append(outcome.line)
            levels.append(h)
            regions.append(outcome.trusted_region or full_region(outcome.line))
            level_sets.append(outcome.level_set)

        return BeadTrajectory(lines, self.params, levels, regions, level_sets)


def step_builder_for(initial: Initial, params: ChainParams) -> StepBuilder:
    if isinstance(initial, CornersState):
        return CornersStepBuilder(rescale=initial.rescale)
    if initial.is_periodic:
        return PeriodicStepBuilder()
    if params.weight_law != WeightLaw.IID_GAMMA:
        raise ConfigurationError("Finite windows run the bead chain, which needs gamma weights")
    return BeadStepBuilder()


def run_chain(
    initial: Initial,
    params: ChainParams,
    rng: RngSpec,
    config: ChainConfig = ChainConfig(),
) -> BeadTrajectory:
    """
    Runs `params.steps` steps of the chain matching the initial state: the
    periodic chain for periodic lines, the corners chain for corners states
    and the windowed bead chain for finite windows.
    """
    builder = step_builder_for(initial, params)
    line = initial.points if isinstance(initial, CornersState) else initial
    return Chain(builder, params, config).run(line, rng)


def trajectory_to_df(trajectory: BeadTrajectory) -> pd.DataFrame:
    """One row per point, `level` being the step index. Weights are not kept."""
    return storage.configuration_df(trajectory.lines)


def trajectory_metadata(trajectory: BeadTrajectory) -> dict:
    return {
        key.LEVELS_KEY: trajectory.levels,
        key.TRUSTED_REGION_KEY: [[_finite_or_none(low), _finite_or_none(high)] for low, high in trajectory.trusted_regions],
        "params": trajectory.params.to_dict(),
    }


def _finite_or_none(value: float) -> Optional[float]:
    return float(value) if np.isfinite(value) else None
