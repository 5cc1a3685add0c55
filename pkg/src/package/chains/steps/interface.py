from logging import Logger
from typing import Optional

import numpy as np

from package.chains.params import ChainParams
from package.core.rng import RngSpec
from package.core.types import PointConfiguration
from package.logger import Timer


def full_region(line: PointConfiguration) -> tuple[float, float]:
    if line.is_periodic or len(line) == 0:
        return (-np.inf, np.inf)
    return (float(line.points[0]), float(line.points[-1]))


class StepOutcome:
    def __init__(
        self,
        line: PointConfiguration,
        trusted_region: Optional[tuple[float, float]] = None,
        level_set: Optional[dict] = None,
    ):
        self.line = line
        self.trusted_region = trusted_region
        # residual, degenerate gaps and iteration counts of the solve, when there is one
        self.level_set = level_set


class Step:
    NAME = "step"

    def __init__(
        self,
        logger: Logger,
        timer: Timer,
        params: ChainParams,
    ):
        self.logger = logger
        self.timer = timer
        self.params = params

    def initial_region(self, line: PointConfiguration) -> tuple[float, float]:
        return full_region(line)

    def run(
        self,
        line: PointConfiguration,
        h: float,
        rng: RngSpec,
        trusted_region: Optional[tuple[float, float]] = None,
    ) -> StepOutcome:
        raise NotImplementedError

    def __str__(self):
        return self.__class__.__name__

    def __repr__(self):
        return str(self)


class StepBuilder:
    step = Step

    def __init__(
        self,
        **kwargs,
    ):
        self.kwargs = kwargs

    def build(
        self,
        logger: Logger,
        timer: Timer,
        params: ChainParams,
    ):
        return self.step(logger, timer, params, **self.kwargs)
