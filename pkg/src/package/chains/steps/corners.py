from logging import Logger
from typing import Optional

import numpy as np

from package.chains.params import ChainParams, CornersState, Rescale, WeightLaw
from package.chains.steps.interface import Step, StepBuilder, StepOutcome
from package.core.errors import ConfigurationError, RootCountError
from package.core.rng import RngLike, RngSpec, as_generator, standard_gamma, validate_beta
from package.core.types import PointConfiguration
from package.logger import Timer
from package.stieltjes.level_set import solve_level_set_batch


def draw_corners_noise(replicas: int, n: int, beta: float, rng: RngLike) -> tuple[np.ndarray, np.ndarray]:
    """g ~ Normal(0, 2/β) per row and weights (2/β)·Gamma(β/2), shape (replicas, n)."""
    validate_beta(beta)
    gen = as_generator(rng)
    g = np.sqrt(2 / beta) * gen.standard_normal(replicas)
    w = (2 / beta) * standard_gamma(beta / 2, (replicas, n), gen)
    return g, w


def corners_transition_batch(
    points: np.ndarray,
    g: np.ndarray,
    w: np.ndarray,
    rescale: Optional[Rescale] = None,
) -> np.ndarray:
    """
    The n + 1 real solutions of g − z − Σ w_j/(λ_j − z) = 0 for every row,
    i.e. S(z) + z = g. With a rescaling the points are in rescaled coordinates
    ζ = (λ − α√n)·s, s = √(n(4 − α²)), and the equivalent equation
    S(ζ) + ζ/s² = −α/√(4 − α²) + g/s is solved.
    """
    points = np.atleast_2d(points)
    replicas, n = points.shape
    if rescale is None:
        level, slope = g, 1.0
    else:
        s = rescale.scale
        level = rescale.level + np.asarray(g) / s
        slope = 1 / (s * s)

    roots = solve_level_set_batch(points, w, level, slope=slope, exterior=True).roots
    if roots.shape != (replicas, n + 1):
        raise RootCountError(f"Expected {n + 1} roots per row, got {roots.shape[1]}")
    return roots


def corners_transition(
    points: np.ndarray, g: float, w: np.ndarray, rescale: Optional[Rescale] = None
) -> np.ndarray:
    return corners_transition_batch(
        np.asarray(points)[None, :], np.array([g]), np.asarray(w)[None, :], rescale
    )[0]


def corners_step_batch(
    points: np.ndarray, beta: float, rng: RngLike, rescale: Optional[Rescale] = None
) -> np.ndarray:
    replicas, n = points.shape
    g, w = draw_corners_noise(replicas, n, beta, rng)
    return corners_transition_batch(points, g, w, rescale)


def corners_step(state: CornersState, beta: float, rng: RngLike) -> CornersState:
    """One step of the Hermite β corners chain: the dimension grows by one."""
    if state.rescale is not None:
        raise ConfigurationError("Use corners_rescaled_step for rescaled states")
    g, w = draw_corners_noise(1, state.dimension, beta, rng)
    roots = corners_transition_batch(state.points.points[None, :], g, w)[0]
    return CornersState(PointConfiguration(roots))


def corners_rescaled_step(state: CornersState, beta: float, rng: RngLike) -> CornersState:
    """corners_step conjugated by the bulk rescaling attached to the state."""
    if state.rescale is None:
        raise ConfigurationError("corners_rescaled_step needs a rescaled state")
    g, w = draw_corners_noise(1, state.dimension, beta, rng)
    roots = corners_transition_batch(state.points.points[None, :], g, w, state.rescale)[0]
    return CornersState(PointConfiguration(roots), state.rescale)


class CornersStep(Step):
    NAME = "corners"

    def __init__(
        self,
        logger: Logger,
        timer: Timer,
        params: ChainParams,
        rescale: Optional[Rescale] = None,
    ):
        super().__init__(logger, timer, params)
        if params.weight_law != WeightLaw.IID_GAMMA:
            raise ConfigurationError("The corners chain uses i.i.d. gamma weights")
        self.rescale = rescale

    def run(
        self,
        line: PointConfiguration,
        h: float,
        rng: RngSpec,
        trusted_region: Optional[tuple[float, float]] = None,
    ) -> StepOutcome:
        state = CornersState(line, self.rescale)
        if self.rescale is None:
            next_state = corners_step(state, self.params.beta, rng)
        else:
            next_state = corners_rescaled_step(state, self.params.beta, rng)
        return StepOutcome(next_state.points)


class CornersStepBuilder(StepBuilder):
    step = CornersStep
