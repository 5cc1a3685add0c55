from typing import Optional

import numpy as np

from package import key
from package.core.errors import BracketError, ConfigurationError
from package.core.types import (
    FiniteLine,
    PeriodicLift,
    PointConfiguration,
    WeightedConfiguration,
)
from package.logger import rlog
from package.stieltjes.evaluator import WindowCompensation, stieltjes_terms


class LevelFunction:
    """
    F(z) = S(z) + slope·z + compensation(z) − h over a batch of measures.

    F is strictly increasing between consecutive poles, which is what the
    solver relies on.
    """

    def __init__(
        self,
        points: np.ndarray,
        weights: np.ndarray,
        h: np.ndarray,
        period: Optional[float] = None,
        slope: np.ndarray | float = 0.0,
        compensation: Optional[WindowCompensation] = None,
    ):
        self.points = points
        self.weights = weights
        self.h = h
        self.period = period
        self.slope = np.broadcast_to(np.asarray(slope, dtype=float), h.shape)
        self.compensation = compensation

    def __call__(self, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        value, derivative = stieltjes_terms(self.points, self.weights, z, self.period)
        value = value + self.slope[:, None] * z - self.h[:, None]
        derivative = derivative + self.slope[:, None]
        if self.compensation is not None:
            value = value + self.compensation.value(z)
            derivative = derivative + self.compensation.derivative(z)
        return value, derivative


class BatchLevelSetResult:
    def __init__(
        self,
        roots: np.ndarray,
        degenerate: np.ndarray,
        residual: np.ndarray,
        bisections: int,
        newton_iterations: int,
    ):
        self.roots = roots
        self.degenerate = degenerate
        self.residual = residual
        self.bisections = bisections
        self.newton_iterations = newton_iterations

    @property
    def iterations(self) -> dict[str, int]:
        return {"bisections": self.bisections, "newton": self.newton_iterations}

    def __len__(self) -> int:
        return len(self.roots)


class LevelSetResult:
    """
    Solutions of S(z) = h: one root per gap between consecutive poles, plus one
    per unbounded exterior interval when solved in exterior mode.
    """

    def __init__(
        self,
        roots: PointConfiguration,
        residual: float,
        degenerate_gaps: list[int],
        iterations: dict[str, int],
    ):
        self.roots = roots
        self.residual = residual
        self.degenerate_gaps = degenerate_gaps
        self.iterations = iterations

    def sidecar(self) -> dict:
        return {
            key.RESIDUAL_KEY: self.residual,
            key.DEGENERATE_GAPS_KEY: self.degenerate_gaps,
            key.ITERATIONS_KEY: self.iterations,
        }

    def __repr__(self) -> str:
        return f"LevelSetResult(roots={self.roots.points.tolist()}, residual={self.residual:.3e}, degenerate_gaps={self.degenerate_gaps})"


def _as_rows(values, replicas: int) -> np.ndarray:
    return np.broadcast_to(np.asarray(values, dtype=float), (replicas,)).copy()


def _interior_brackets(points: np.ndarray, period: Optional[float]):
    if period is None:
        return points[:, :-1], points[:, 1:]
    right = np.concatenate([points[:, 1:], points[:, :1] + period], axis=1)
    return points, right


def _exterior_brackets(
    f: LevelFunction,
    points: np.ndarray,
    weights: np.ndarray,
    h: np.ndarray,
):
    """
    Brackets of the two unbounded intervals of an affine level function. The
    starting distance 1 + |h| + Σγ/(min gap) is doubled until F changes sign.
    """
    replicas, n = points.shape
    if n > 1:
        min_gap = np.min(np.diff(points, axis=1), axis=1)
    else:
        min_gap = np.ones(replicas)
    distance = 1 + np.abs(h) + weights.sum(axis=1) / min_gap

    left = points[:, 0] - distance
    right = points[:, -1] + distance
    for _ in range(key.MAX_BRACKET_DOUBLINGS):
        f_left, _ = f(left[:, None])
        f_right, _ = f(right[:, None])
        open_left = f_left[:, 0] >= 0
        open_right = f_right[:, 0] <= 0
        if not (open_left.any() or open_right.any()):
            return left, right
        distance = np.where(open_left | open_right, 2 * distance, distance)
        left = np.where(open_left, points[:, 0] - distance, left)
        right = np.where(open_right, points[:, -1] + distance, right)

    raise BracketError(
        f"Could not bracket the exterior roots after {key.MAX_BRACKET_DOUBLINGS} doublings"
    )


def _converged(value, derivative, lo, hi, width, tolerance) -> np.ndarray:
    """
    A root is accepted once its bracket is resolved to the width tolerance, or
    once the residual is below tolerance and the next Newton step would move
    it by less than the width tolerance.
    """
    resolution = key.ROOT_WIDTH_TOLERANCE * width
    small_step = np.abs(value) < resolution * np.abs(derivative)
    return (hi - lo < resolution) | ((np.abs(value) < tolerance) & small_step)


def _solve_brackets(
    f: LevelFunction,
    lo: np.ndarray,
    hi: np.ndarray,
    width: np.ndarray,
    tolerance: np.ndarray,
) -> tuple[np.ndarray, int, int]:
    """
    Bisection on [lo, hi] where F(lo) < 0 < F(hi), followed by safeguarded
    Newton steps that never leave the current bracket. Brackets that Newton
    fails to resolve are finished by bisection.
    """
    lo = lo.copy()
    hi = hi.copy()
    for _ in range(key.INITIAL_BISECTIONS):
        mid = 0.5 * (lo + hi)
        value, _ = f(mid)
        below = value < 0
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    bisections = key.INITIAL_BISECTIONS

    x = 0.5 * (lo + hi)
    done = np.zeros(x.shape, dtype=bool)
    newton = 0
    for newton in range(1, key.MAX_NEWTON_ITERATIONS + 1):
        value, derivative = f(x)
        done = done | _converged(value, derivative, lo, hi, width, tolerance)
        if done.all():
            break
        below = value < 0
        lo = np.where(~done & below, x, lo)
        hi = np.where(~done & ~below, x, hi)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = x - value / derivative
        outside = ~np.isfinite(step) | (step <= lo) | (step >= hi)
        step = np.where(outside, 0.5 * (lo + hi), step)
        x = np.where(done, x, step)

    for _ in range(key.MAX_BISECTIONS):
        value, derivative = f(x)
        done = done | _converged(value, derivative, lo, hi, width, tolerance)
        if done.all():
            break
        below = value < 0
        lo = np.where(~done & below, x, lo)
        hi = np.where(~done & ~below, x, hi)
        mid = 0.5 * (lo + hi)
        # the bracket cannot shrink further in floating point
        stalled = (mid <= lo) | (mid >= hi)
        done = done | stalled
        x = np.where(done, x, mid)
        bisections += 1

    return x, bisections, newton


def solve_level_set_batch(
    points: np.ndarray,
    weights: np.ndarray,
    h,
    period: Optional[float] = None,
    slope=0.0,
    exterior: bool = False,
    compensation: Optional[WindowCompensation] = None,
) -> BatchLevelSetResult:
    """
    Solves S(z) + slope·z = h for every row of a batch of measures of equal size.

    points and weights have shape (replicas, n) with sorted rows; h and slope
    are scalars or arrays of shape (replicas,). Periodic rows (period given)
    return n roots, reduced to [0, period) and sorted. Finite rows return one
    root per interior gap, plus the two exterior roots when `exterior` is set.
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    weights = np.atleast_2d(np.asarray(weights, dtype=float))
    replicas, n = points.shape
    h = _as_rows(h, replicas)
    slope_rows = _as_rows(slope, replicas)

    if weights.shape != points.shape:
        raise ConfigurationError(f"Weights shape {weights.shape} does not match points {points.shape}")
    if not np.all(np.isfinite(h)):
        raise ConfigurationError("Level h must be finite")
    if np.any(weights <= 0):
        raise ConfigurationError("Weights must be strictly positive")
    if np.any(slope_rows < 0):
        raise ConfigurationError("Slope must be nonnegative")
    if exterior and (period is not None or np.any(slope_rows <= 0)):
        raise ConfigurationError("Exterior roots need a finite configuration and a positive slope")
    if exterior and compensation is not None:
        raise ConfigurationError("Exterior roots are not defined for compensated windows")
    f = LevelFunction(points, weights, h, period, slope_rows, compensation)

    left, right = _interior_brackets(points, period)
    if period is not None:
        mean_gap = np.full(replicas, period / n)
    elif n > 1:
        mean_gap = (points[:, -1] - points[:, 0]) / (n - 1)
    else:
        mean_gap = np.ones(replicas)
    gap = right - left
    if np.any(gap <= 0):
        raise ConfigurationError("Poles must be strictly increasing and distinct")
    degenerate = gap < key.DEGENERATE_GAP_TOLERANCE * mean_gap[:, None]

    if exterior:
        outer_left, outer_right = _exterior_brackets(f, points, weights, h)
        left = np.concatenate([outer_left[:, None], left, points[:, -1:]], axis=1)
        right = np.concatenate([points[:, :1], right, outer_right[:, None]], axis=1)
        gap = right - left
        degenerate = np.concatenate(
            [np.zeros((replicas, 1), bool), degenerate, np.zeros((replicas, 1), bool)], axis=1
        )

    offset = np.maximum(key.BRACKET_OFFSET * gap, key.MIN_BRACKET_OFFSET)
    lo = left + offset
    hi = right - offset
    tolerance = np.broadcast_to((key.ROOT_RESIDUAL_TOLERANCE * (1 + np.abs(h)))[:, None], lo.shape)

    if lo.shape[1] == 0:
        roots = np.zeros((replicas, 0))
        return BatchLevelSetResult(roots, degenerate, np.zeros(replicas), 0, 0)

    roots, bisections, newton = _solve_brackets(f, lo, hi, gap, tolerance)
    roots = np.where(degenerate, 0.5 * (left + right), roots)

    value, _ = f(roots)
    residual = np.max(np.where(degenerate, 0.0, np.abs(value)), axis=1)

    if degenerate.any():
        rlog.warning(f"{int(degenerate.sum())} degenerate gaps resolved at their midpoints")

    if period is not None:
        roots = np.mod(roots, period)
        order = np.argsort(roots, axis=1, kind="stable")
        roots = np.take_along_axis(roots, order, axis=1)
        degenerate = np.take_along_axis(degenerate, order, axis=1)

    return BatchLevelSetResult(roots, degenerate, residual, bisections, newton)


def solve_level_set(
    measure: WeightedConfiguration,
    h: float,
    slope: float = 0.0,
    exterior: bool = False,
    compensation: Optional[WindowCompensation] = None,
) -> LevelSetResult:
    """
    The level set S_Λ⁻¹(h) of a single measure, with the closed cotangent form
    for periodic measures.
    """
    period = measure.config.period
    if compensation is not None and period is not None:
        raise ConfigurationError("Compensated windows need a finite configuration")
    if period is None and len(measure) < 1:
        raise ConfigurationError("Cannot solve a level set without poles")

    batch = solve_level_set_batch(
        measure.points[None, :],
        measure.weights[None, :],
        h,
        period=period,
        slope=slope,
        exterior=exterior,
        compensation=compensation,
    )

    geometry = PeriodicLift(measure.geometry.n) if isinstance(measure.geometry, PeriodicLift) else FiniteLine()
    roots = PointConfiguration(batch.roots[0], geometry)
    return LevelSetResult(
        roots,
        float(batch.residual[0]),
        [int(i) for i in np.flatnonzero(batch.degenerate[0])],
        batch.iterations,
    )
