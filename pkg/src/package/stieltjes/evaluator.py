from enum import Enum
from typing import Optional, Sequence

import numpy as np
from scipy import special

from package import key
from package.core.errors import ConfigurationError, PoleCollisionError
from package.core.types import FiniteLine, PeriodicLift, WeightedConfiguration


class EvaluatorMode(Enum):
    FINITE_SUM = "finite"
    PERIODIC_CLOSED_FORM = "periodic"
    COMPENSATED_WINDOW = "compensated"

    @staticmethod
    def from_str(value: str) -> "EvaluatorMode":
        for mode in EvaluatorMode:
            if mode.value == value:
                return mode
        raise ConfigurationError(f"Unknown evaluator mode {value!r}")

    @staticmethod
    def all() -> list["EvaluatorMode"]:
        return list(EvaluatorMode)


class WindowCompensation:
    """
    Correction applied to a window sum Σ_{|λ_j| ≤ c} γ_j/(λ_j − z).

    `mean_weight` is c̄ and `h_tail` the caller-modelled tail offset; with a
    `density` d the expected contribution of a stationary configuration outside
    the window, c̄·d·log((c+z)/(c−z)), is added as well.
    """

    def __init__(
        self,
        half_width: float,
        mean_weight: float,
        h_tail: float = 0.0,
        density: Optional[float] = None,
    ):
        if half_width <= 0:
            raise ConfigurationError(f"Window half-width must be positive, got {half_width}")
        if mean_weight <= 0:
            raise ConfigurationError(f"Mean weight must be positive, got {mean_weight}")
        if density is not None and density <= 0:
            raise ConfigurationError(f"Density must be positive, got {density}")
        self.half_width = float(half_width)
        self.mean_weight = float(mean_weight)
        self.h_tail = float(h_tail)
        self.density = density

    def value(self, z):
        out = self.mean_weight * self.h_tail + 0 * z
        if self.density is not None:
            c = self.half_width
            out = out + self.mean_weight * self.density * np.log((c + z) / (c - z))
        return out

    def derivative(self, z):
        if self.density is None:
            return 0 * z
        c = self.half_width
        return self.mean_weight * self.density * (1 / (c + z) + 1 / (c - z))

    def __repr__(self) -> str:
        return (
            f"WindowCompensation(half_width={self.half_width}, mean_weight={self.mean_weight}, "
            f"h_tail={self.h_tail}, density={self.density})"
        )


def stieltjes_terms(points: np.ndarray, weights: np.ndarray, z: np.ndarray, period: Optional[float] = None):
    """
    S and S′ for every row of a batch.

    points and weights have shape (..., n), z has shape (..., m); both outputs
    have the shape of z. With a period the closed cotangent form of the
    principal-value sum over all translates is used.
    """
    diff = points[..., None, :] - z[..., :, None]
    w = weights[..., None, :]

    if period is None:
        inv = 1 / diff
        return (w * inv).sum(axis=-1), (w * inv * inv).sum(axis=-1)

    twice_n = period / np.pi
    half = diff / twice_n
    sin = np.sin(half)
    value = (w * np.cos(half) / sin).sum(axis=-1) / twice_n
    derivative = (w / (sin * sin)).sum(axis=-1) / (twice_n * twice_n)
    return value, derivative


def _check_poles(measure: WeightedConfiguration, z: np.ndarray):
    if len(measure) == 0:
        return
    diff = measure.points[None, :] - z.reshape(-1)[:, None]
    distance = np.abs(diff)
    if measure.config.is_periodic:
        period = measure.config.period
        assert period is not None
        along = np.mod(diff.real, period)
        distance = np.hypot(np.minimum(along, period - along), diff.imag)
    if distance.size and np.min(distance) <= key.POLE_TOLERANCE * measure.config.mean_gap():
        raise PoleCollisionError("Evaluation point collides with a pole of the measure")


def _evaluate(measure: WeightedConfiguration, z, period: Optional[float]):
    values = np.asarray(z)
    _check_poles(measure, values)
    flat = values.reshape(-1)
    s, ds = stieltjes_terms(measure.points, measure.weights, flat, period)
    return s.reshape(values.shape), ds.reshape(values.shape)


def _scalar(result: np.ndarray):
    return result.item() if result.ndim == 0 else result


def eval_finite(measure: WeightedConfiguration, z):
    """Σ γ_j/(λ_j − z) over the points of a finite configuration."""
    if measure.config.is_periodic:
        raise ConfigurationError("eval_finite needs a finite configuration")
    return _scalar(_evaluate(measure, z, None)[0])


def eval_periodic(measure: WeightedConfiguration, z):
    """(1/2n) Σ_{j<n} γ_j cot((λ_j − z)/(2n)) for a 2πn-periodic measure."""
    if not isinstance(measure.geometry, PeriodicLift):
        raise ConfigurationError("eval_periodic needs a periodic configuration")
    return _scalar(_evaluate(measure, z, measure.geometry.period)[0])


def eval_compensated(
    measure: WeightedConfiguration,
    z,
    mean_weight: float,
    h_tail: float,
    half_width: Optional[float] = None,
    density: Optional[float] = None,
):
    """
    Window sum of a symmetric truncation plus the tail correction c̄·h_tail
    (and the mean-field tail term when a density is given).
    """
    compensation = _window_compensation(measure, mean_weight, h_tail, half_width, density)
    values = np.asarray(z)
    window_sum = _evaluate(measure, values, None)[0]
    return _scalar(window_sum + compensation.value(values))


def check_centered_window(points: np.ndarray, half_width: float, gap: float):
    """
    Rejects windows whose points leave a much larger empty stretch at one end
    of [−c, c] than at the other: the two edge distances c + λ_first and
    c − λ_last may differ by at most one mean gap.
    """
    left = points[0] + half_width
    right = half_width - points[-1]
    if abs(left - right) > key.WINDOW_ASYMMETRY_GAPS * gap:
        raise ConfigurationError(
            f"Window is not centered: edge distances {left:.3g} and {right:.3g} "
            f"differ by more than {key.WINDOW_ASYMMETRY_GAPS:g} mean gap"
        )


def _window_compensation(
    measure: WeightedConfiguration,
    mean_weight: float,
    h_tail: float,
    half_width: Optional[float],
    density: Optional[float],
) -> WindowCompensation:
    if measure.config.is_periodic:
        raise ConfigurationError("Compensated sums need a finite window configuration")
    if len(measure) < 2:
        raise ConfigurationError(f"Window needs at least 2 points, got {len(measure)}")
    points = measure.points
    if half_width is None:
        # midway between the outermost point and the next lattice site
        half_width = max(abs(points[0]), abs(points[-1])) + 0.5 * measure.config.mean_gap()
        check_centered_window(points, half_width, measure.config.mean_gap())
    if np.any(np.abs(np.abs(points) - half_width) <= key.POLE_TOLERANCE * measure.config.mean_gap()):
        raise ConfigurationError("Window endpoints must not be points of the configuration")
    if np.any(np.abs(points) > half_width):
        raise ConfigurationError("All window points must lie inside [−c, c]")
    return WindowCompensation(half_width, mean_weight, h_tail, density)


def eval_derivative(measure: WeightedConfiguration, z):
    """
    S′(z): Σ γ_j/(λ_j − z)² on finite configurations and
    (1/4n²) Σ γ_j / sin²((λ_j − z)/(2n)) on periodic ones.
    """
    return _scalar(_evaluate(measure, z, measure.config.period)[1])


def eval_periodic_truncated(measure: WeightedConfiguration, z, copies: int):
    """
    Brute-force symmetric partial sum over the translates λ_j + k·2πn with
    |k| ≤ copies.
    """
    if not isinstance(measure.geometry, PeriodicLift):
        raise ConfigurationError("Truncated periodic sums need a periodic configuration")
    period = measure.geometry.period
    shifts = np.arange(-copies, copies + 1) * period
    points = (measure.points[None, :] + shifts[:, None]).reshape(-1)
    weights = np.tile(measure.weights, len(shifts))
    values = np.asarray(z)
    s, _ = stieltjes_terms(points, weights, values.reshape(-1))
    return _scalar(s.reshape(values.shape))


def extrapolated_periodic_sum(
    measure: WeightedConfiguration, z, copies: Sequence[int] = (100, 200, 400)
):
    """
    Richardson extrapolation of symmetric partial sums over doubling copy
    counts. The truncation error expands in powers of 1/copies.
    """
    k1, k2, k3 = copies
    if k2 != 2 * k1 or k3 != 2 * k2:
        raise ConfigurationError(f"Copy counts must double, got {copies}")
    s1, s2, s3 = (eval_periodic_truncated(measure, z, k) for k in copies)
    r1 = 2 * s2 - s1
    r2 = 2 * s3 - s2
    return (4 * r2 - r1) / 3


def lattice_tail_sum(offset, mean_weight: float, spacing: float, copies: int):
    """
    Σ_{|k| > copies} c̄/(offset + k·spacing) summed symmetrically, in closed
    form through the digamma function. This is the tail of a lattice with
    one point of weight c̄ per spacing, used to model h_tail.
    """
    b = np.asarray(offset) / spacing
    return mean_weight / spacing * (special.psi(copies + 1 - b) - special.psi(copies + 1 + b))


class StieltjesEvaluator:
    """
    S_Λ for a fixed measure, evaluated in one of three modes. The mode must fit
    the geometry of the measure.
    """

    def __init__(
        self,
        measure: WeightedConfiguration,
        mode: EvaluatorMode,
        compensation: Optional[WindowCompensation] = None,
    ):
        self.measure = measure
        self.mode = mode
        self.compensation = compensation

        if mode == EvaluatorMode.FINITE_SUM and not isinstance(measure.geometry, FiniteLine):
            raise ConfigurationError("Finite sums need a finite configuration")
        if mode == EvaluatorMode.PERIODIC_CLOSED_FORM and not isinstance(measure.geometry, PeriodicLift):
            raise ConfigurationError("The closed form needs a periodic configuration")
        if mode == EvaluatorMode.COMPENSATED_WINDOW:
            if compensation is None:
                raise ConfigurationError("Compensated windows need a WindowCompensation")
            self.compensation = _window_compensation(
                measure,
                compensation.mean_weight,
                compensation.h_tail,
                compensation.half_width,
                compensation.density,
            )

    @property
    def period(self) -> Optional[float]:
        if self.mode == EvaluatorMode.PERIODIC_CLOSED_FORM:
            return self.measure.config.period
        return None

    def __call__(self, z):
        values = np.asarray(z)
        s, _ = _evaluate(self.measure, values, self.period)
        if self.compensation is not None:
            s = s + self.compensation.value(values)
        return _scalar(s)

    def derivative(self, z):
        values = np.asarray(z)
        _, ds = _evaluate(self.measure, values, self.period)
        if self.compensation is not None:
            ds = ds + self.compensation.derivative(values)
        return _scalar(ds)

    def __repr__(self) -> str:
        return f"StieltjesEvaluator(mode={self.mode.value}, n={len(self.measure)}, compensation={self.compensation})"
