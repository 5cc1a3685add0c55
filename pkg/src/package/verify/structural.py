import numpy as np

from package.chains.params import CornersState
from package.chains.steps.bead import bead_step
from package.chains.steps.corners import corners_step
from package.chains.steps.periodic import periodic_step
from package.core.errors import ConfigurationError
from package.core.interlace import interlaces, max_count_difference
from package.core.types import PeriodicLift, PointConfiguration, WeightedConfiguration
from package.logger import rlog
from package.stats.report import StatsReport
from package.stieltjes.evaluator import EvaluatorMode, StieltjesEvaluator, extrapolated_periodic_sum
from package.stieltjes.level_set import solve_level_set
from package.verify.options import VerifyOptions
from package.verify.outcome import SuiteOutcome

INTERLACING_TRIALS = 10_000
INTERVALS_PER_STEP = 10
STIELTJES_TRIALS = 1_000
BETAS = [1.0, 2.0, 4.0]


def _random_points(gen: np.random.Generator, count: int, low: float, high: float) -> np.ndarray:
    while True:
        points = np.sort(gen.uniform(low, high, count))
        if count < 2 or np.min(np.diff(points)) > 1e-6 * (high - low):
            return points


def _step_violates(old: PointConfiguration, new: PointConfiguration, gen: np.random.Generator, low: float, high: float) -> bool:
    intervals = np.sort(gen.uniform(low, high, (INTERVALS_PER_STEP, 2)), axis=1)
    if old.is_periodic:
        alternate = interlaces(old, new)
    else:
        alternate = interlaces(old, new, -np.inf, np.inf)
    return not alternate or max_count_difference(old, new, intervals) > 1


def interlacing(options: VerifyOptions) -> SuiteOutcome:
    """Random steps of every chain: strict alternation and bounded count differences."""
    gen = options.rng.generator()
    trials = options.trial_count(INTERLACING_TRIALS)
    betas = options.betas(BETAS)
    violations = {"periodic": 0, "bead": 0, "corners": 0}

    for trial in range(trials):
        beta = float(gen.choice(betas))
        h = float(gen.normal(0, 2)) if options.h is None else options.h
        chain = ("periodic", "bead", "corners")[trial % 3]

        if chain == "periodic":
            n = int(gen.integers(1, 9))
            period = 2 * np.pi * n
            old = PointConfiguration(_random_points(gen, n, 0, period), PeriodicLift(n))
            new = periodic_step(old, h, beta, gen)
            low, high = -period, 2 * period
        elif chain == "bead":
            points = _random_points(gen, 20, -30, 30)
            # centered so that the inferred window [−c, c] is symmetric
            old = PointConfiguration(points - 0.5 * (points[0] + points[-1]))
            new = bead_step(old, h, beta, gen).roots
            low, high = -30.0, 30.0
        else:
            old = PointConfiguration(_random_points(gen, int(gen.integers(1, 11)), -5, 5))
            new = corners_step(CornersState(old), beta, gen).points
            low, high = -10.0, 10.0

        if _step_violates(old, new, gen, low, high):
            violations[chain] += 1
            rlog.warning(f"Interlacing violated by a {chain} step in trial {trial}")

    report = StatsReport("violations", sum(violations.values()), 0.5, trials, options.rng, details=violations)
    return SuiteOutcome([report])


def _periodic_measure(gen: np.random.Generator, n: int) -> WeightedConfiguration:
    period = 2 * np.pi * n
    points = _random_points(gen, n, 0, period)
    weights = 2 * n * gen.dirichlet(np.ones(n))
    return WeightedConfiguration(PointConfiguration(points, PeriodicLift(n)), weights, normalized=True)


def _pole_distance(measure: WeightedConfiguration, z: float) -> float:
    period = measure.config.period
    assert period is not None
    return float(np.min(np.abs(np.mod(measure.points - z + period / 2, period) - period / 2)))


def _away_from_poles(gen: np.random.Generator, measure: WeightedConfiguration) -> float:
    period = measure.config.period
    assert period is not None
    while True:
        z = float(gen.uniform(0, period))
        if _pole_distance(measure, z) > 1e-2:
            return z


def _cyclic_deviation(a: np.ndarray, b: np.ndarray, period: float) -> float:
    """Largest distance between matched points of two periodic lines, up to a cyclic relabeling."""
    best = np.inf
    for shift in range(len(a)):
        gap = np.abs(np.mod(a - np.roll(b, shift) + period / 2, period) - period / 2)
        best = min(best, float(np.max(gap)))
    return best


def stieltjes(options: VerifyOptions) -> SuiteOutcome:
    """
    The cotangent closed form against extrapolated partial sums, its
    derivative against central differences, and translation invariance of
    the level-set solver.
    """
    gen = options.rng.generator()
    trials = options.trial_count(STIELTJES_TRIALS)
    closed_form_error = 0.0
    derivative_error = 0.0
    translation_error = 0.0

    for _ in range(trials):
        n = int(gen.integers(1, 9)) if options.n is None else options.n
        measure = _periodic_measure(gen, n)
        z = _away_from_poles(gen, measure)

        evaluator = StieltjesEvaluator(measure, EvaluatorMode.PERIODIC_CLOSED_FORM)
        value = evaluator(z)
        reference = extrapolated_periodic_sum(measure, z)
        closed_form_error = max(closed_form_error, abs(value - reference) / (1 + abs(reference)))

        delta = 1e-5 * _pole_distance(measure, z)
        central = (evaluator(z + delta) - evaluator(z - delta)) / (2 * delta)
        derivative = evaluator.derivative(z)
        derivative_error = max(derivative_error, abs(central - derivative) / abs(derivative))

        h = float(gen.normal(0, 3))
        shift = float(gen.uniform(-10, 10))
        try:
            roots = solve_level_set(measure, h).roots
            shifted = solve_level_set(measure.translate(shift), h).roots
        except ConfigurationError:
            continue
        period = 2 * np.pi * n
        deviation = _cyclic_deviation(roots.points + shift, shifted.points, period)
        translation_error = max(translation_error, deviation)

    return SuiteOutcome(
        [
            StatsReport("closed-form-vs-partial-sums", closed_form_error, 1e-6, trials, options.rng),
            StatsReport("derivative-vs-central-differences", derivative_error, 1e-6, trials, options.rng),
            StatsReport("translation-invariance", translation_error, 1e-9, trials, options.rng),
        ]
    )
