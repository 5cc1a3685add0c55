import numpy as np
import pytest

from package.chains.fixtures import jittered_lattice
from package.chains.params import ChainParams, WeightLaw
from package.chains.steps.bead import BeadStepBuilder, bead_step, bead_transition, window_half_width
from package.core.errors import ConfigurationError
from package.core.interlace import alternates
from package.core.rng import RngSpec
from package.core.types import PeriodicLift, PointConfiguration, WeightedConfiguration
from package.logger import Timer, rlog


def test_symmetric_pair_has_root_at_origin():
    a = 1.7
    measure = WeightedConfiguration(PointConfiguration([-a, a]), [1.0, 1.0])

    result = bead_transition(measure, 0.0)

    np.testing.assert_allclose(result.roots.points, [0.0], atol=1e-12)
    assert result.boundary.tolist() == [True]
    assert result.interior.size == 0


def test_roots_alternate_with_window():
    generator = np.random.default_rng(60)
    points = np.sort(generator.uniform(-30, 30, 12))
    points -= 0.5 * (points[0] + points[-1])
    window = PointConfiguration(points)

    result = bead_step(window, 0.5, 2.0, RngSpec(4))

    assert len(result.roots) == 11
    assert alternates(points, result.roots.points)
    assert result.boundary.sum() == 2
    assert result.boundary[0] and result.boundary[-1]
    assert result.residual < 1e-8


def test_window_doubling_moves_central_roots_little():
    generator = np.random.default_rng(61)
    jitter = generator.uniform(-0.5, 0.5, 8)
    central_weights = generator.gamma(1.0, 2.0, 8)

    central = {}
    for copies in [32, 64]:
        points = jittered_lattice(copies, jitter)
        weights = np.full(len(points), 2.0)
        start = copies - 4
        weights[start : start + 8] = central_weights
        result = bead_transition(WeightedConfiguration(PointConfiguration(points), weights), 0.0)
        roots = result.roots.points
        central[copies] = roots[np.abs(roots) < 20]

    assert len(central[32]) == len(central[64])
    assert np.max(np.abs(central[32] - central[64])) < 1e-3


def test_default_half_width():
    window = PointConfiguration([-2 * np.pi, 0.0, 3 * np.pi])
    assert window_half_width(window) == pytest.approx(4 * np.pi)


def test_rejects_small_and_periodic_windows():
    with pytest.raises(ConfigurationError):
        bead_step(PointConfiguration([0.0]), 0.0, 2.0, RngSpec(1))
    with pytest.raises(ConfigurationError):
        bead_transition(
            WeightedConfiguration(PointConfiguration([0.0, 2.0], PeriodicLift(2)), [2.0, 2.0]), 0.0
        )


def test_step_shrinks_trusted_region(bead_params: ChainParams):
    step = BeadStepBuilder().build(rlog, Timer(), bead_params)
    window = PointConfiguration(2 * np.pi * (np.arange(-10, 10) + 0.5))

    outcome = step.run(window, 0.0, RngSpec(2))

    low, high = outcome.trusted_region
    assert (low, high) == pytest.approx((-18 * np.pi, 18 * np.pi))
    assert len(outcome.line) == 17
    assert low < outcome.line.points[0] and outcome.line.points[-1] < high
    assert set(outcome.level_set) == {"residual", "degenerate_gaps", "iterations"}


def test_step_keeps_interior_roots_inside_trusted_region(bead_params: ChainParams):
    step = BeadStepBuilder().build(rlog, Timer(), bead_params)
    generator = np.random.default_rng(62)

    for seed in range(20):
        points = np.sort(generator.uniform(-40, 40, 25))
        window = PointConfiguration(points - 0.5 * (points[0] + points[-1]))

        outcome = step.run(window, float(generator.normal()), RngSpec(seed))

        low, high = outcome.trusted_region
        assert np.all((outcome.line.points > low) & (outcome.line.points < high))
        assert len(outcome.line) <= len(window) - 3
        assert alternates(window.unrolled(outcome.line.points[0], outcome.line.points[-1]), outcome.line.points)


def test_explicit_half_width_sets_initial_region():
    params = ChainParams(beta=2.0, weight_law=WeightLaw.IID_GAMMA, window_halfwidth=40.0)
    step = BeadStepBuilder().build(rlog, Timer(), params)
    window = PointConfiguration(2 * np.pi * (np.arange(-6, 6) + 0.5))

    assert step.initial_region(window) == (-40.0, 40.0)
    outcome = step.run(window, 0.0, RngSpec(3))
    assert outcome.trusted_region == pytest.approx((-40 + 2 * np.pi, 40 - 2 * np.pi))


def test_rejects_off_center_windows():
    measure = WeightedConfiguration(PointConfiguration([-5.0, 1.0, 8.0, 15.0, 22.0, 30.0]), np.full(6, 2.0))

    with pytest.raises(ConfigurationError):
        bead_transition(measure, 0.0)
    with pytest.raises(ConfigurationError):
        window_half_width(measure.config)


def test_rejects_points_outside_explicit_half_width():
    measure = WeightedConfiguration(PointConfiguration([-5.0, 1.0, 6.0]), np.full(3, 2.0))

    with pytest.raises(ConfigurationError):
        bead_transition(measure, 0.0, half_width=5.5)


def test_step_needs_gamma_weights():
    with pytest.raises(ConfigurationError):
        BeadStepBuilder().build(rlog, Timer(), ChainParams(beta=2.0))
