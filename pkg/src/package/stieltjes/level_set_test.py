import numpy as np
import pytest

from package.core.errors import ConfigurationError
from package.core.fixtures import random_finite_measure
from package.core.interlace import alternates, interlaces, max_count_difference
from package.core.types import PointConfiguration, WeightedConfiguration
from package.stieltjes.evaluator import WindowCompensation, eval_finite, eval_periodic
from package.stieltjes.fixtures import random_periodic_measure
from package.stieltjes.level_set import solve_level_set, solve_level_set_batch


def test_antipodal_root(antipodal_measure: WeightedConfiguration):
    result = solve_level_set(antipodal_measure, 0.0)

    np.testing.assert_allclose(result.roots.points, [np.pi], atol=1e-12)
    assert result.roots.is_periodic
    assert result.degenerate_gaps == []


def test_symmetric_pair_roots(symmetric_pair_measure: WeightedConfiguration):
    result = solve_level_set(symmetric_pair_measure, 0.0)
    np.testing.assert_allclose(result.roots.points, [np.pi, 3 * np.pi], atol=1e-12)


def test_affine_exterior_roots():
    measure = WeightedConfiguration(PointConfiguration([0.0]), [1.0])

    result = solve_level_set(measure, 0.0, slope=1.0, exterior=True)

    np.testing.assert_allclose(result.roots.points, [-1.0, 1.0], atol=1e-12)


def test_periodic_roots_solve_the_equation():
    generator = np.random.default_rng(10)
    for _ in range(30):
        n = int(generator.integers(1, 9))
        measure = random_periodic_measure(n, generator)
        h = generator.normal(0, 3)

        result = solve_level_set(measure, h)
        values = eval_periodic(measure, result.roots.points)

        assert len(result.roots) == n
        assert np.max(np.abs(values - h)) < 1e-8 * (1 + abs(h))
        assert interlaces(measure.config, result.roots)


def test_finite_interior_and_exterior_counts():
    generator = np.random.default_rng(11)
    measure = random_finite_measure(7, generator)

    interior = solve_level_set(measure, 0.5)
    exterior = solve_level_set(measure, 0.5, slope=1.0, exterior=True)

    assert len(interior.roots) == 6
    assert len(exterior.roots) == 8
    assert alternates(measure.points, interior.roots.points)
    assert alternates(measure.points, exterior.roots.points)
    assert exterior.roots.points[0] < measure.points[0]
    assert exterior.roots.points[-1] > measure.points[-1]
    values = eval_finite(measure, exterior.roots.points) + exterior.roots.points
    np.testing.assert_allclose(values, 0.5, atol=1e-8)


def test_count_difference_on_random_intervals():
    generator = np.random.default_rng(12)
    for _ in range(20):
        measure = random_finite_measure(12, generator)
        roots = solve_level_set(measure, generator.normal()).roots
        intervals = np.sort(generator.uniform(-12, 12, (10, 2)), axis=1)

        assert max_count_difference(measure.config, roots, intervals) <= 1


def test_sign_change_across_each_gap():
    generator = np.random.default_rng(13)
    measure = random_finite_measure(9, generator)
    gaps = np.diff(measure.points)
    offset = 1e-9 * gaps

    left = eval_finite(measure, measure.points[:-1] + offset)
    right = eval_finite(measure, measure.points[1:] - offset)

    assert np.all(left < 0)
    assert np.all(right > 0)


def test_translation_invariance():
    generator = np.random.default_rng(14)
    for _ in range(10):
        measure = random_finite_measure(8, generator)
        y = generator.uniform(-50, 50)
        h = generator.normal()

        base = solve_level_set(measure, h).roots.points
        shifted = solve_level_set(measure.translate(y), h).roots.points

        np.testing.assert_allclose(shifted, base + y, atol=1e-9)


def test_periodic_translation_invariance():
    generator = np.random.default_rng(15)
    measure = random_periodic_measure(6, generator)
    y = 3.7

    base = solve_level_set(measure, 0.4).roots
    shifted = solve_level_set(measure.translate(y), 0.4).roots

    np.testing.assert_allclose(shifted.points, base.translate(y).points, atol=1e-9)


def test_batch_matches_single_solves():
    generator = np.random.default_rng(16)
    measures = [random_periodic_measure(5, generator) for _ in range(4)]
    h = generator.normal(size=4)

    batch = solve_level_set_batch(
        np.stack([m.points for m in measures]),
        np.stack([m.weights for m in measures]),
        h,
        period=measures[0].config.period,
    )

    for row, (measure, level) in enumerate(zip(measures, h)):
        single = solve_level_set(measure, level)
        np.testing.assert_allclose(batch.roots[row], single.roots.points, atol=1e-12)


def test_degenerate_gap_reported_at_midpoint():
    batch = solve_level_set_batch([[0.0, 1e-14, 5.0]], [[1.0, 1.0, 1.0]], 0.0)

    assert batch.degenerate[0, 0]
    assert not batch.degenerate[0, 1]
    assert batch.roots[0, 0] == pytest.approx(5e-15)


def test_rejects_duplicates_and_bad_modes():
    with pytest.raises(ConfigurationError):
        solve_level_set_batch([[0.0, 0.0, 1.0]], [[1.0, 1.0, 1.0]], 0.0)

    with pytest.raises(ConfigurationError):
        solve_level_set_batch([[0.0, 1.0]], [[1.0, 1.0]], 0.0, exterior=True)

    with pytest.raises(ConfigurationError):
        solve_level_set_batch([[0.0, 1.0]], [[1.0, 1.0]], np.inf)


def test_compensated_level_set_interlaces():
    generator = np.random.default_rng(17)
    points = np.sort(generator.uniform(-30, 30, 20))
    measure = WeightedConfiguration(PointConfiguration(points), generator.exponential(2.0, 20))
    compensation = WindowCompensation(31.0, 2.0, density=1 / (2 * np.pi))

    result = solve_level_set(measure, 0.0, compensation=compensation)

    assert len(result.roots) == 19
    assert alternates(points, result.roots.points)
    assert result.residual < 1e-8


def test_sidecar_keys(antipodal_measure: WeightedConfiguration):
    sidecar = solve_level_set(antipodal_measure, 1.0).sidecar()
    assert set(sidecar) == {"residual", "degenerate_gaps", "iterations"}
