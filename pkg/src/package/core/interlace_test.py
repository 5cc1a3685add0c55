import numpy as np

from package.core.interlace import alternates, interlaces, max_count_difference
from package.core.types import PeriodicLift, PointConfiguration


def test_alternates_finite():
    assert alternates(np.array([0.0, 2.0]), np.array([-1.0, 1.0, 3.0]))
    assert alternates(np.array([0.0, 2.0]), np.array([1.0]))
    assert not alternates(np.array([0.0, 2.0]), np.array([0.5, 1.0]))
    assert not alternates(np.array([0.0, 2.0]), np.array([2.0]))


def test_alternates_periodic_needs_equal_counts():
    assert alternates(np.array([0.0, 2.0]), np.array([1.0, 3.0]), period=4.0)
    assert not alternates(np.array([0.0, 2.0]), np.array([1.0]), period=4.0)


def test_interlaces_periodic_lines():
    old = PointConfiguration([0.0, 2 * np.pi], PeriodicLift(2))
    new = PointConfiguration([np.pi, 3 * np.pi], PeriodicLift(2))
    bad = PointConfiguration([np.pi, 1.5 * np.pi], PeriodicLift(2))

    assert interlaces(old, new)
    assert not interlaces(old, bad)


def test_interlaces_on_overlap_only():
    old = PointConfiguration([-3.0, -1.0, 1.0, 3.0])
    new = PointConfiguration([-2.0, 0.0, 2.0, 10.0, 10.5])

    assert interlaces(old, new)
    assert not interlaces(old, new, -5.0, 11.0)


def test_max_count_difference():
    old = PointConfiguration([-1.0, 1.0])
    new = PointConfiguration([-2.0, 0.0, 2.0])
    intervals = np.array([[-3.0, 3.0], [-0.5, 0.5], [0.5, 1.5]])

    assert max_count_difference(old, new, intervals) == 1
