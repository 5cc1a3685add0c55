from typing import Optional

import numpy as np

from package.core.types import PointConfiguration


def alternates(a: np.ndarray, b: np.ndarray, period: Optional[float] = None) -> bool:
    """
    True when the sorted points of a and b strictly alternate. With a period
    the alternation is cyclic, which needs equally many points on each side.
    """
    if period is not None and len(a) != len(b):
        return False
    values = np.concatenate([a, b])
    labels = np.concatenate([np.zeros(len(a), dtype=int), np.ones(len(b), dtype=int)])
    order = np.argsort(values, kind="stable")
    values, labels = values[order], labels[order]

    if np.any(np.diff(values) <= 0):
        return False
    return bool(np.all(labels[1:] != labels[:-1]))


def overlap(old: PointConfiguration, new: PointConfiguration) -> tuple[float, float]:
    if len(old) == 0 or len(new) == 0:
        return 0.0, -1.0
    return max(old.points[0], new.points[0]), min(old.points[-1], new.points[-1])


def interlaces(
    old: PointConfiguration,
    new: PointConfiguration,
    low: Optional[float] = None,
    high: Optional[float] = None,
) -> bool:
    """
    Strict alternation of two consecutive lines. Periodic lines are compared
    cyclically; finite lines on [low, high], by default their overlap.
    """
    if old.is_periodic and new.is_periodic and low is None and high is None:
        return alternates(old.points, new.points, old.period)

    if low is None or high is None:
        lo, hi = overlap(old, new)
        low = lo if low is None else low
        high = hi if high is None else high
    if high < low:
        return True
    return alternates(old.unrolled(low, high), new.unrolled(low, high))


def count_difference(
    old: PointConfiguration, new: PointConfiguration, low: float, high: float
) -> int:
    """|#(new ∩ [low, high]) − #(old ∩ [low, high])|"""
    return abs(new.count_in(low, high) - old.count_in(low, high))


def max_count_difference(
    old: PointConfiguration,
    new: PointConfiguration,
    intervals: np.ndarray,
) -> int:
    if len(intervals) == 0:
        return 0
    return max(count_difference(old, new, float(a), float(b)) for a, b in intervals)
