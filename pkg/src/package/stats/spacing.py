from typing import Sequence

import numpy as np
import pandas as pd

from package import key
from package.core.errors import ConfigurationError
from package.core.types import PointConfiguration


def spacings(line: PointConfiguration, low: float, high: float) -> np.ndarray:
    """Gaps between consecutive points of the line inside [low, high]."""
    return np.diff(line.unrolled(low, high))


class SpacingHistogram:
    """
    Normalized histogram of spacings over the fixed schema of 64 bins on
    [0, 8π]. Larger spacings are counted in the last bin.
    """

    def __init__(self, values: np.ndarray):
        if len(values) == 0:
            raise ConfigurationError("No spacings in the region")
        self.values = values
        self.edges = np.linspace(0, key.SPACING_RANGE, key.SPACING_BINS + 1)
        clipped = np.minimum(values, np.nextafter(key.SPACING_RANGE, 0))
        counts, _ = np.histogram(clipped, bins=self.edges)
        self.mass = counts / counts.sum()

    @property
    def mean(self) -> float:
        return float(np.mean(self.values))

    def to_df(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                key.BIN_LEFT_KEY: self.edges[:-1],
                key.BIN_RIGHT_KEY: self.edges[1:],
                key.MASS_KEY: self.mass,
            }
        )


def spacing_distribution(lines: Sequence[PointConfiguration], low: float, high: float) -> SpacingHistogram:
    if not low < high:
        raise ConfigurationError(f"Empty region [{low}, {high}]")
    values = np.concatenate([spacings(line, low, high) for line in lines]) if lines else np.zeros(0)
    return SpacingHistogram(values)
