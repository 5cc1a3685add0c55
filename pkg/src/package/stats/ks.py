import numpy as np
from scipy import stats

from package.core.errors import ConfigurationError


class KsResult:
    def __init__(self, distance: float, p_value: float):
        self.distance = distance
        self.p_value = p_value

    def __iter__(self):
        return iter((self.distance, self.p_value))

    def __repr__(self) -> str:
        return f"KsResult(distance={self.distance:.5f}, p_value={self.p_value:.4g})"


def ks_two_sample(a, b) -> KsResult:
    """Two-sample Kolmogorov–Smirnov distance with its asymptotic p-value."""
    a = np.asarray(a, dtype=float).reshape(-1)
    b = np.asarray(b, dtype=float).reshape(-1)
    if len(a) == 0 or len(b) == 0:
        raise ConfigurationError("Both samples must be nonempty")
    result = stats.ks_2samp(a, b, method="asymp")
    return KsResult(float(result.statistic), float(result.pvalue))
