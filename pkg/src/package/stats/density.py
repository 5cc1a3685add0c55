import math

import numpy as np
from scipy import special, stats

from package.core.errors import ConfigurationError
from package.core.rng import validate_beta

MIN_EXPECTED_COUNT = 5.0


def _log_normalization(beta: float) -> float:
    # Normal(0, 2/β) for g times Gamma(β/2, scale 2/β) for w
    return 0.5 * math.log(beta / (4 * math.pi)) - special.gammaln(beta / 2) - (beta / 2) * math.log(2 / beta)


def corners_transition_density(mu1, mu2, lam: float, beta: float) -> np.ndarray:
    """
    Density of the two points μ_1 < λ < μ_2 after one corners step from {λ}:

        (μ_2 − μ_1) · ((λ − μ_1)(μ_2 − λ))^{β/2 − 1} · exp(−β(μ_1² + μ_2² − λ²)/4) / Z,

    which is the law of (g, w) = (μ_1 + μ_2 − λ, (λ − μ_1)(μ_2 − λ)) pushed
    forward. Zero outside μ_1 < λ < μ_2.
    """
    validate_beta(beta)
    mu1 = np.asarray(mu1, dtype=float)
    mu2 = np.asarray(mu2, dtype=float)
    a = lam - mu1
    b = mu2 - lam
    inside = (a > 0) & (b > 0)
    a = np.where(inside, a, 1.0)
    b = np.where(inside, b, 1.0)
    log_density = (
        _log_normalization(beta)
        + np.log(a + b)
        + (beta / 2 - 1) * np.log(a * b)
        - beta * ((lam + b - a) ** 2 / 4 + a * b / 2)
    )
    return np.where(inside, np.exp(log_density), 0.0)


def _smoothed_density(t, u, lam: float, beta: float) -> np.ndarray:
    """
    The density in the coordinates t = (λ − μ_1)^{β/2}, u = (μ_2 − λ)^{β/2},
    where the edge singularity of the Gamma weight disappears.
    """
    p = 2 / beta
    a = t**p
    b = u**p
    log_density = (
        _log_normalization(beta)
        + 2 * math.log(p)
        + np.log(a + b)
        - beta * ((lam + b - a) ** 2 / 4 + a * b / 2)
    )
    return np.exp(log_density)


class DensityGrid:
    """
    Bins of the corners transition density on a grid that is uniform in
    t = (λ − μ_1)^{β/2} and u = (μ_2 − λ)^{β/2} up to `gap_max`, plus one
    outside bin collecting the rest. Cell probabilities use tensor
    Gauss–Legendre quadrature.
    """

    def __init__(self, lam: float, beta: float, gap_max: float = 6.0, bins: int = 8, order: int = 12):
        validate_beta(beta)
        if gap_max <= 0 or bins < 1:
            raise ConfigurationError("The density grid needs a positive extent and at least one bin")
        self.lam = float(lam)
        self.beta = float(beta)
        self.bins = bins
        self.edges = np.linspace(0, gap_max ** (beta / 2), bins + 1)

        nodes, weights = special.roots_legendre(order)
        half = np.diff(self.edges) / 2
        mid = (self.edges[:-1] + self.edges[1:]) / 2
        # (bins, order) nodes and weights per axis
        points = mid[:, None] + half[:, None] * nodes[None, :]
        scaled = half[:, None] * weights[None, :]

        t = points[:, None, :, None]
        u = points[None, :, None, :]
        values = _smoothed_density(t, u, self.lam, self.beta)
        cells = np.einsum("ik,jl,ijkl->ij", scaled, scaled, values)
        self.probabilities = np.append(cells.reshape(-1), max(1.0 - cells.sum(), 0.0))

    def assign(self, mu1: np.ndarray, mu2: np.ndarray) -> np.ndarray:
        """Bin index of each sample; the last index is the outside bin."""
        t = (self.lam - np.asarray(mu1)) ** (self.beta / 2)
        u = (np.asarray(mu2) - self.lam) ** (self.beta / 2)
        i = np.searchsorted(self.edges, t, side="right") - 1
        j = np.searchsorted(self.edges, u, side="right") - 1
        inside = (i >= 0) & (i < self.bins) & (j >= 0) & (j < self.bins)
        return np.where(inside, i * self.bins + j, self.bins * self.bins)

    def observed(self, mu1: np.ndarray, mu2: np.ndarray) -> np.ndarray:
        return np.bincount(self.assign(mu1, mu2), minlength=len(self.probabilities))


def merge_small_bins(observed: np.ndarray, expected: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Pools every bin with fewer than 5 expected counts into one bin."""
    small = expected < MIN_EXPECTED_COUNT
    if not small.any():
        return observed, expected
    return (
        np.append(observed[~small], observed[small].sum()),
        np.append(expected[~small], expected[small].sum()),
    )


def corners_density_chi_square(mu1: np.ndarray, mu2: np.ndarray, lam: float, beta: float, **grid_kwargs):
    """Chi-square goodness of fit of samples (μ_1, μ_2) against the transition density."""
    mu1 = np.asarray(mu1, dtype=float)
    mu2 = np.asarray(mu2, dtype=float)
    if len(mu1) == 0 or len(mu1) != len(mu2):
        raise ConfigurationError("Need equally many nonempty samples of μ_1 and μ_2")
    if np.any(mu1 >= lam) or np.any(mu2 <= lam):
        raise ConfigurationError("Samples must straddle λ")

    grid = DensityGrid(lam, beta, **grid_kwargs)
    observed = grid.observed(mu1, mu2)
    expected = len(mu1) * grid.probabilities
    observed, expected = merge_small_bins(observed, expected)
    # quadrature leaves a tiny mismatch between the totals
    expected = expected * observed.sum() / expected.sum()
    return stats.chisquare(observed, expected)
