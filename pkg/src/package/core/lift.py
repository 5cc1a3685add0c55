import numpy as np

from package.core.errors import ConfigurationError
from package.core.types import (
    TWO_PI,
    CircularConfiguration,
    PeriodicLift,
    PointConfiguration,
    WeightedConfiguration,
)


def lift_circle_to_line(c: CircularConfiguration, n: int) -> PointConfiguration:
    """
    The 2πn-periodic set {z : e^{iz/n} is a point of c}, stored by its
    representatives n·θ_j in [0, 2πn).
    """
    if len(c) != n:
        raise ConfigurationError(f"Cannot lift {len(c)} angles with n={n}")
    return PointConfiguration(n * c.angles, PeriodicLift(n))


def project_line_to_circle(p: PointConfiguration) -> CircularConfiguration:
    if not isinstance(p.geometry, PeriodicLift):
        raise ConfigurationError("Only periodic configurations project to the circle")
    return CircularConfiguration(np.mod(p.points / p.geometry.n, TWO_PI))


def lift_measure(sigma: CircularConfiguration) -> WeightedConfiguration:
    """Lifts σ = Σ ρ_j δ_{u_j} to Λ with weights γ_j = 2n·ρ_j."""
    if sigma.weights is None:
        raise ConfigurationError("Lifting a measure needs circle weights")
    n = len(sigma)
    return WeightedConfiguration.from_points(
        n * sigma.angles, 2 * n * sigma.weights, PeriodicLift(n), normalized=True
    )


def project_measure(measure: WeightedConfiguration) -> CircularConfiguration:
    if not isinstance(measure.geometry, PeriodicLift):
        raise ConfigurationError("Only periodic measures project to the circle")
    n = measure.geometry.n
    rho = measure.weights / measure.weights.sum()
    return CircularConfiguration(np.mod(measure.points / n, TWO_PI), rho)
