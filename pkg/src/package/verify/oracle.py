import math

import numpy as np

from package import key
from package.chains.params import boutillier_gamma, level_from_alpha
from package.chains.steps.periodic import periodic_transition
from package.core.lift import lift_measure, project_line_to_circle
from package.core.rng import sample_dirichlet_weights
from package.core.types import CircularConfiguration, max_angular_deviation
from package.ensembles.circular import sample_cbe
from package.logger import rlog
from package.opuc.oracle import transition_oracle
from package.opuc.verblunsky import eta_to_h, h_to_eta
from package.stats.report import StatsReport
from package.verify.options import VerifyOptions
from package.verify.outcome import SuiteOutcome

ORACLE_NS = list(range(2, 9))
ORACLE_BETAS = [1.0, 2.0, 4.0]
ORACLE_TRIALS = 200


def oracle_deviation(n: int, beta: float, gen: np.random.Generator) -> float:
    """Angular deviation between the solver transition and the OPUC rotation for one random instance."""
    support = sample_cbe(n, beta, gen)
    sigma = CircularConfiguration(support.angles, sample_dirichlet_weights(n, beta, gen))
    eta = np.exp(1j * gen.uniform(0, 2 * np.pi))

    roots = periodic_transition(lift_measure(sigma), eta_to_h(eta))
    return max_angular_deviation(project_line_to_circle(roots), transition_oracle(sigma, eta))


def oracle_opuc(options: VerifyOptions) -> SuiteOutcome:
    gen = options.rng.generator()
    trials = options.trial_count(ORACLE_TRIALS)
    ns = options.ns(ORACLE_NS)
    betas = options.betas(ORACLE_BETAS)

    deviations = np.array(
        [oracle_deviation(int(gen.choice(ns)), float(gen.choice(betas)), gen) for _ in range(trials)]
    )
    worst = float(deviations.max(initial=0.0))
    rlog.debug(f"Oracle deviations: median {np.median(deviations):.2e}, max {worst:.2e}")

    report = StatsReport(
        "max-angular-deviation",
        worst,
        key.ORACLE_TOLERANCE,
        trials,
        options.rng,
        details={"ns": ns, "betas": betas},
    )
    return SuiteOutcome([report])


def parameter_maps(options: VerifyOptions) -> SuiteOutcome:
    expected_levels = {0.0: 0.0, 1.0: -1 / math.sqrt(3), -1.0: 1 / math.sqrt(3)}
    expected_gammas = {0.0: 0.0, 1.0: 0.5, -1.0: -0.5}

    level_error = max(abs(level_from_alpha(a) - h) for a, h in expected_levels.items())
    gamma_error = max(abs(boutillier_gamma(level_from_alpha(a)) - g) for a, g in expected_gammas.items())
    eta_error = max(abs(eta_to_h(h_to_eta(h)) - h) for h in expected_levels.values())

    details = {str(a): {"h": level_from_alpha(a), "gamma": boutillier_gamma(level_from_alpha(a))} for a in expected_levels}
    return SuiteOutcome(
        [
            StatsReport("level-from-alpha", level_error, 1e-15, 1, options.rng, details=details),
            StatsReport("boutillier-gamma", gamma_error, 1e-15, 1, options.rng),
            StatsReport("eta-round-trip", eta_error, 1e-12, 1, options.rng),
        ]
    )
