from typing import Callable

from package import key
from package.core.errors import ConfigurationError
from package.logger import Timed
from package.run_config import RunConfig
from package.stats.report import SuiteReport
from package.verify.bead_limit import bead_limit
from package.verify.corners import corners_density, corners_marginal
from package.verify.invariance import invariance_periodic, invariance_sine
from package.verify.options import VerifyOptions
from package.verify.oracle import oracle_opuc, parameter_maps
from package.verify.outcome import SuiteOutcome
from package.verify.structural import interlacing, stieltjes
from package.verify.variance import variance_log

Suite = Callable[[VerifyOptions], SuiteOutcome]

SUITES: dict[str, Suite] = {
    key.SUITE_INVARIANCE_PERIODIC: invariance_periodic,
    key.SUITE_INVARIANCE_SINE: invariance_sine,
    key.SUITE_ORACLE_OPUC: oracle_opuc,
    key.SUITE_VARIANCE_LOG: variance_log,
    key.SUITE_CORNERS_MARGINAL: corners_marginal,
    key.SUITE_CORNERS_DENSITY: corners_density,
    key.SUITE_BEAD_LIMIT: bead_limit,
    key.SUITE_INTERLACING: interlacing,
    key.SUITE_STIELTJES: stieltjes,
    key.SUITE_PARAMETER_MAPS: parameter_maps,
}


def get_suite(name: str) -> Suite:
    if name not in SUITES:
        raise ConfigurationError(f"Unknown suite {name!r}, expected one of {', '.join(SUITES)}")
    return SUITES[name]


def run_suite(name: str, options: VerifyOptions, run_config: RunConfig) -> SuiteReport:
    suite = get_suite(name)
    with Timed.info(f"Running suite {name}"):
        outcome = suite(options)
    return SuiteReport(name, outcome.reports, run_config.to_dict(), outcome.artifacts)
