import numpy as np

from package import key
from package.verify.options import VerifyOptions
from package.verify.oracle import oracle_deviation, oracle_opuc, parameter_maps


def test_single_instance_matches_oracle():
    generator = np.random.default_rng(8)

    for n in [2, 5, 8]:
        assert oracle_deviation(n, 2.0, generator) < key.ORACLE_TOLERANCE


def test_oracle_suite_passes(quick_options: VerifyOptions):
    outcome = oracle_opuc(quick_options)

    (report,) = outcome.reports
    assert report.passed
    assert report.n_replicas == 30
    assert report.details["ns"] == list(range(2, 9))


def test_oracle_suite_honours_overrides(quick_options: VerifyOptions):
    quick_options.n = 6
    quick_options.beta = 2.0

    (report,) = oracle_opuc(quick_options).reports

    assert report.details == {"ns": [6], "betas": [2.0]}
    assert report.statistic < key.ORACLE_TOLERANCE


def test_parameter_maps_pass(quick_options: VerifyOptions):
    outcome = parameter_maps(quick_options)

    assert len(outcome.reports) == 3
    assert all(report.passed for report in outcome.reports)
