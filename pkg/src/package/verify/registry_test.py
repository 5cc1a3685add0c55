import pytest

from package import key
from package.core.errors import ConfigurationError
from package.core.rng import RngSpec
from package.run_config import RunConfig
from package.verify.options import VerifyOptions
from package.verify.registry import SUITES, get_suite, run_suite


def test_every_acceptance_suite_is_registered():
    for name in [
        key.SUITE_INVARIANCE_PERIODIC,
        key.SUITE_INVARIANCE_SINE,
        key.SUITE_ORACLE_OPUC,
        key.SUITE_VARIANCE_LOG,
        key.SUITE_CORNERS_MARGINAL,
        key.SUITE_CORNERS_DENSITY,
        key.SUITE_BEAD_LIMIT,
    ]:
        assert name in SUITES


def test_unknown_suite():
    with pytest.raises(ConfigurationError):
        get_suite("no-such-suite")


def test_run_suite_carries_run_config():
    rng = RngSpec(9)
    run_config = RunConfig(key.VERIFY_COMMAND_NAME, rng, {"suite": key.SUITE_PARAMETER_MAPS})

    report = run_suite(key.SUITE_PARAMETER_MAPS, VerifyOptions(rng), run_config)

    assert report.passed
    data = report.to_dict()
    assert data["suite"] == key.SUITE_PARAMETER_MAPS
    assert data["run_config"]["rng"] == "philox:9:0"
    assert len(data["reports"]) == 3
