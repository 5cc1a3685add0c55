import numpy as np
import pytest

from package.core.rng import RngSpec
from package.verify.options import VerifyOptions
from package.verify.variance import gbe_chunk, variance_log


def test_gbe_chunk_lines():
    lines = gbe_chunk((1, 3), n=20, beta=2.0, rng=RngSpec(4))

    assert len(lines) == 3
    assert all(len(line) == 20 and np.all(np.diff(line.points) > 0) for line in lines)


@pytest.mark.slow
def test_variance_suite_reports_and_artifacts():
    options = VerifyOptions(RngSpec(12), n=200, replicas=100)

    outcome = variance_log(options)

    assert [r.test for r in outcome.reports] == [
        "sine-log-slope",
        "sine-log-fit-ratio",
        "sine-max-discrepancy",
        "gbe-log-constant",
    ]
    assert set(outcome.artifacts) == {"sine_variance.csv", "gbe_variance.csv"}
    assert outcome.reports[2].passed and outcome.reports[3].passed
