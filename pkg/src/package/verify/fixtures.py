import pytest

from package.core.rng import RngSpec
from package.verify.options import VerifyOptions


@pytest.fixture
def quick_options() -> VerifyOptions:
    return VerifyOptions(RngSpec(31, 2), trials=30, replicas=400)
