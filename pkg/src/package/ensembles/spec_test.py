import pytest

from package import key
from package.core.errors import ConfigurationError
from package.ensembles.spec import EnsembleKind, EnsembleSpec, GbeMethod, default_approx_n


def test_default_approx_n():
    assert default_approx_n(10.0) == 256
    assert default_approx_n(100.0) == 800


def test_sine_window_spec():
    spec = EnsembleSpec.sine_window(50.0, beta=2.0)

    assert spec.approx_n == 400
    assert spec.to_dict() == {
        key.KIND_KEY: "sine-window",
        key.BETA_KEY: 2.0,
        "window_halfwidth": 50.0,
        "approx_n": 400,
    }


def test_rejects_bad_specs():
    with pytest.raises(ConfigurationError):
        EnsembleSpec.circular(0, 2.0)
    with pytest.raises(ConfigurationError):
        EnsembleSpec.gaussian(3, -1.0)
    with pytest.raises(ConfigurationError):
        EnsembleSpec.sine_window(0.0, 2.0)
    with pytest.raises(ConfigurationError):
        EnsembleSpec.sine_window(100.0, 2.0, approx_n=50)


def test_enum_parsing():
    assert EnsembleKind.from_str("cbe") == EnsembleKind.CIRCULAR_BETA
    assert GbeMethod.from_str("tridiagonal") == GbeMethod.TRIDIAGONAL_ORACLE
    assert len(EnsembleKind.all()) == 3
    with pytest.raises(ConfigurationError):
        GbeMethod.from_str("dense")
