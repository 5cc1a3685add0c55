import numpy as np
import pytest

from package.core.errors import ConfigurationError, PoleCollisionError
from package.opuc.schur import SchurFunction, caratheodory_from_schur, schur_eval
from package.opuc.verblunsky import VerblunskySequence


def random_sequence(n: int, generator: np.random.Generator) -> VerblunskySequence:
    inner = np.sqrt(generator.uniform(0, 1, n - 1)) * np.exp(1j * generator.uniform(0, 2 * np.pi, n - 1))
    return VerblunskySequence(np.append(inner, np.exp(1j * generator.uniform(0, 2 * np.pi))))


def test_constant_schur_function():
    c = np.exp(0.7j)
    f = SchurFunction(VerblunskySequence([c]))

    for u in [0.0, 0.3 + 0.1j, 1j]:
        assert schur_eval(f, u) == pytest.approx(c)


def test_two_step_composition():
    c = np.exp(-1.2j)
    f = SchurFunction(VerblunskySequence([0.0, c]))

    assert schur_eval(f, 0.4 - 0.2j) == pytest.approx((0.4 - 0.2j) * c)


def test_monomial_schur_function():
    c = np.exp(2.0j)
    n = 5
    f = SchurFunction(VerblunskySequence([0, 0, 0, 0, c]))
    u = 0.8 * np.exp(0.4j)

    assert f(u) == pytest.approx(u ** (n - 1) * c)


def test_schur_bound_on_disc():
    generator = np.random.default_rng(21)
    u = np.sqrt(generator.uniform(0, 1, 1000)) * np.exp(1j * generator.uniform(0, 2 * np.pi, 1000))
    for n in range(1, 17):
        f = SchurFunction(random_sequence(n, generator))
        assert np.all(np.abs(schur_eval(f, u)) <= 1 + 1e-12)


def test_schur_rejects_points_outside_disc():
    f = SchurFunction(VerblunskySequence([1.0]))
    with pytest.raises(ConfigurationError):
        schur_eval(f, 1.5)


def test_caratheodory_examples():
    u0 = np.exp(0.9j)
    point_mass = SchurFunction(VerblunskySequence([np.conj(u0)]))

    assert caratheodory_from_schur(point_mass, -u0) == pytest.approx(0.0, abs=1e-15)
    assert caratheodory_from_schur(point_mass, 0.0) == pytest.approx(1j)

    with pytest.raises(PoleCollisionError):
        caratheodory_from_schur(point_mass, u0)


def test_caratheodory_is_real_on_circle():
    generator = np.random.default_rng(22)
    f = SchurFunction(random_sequence(6, generator))
    u = np.exp(1j * generator.uniform(0, 2 * np.pi, 50))

    assert np.max(np.abs(np.imag(caratheodory_from_schur(f, u)))) < 1e-10 * np.max(
        np.abs(caratheodory_from_schur(f, u))
    ) + 1e-10
