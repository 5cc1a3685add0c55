import numpy as np
import pytest

from package.core.errors import ConfigurationError
from package.core.fixtures import random_circle_measure
from package.core.types import CircularConfiguration, max_angular_deviation
from package.opuc.oracle import (
    cmv_matrix,
    measure_to_verblunsky,
    szego_recursion,
    transition_oracle,
    verblunsky_to_support,
)
from package.opuc.schur import SchurFunction, schur_eval
from package.opuc.verblunsky import VerblunskySequence


def test_point_mass_coefficient():
    u0 = np.exp(1.1j)
    v = measure_to_verblunsky(CircularConfiguration([1.1], [1.0]))

    assert v.alphas[0] == pytest.approx(np.conj(u0))


def test_symmetric_pair_coefficients(two_point_circle: CircularConfiguration):
    v = measure_to_verblunsky(two_point_circle)

    assert v.alphas[0] == pytest.approx(0.0, abs=1e-15)
    assert abs(v.alphas[1]) == pytest.approx(1.0)


def test_measure_requires_weights():
    with pytest.raises(ConfigurationError):
        measure_to_verblunsky(CircularConfiguration([0.0, 1.0]))


def test_support_of_point_mass():
    support = verblunsky_to_support(VerblunskySequence([np.exp(-0.4j)]))
    np.testing.assert_allclose(support.angles, [0.4])


def test_support_of_monomial_sequence():
    n = 6
    support = verblunsky_to_support(VerblunskySequence([0] * (n - 1) + [1]))

    roots_of_unity = CircularConfiguration(2 * np.pi * np.arange(n) / n)
    assert max_angular_deviation(support, roots_of_unity) < 1e-12
    u = support.unit_points
    f = SchurFunction(VerblunskySequence([0] * (n - 1) + [1]))
    np.testing.assert_allclose(u * schur_eval(f, u), 1.0, atol=1e-12)


def test_cmv_characteristic_polynomial_is_paraorthogonal():
    generator = np.random.default_rng(30)
    inner = 0.8 * generator.uniform(0, 1, 3) * np.exp(1j * generator.uniform(0, 2 * np.pi, 3))
    v = VerblunskySequence(np.append(inner, np.exp(0.5j)))
    z = np.array([0.3 + 0.2j, -1.1j, 2.0])

    phi, _, _ = szego_recursion(v, z)
    characteristic = np.array([np.linalg.det(zi * np.eye(4) - cmv_matrix(v)) for zi in z])

    np.testing.assert_allclose(characteristic, phi, rtol=1e-10, atol=1e-12)


def test_cmv_matrix_is_unitary():
    v = VerblunskySequence([0.3j, -0.5, 0.1 + 0.1j, np.exp(2j)])
    c = cmv_matrix(v)
    np.testing.assert_allclose(c @ c.conj().T, np.eye(4), atol=1e-14)


def test_round_trip_support():
    generator = np.random.default_rng(31)
    for _ in range(50):
        n = int(generator.integers(1, 7))
        sigma = random_circle_measure(n, generator)
        if n > 1 and np.min(sigma.angles[1:] - sigma.angles[:-1]) < 1e-3:
            continue

        support = verblunsky_to_support(measure_to_verblunsky(sigma))

        assert max_angular_deviation(support, sigma) < 1e-8


def test_support_is_on_circle_and_simple():
    generator = np.random.default_rng(32)
    for n in [2, 8, 16]:
        inner = np.sqrt(generator.uniform(0, 1, n - 1)) * np.exp(1j * generator.uniform(0, 2 * np.pi, n - 1))
        v = VerblunskySequence(np.append(inner, np.exp(1j * generator.uniform(0, 2 * np.pi))))
        support = verblunsky_to_support(v)

        assert len(support) == n
        np.testing.assert_allclose(np.abs(support.unit_points), 1.0, atol=1e-10)
        phi, _, _ = szego_recursion(v, support.unit_points)
        assert np.max(np.abs(phi)) < 1e-8


def test_transition_oracle_point_mass():
    eta = np.exp(0.6j)
    result = transition_oracle(CircularConfiguration([1.0], [1.0]), eta)
    np.testing.assert_allclose(result.angles, [1.6])


def test_transition_oracle_identity_rotation():
    generator = np.random.default_rng(33)
    sigma = random_circle_measure(5, generator)

    assert max_angular_deviation(transition_oracle(sigma, 1.0), sigma) < 1e-8
