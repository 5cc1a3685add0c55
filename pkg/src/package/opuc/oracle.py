import numpy as np
from numpy.polynomial import polynomial as P

from package import key
from package.core.errors import ConfigurationError, RootCountError
from package.core.types import TWO_PI, CircularConfiguration
from package.opuc.verblunsky import VerblunskySequence, rotate_verblunsky


def measure_to_verblunsky(sigma: CircularConfiguration) -> VerblunskySequence:
    """
    Schur algorithm on the rational Schur function of an atomic measure.

    With F(u) = Σ ρ_j (u_j + u)/(u_j − u) = N/D, the Schur function is
    f = A/B with A = (N − D)/u and B = N + D. Each step reads α_k = A(0)/B(0)
    and replaces f by u⁻¹(f − α_k)/(1 − ᾱ_k f), which lowers both degrees by one.
    """
    if sigma.weights is None:
        raise ConfigurationError("The measure needs weights summing to 1")
    n = len(sigma)
    if n > key.MAX_VERBLUNSKY_ORACLE_SIZE:
        raise ConfigurationError(
            f"The rational Schur algorithm is limited to n <= {key.MAX_VERBLUNSKY_ORACLE_SIZE}, got {n}"
        )

    atoms = sigma.unit_points
    rho = sigma.weights

    # Π_i (u_i − u) in ascending coefficients
    denominator = P.polyfromroots(atoms) * (-1) ** n
    numerator = np.zeros(n + 1, dtype=complex)
    for j in range(n):
        others = P.polyfromroots(np.delete(atoms, j)) * (-1) ** (n - 1)
        numerator[: n + 1] += rho[j] * P.polymul([atoms[j], 1.0], others)[: n + 1]

    a = (numerator - denominator)[1:]
    b = (numerator + denominator)[:n]

    alphas = np.empty(n, dtype=complex)
    for k in range(n):
        alpha = a[0] / b[0]
        alphas[k] = alpha
        if k == n - 1:
            break
        a, b = (a - alpha * b)[1:], (b - np.conj(alpha) * a)[:-1]
        scale = max(np.max(np.abs(a)), np.max(np.abs(b)))
        a, b = a / scale, b / scale

    alphas[-1] /= abs(alphas[-1])
    inside = np.abs(alphas[:-1])
    if np.any(inside >= 1):
        raise ConfigurationError("Schur algorithm left the unit disc, the atoms are too close")
    return VerblunskySequence(alphas)


def szego_recursion(v: VerblunskySequence, z: np.ndarray):
    """
    Φ_n, Φ_n* and Φ_n′ at z from Φ_{k+1} = zΦ_k − ᾱ_kΦ_k* and
    Φ*_{k+1} = Φ*_k − α_k zΦ_k.
    """
    phi = np.ones_like(z, dtype=complex)
    star = np.ones_like(z, dtype=complex)
    dphi = np.zeros_like(z, dtype=complex)
    dstar = np.zeros_like(z, dtype=complex)
    for alpha in v.alphas:
        next_dphi = phi + z * dphi - np.conj(alpha) * dstar
        next_dstar = dstar - alpha * (phi + z * dphi)
        phi, star = z * phi - np.conj(alpha) * star, star - alpha * z * phi
        dphi, dstar = next_dphi, next_dstar
    return phi, star, dphi


def cmv_matrix(v: VerblunskySequence) -> np.ndarray:
    """
    The n×n unitary CMV matrix L·M, whose characteristic polynomial is the
    paraorthogonal Φ_n. L holds the 2×2 blocks Θ_0, Θ_2, …, M holds 1, Θ_1, Θ_3, …,
    and the unimodular last coefficient closes the matrix with a 1×1 block.
    """
    alphas = v.alphas
    rho = v.rho
    n = len(alphas)

    def block(matrix: np.ndarray, j: int):
        if j == n - 1:
            matrix[j, j] = np.conj(alphas[j])
            return
        matrix[j : j + 2, j : j + 2] = [
            [np.conj(alphas[j]), rho[j]],
            [rho[j], -alphas[j]],
        ]

    left = np.zeros((n, n), dtype=complex)
    right = np.zeros((n, n), dtype=complex)
    right[0, 0] = 1.0
    for j in range(0, n, 2):
        block(left, j)
    for j in range(1, n, 2):
        block(right, j)
    return left @ right


def _polish(v: VerblunskySequence, roots: np.ndarray, iterations: int = 2) -> np.ndarray:
    for _ in range(iterations):
        if len(roots) > 1:
            angles = np.sort(np.angle(roots))
            spacing = np.min(np.diff(np.append(angles, angles[0] + TWO_PI)))
        else:
            spacing = np.pi
        phi, _, dphi = szego_recursion(v, roots)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = phi / dphi
        accept = np.isfinite(step) & (np.abs(step) < 0.5 * spacing)
        roots = np.where(accept, roots - step, roots)
        roots = roots / np.abs(roots)
    return roots


def verblunsky_to_support(v: VerblunskySequence) -> CircularConfiguration:
    """
    The n zeros of the paraorthogonal polynomial Φ_n, i.e. the support of the
    measure: eigenvalues of the CMV matrix, polished by Newton steps on the
    Szegő recursion and projected to the circle.
    """
    n = len(v)
    roots = np.linalg.eigvals(cmv_matrix(v))

    if len(roots) != n or np.any(np.abs(np.abs(roots) - 1) > 1e-8):
        raise RootCountError(f"Expected {n} roots on the unit circle")

    roots = _polish(v, roots / np.abs(roots))
    angles = np.mod(np.angle(roots), TWO_PI)
    try:
        return CircularConfiguration(angles)
    except ConfigurationError as e:
        raise RootCountError(f"Paraorthogonal roots are not simple: {e}") from e


def transition_oracle(sigma: CircularConfiguration, eta: complex) -> CircularConfiguration:
    """
    Support of the measure whose Verblunsky coefficients are those of σ
    rotated by η⁻¹: the solutions of the level-set equation at
    h = i(1 + η)/(1 − η), computed without root bracketing.
    """
    return verblunsky_to_support(rotate_verblunsky(measure_to_verblunsky(sigma), eta))
