import numpy as np

from package import key
from package.core.errors import ConfigurationError, PoleCollisionError
from package.opuc.verblunsky import VerblunskySequence


class SchurFunction:
    """
    f_σ(u) = R_{α_0} ∘ M_u ∘ R_{α_1} ∘ … ∘ M_u(α_{n−1}) with the Möbius maps
    R_α(z) = (α + z)/(1 + ᾱz) and M_u(z) = u·z.
    """

    def __init__(self, alphas: VerblunskySequence):
        self.alphas = alphas

    def __call__(self, u):
        return schur_eval(self, u)

    def __repr__(self) -> str:
        return f"SchurFunction(n={len(self.alphas)})"


def schur_eval(f: SchurFunction, u):
    """
    Nested evaluation of the Geronimus composition in homogeneous
    coordinates (p : q), renormalized at every step so that vanishing
    intermediate denominators are carried through as points at infinity.
    """
    values = np.asarray(u, dtype=complex)
    if np.any(np.abs(values) > 1 + key.UNIT_MODULUS_TOLERANCE):
        raise ConfigurationError("Schur functions are evaluated on the closed unit disc")

    alphas = f.alphas.alphas
    p = np.full(values.shape, alphas[-1], dtype=complex)
    q = np.ones(values.shape, dtype=complex)
    for alpha in alphas[-2::-1]:
        p = values * p
        p, q = alpha * q + p, q + np.conj(alpha) * p
        scale = np.maximum(np.abs(p), np.abs(q))
        scale = np.where(scale > 0, scale, 1.0)
        p, q = p / scale, q / scale

    with np.errstate(divide="ignore", invalid="ignore"):
        result = p / q
    return result.item() if result.ndim == 0 else result


def caratheodory_from_schur(f: SchurFunction, u):
    """
    i·∫ (v + u)/(v − u) dσ(v) = i(1 + u f(u))/(1 − u f(u)), real on the circle
    away from the support of σ.
    """
    values = np.asarray(u, dtype=complex)
    uf = values * np.asarray(schur_eval(f, values))
    if np.any(np.abs(1 - uf) < key.POLE_TOLERANCE):
        raise PoleCollisionError("u is a point of the support, u·f(u) = 1")
    result = 1j * (1 + uf) / (1 - uf)
    return result.item() if result.ndim == 0 else result
