import numpy as np
import pandas as pd

from package import key
from package.core.errors import ConfigurationError


class VerblunskySequence:
    """
    Coefficients α_0..α_{n−1} of a measure with n atoms on the unit circle:
    α_0..α_{n−2} in the open disc and α_{n−1} on the circle.
    """

    def __init__(self, alphas):
        values = np.array(alphas, dtype=complex).reshape(-1)
        if len(values) < 1:
            raise ConfigurationError("A Verblunsky sequence needs at least one coefficient")
        if not np.all(np.isfinite(values)):
            raise ConfigurationError("Verblunsky coefficients must be finite")

        moduli = np.abs(values)
        if np.any(moduli[:-1] >= 1):
            idx = int(np.argmax(moduli[:-1]))
            raise ConfigurationError(f"|α_{idx}| = {moduli[idx]} is not inside the unit disc")
        if abs(moduli[-1] - 1) > key.UNIT_MODULUS_TOLERANCE:
            raise ConfigurationError(f"The last coefficient must be unimodular, got |α| = {moduli[-1]}")

        values.setflags(write=False)
        self._alphas = values

    @property
    def alphas(self) -> np.ndarray:
        return self._alphas

    @property
    def rho(self) -> np.ndarray:
        """ρ_j = √(1 − |α_j|²), zero for the last coefficient."""
        return np.sqrt(np.maximum(1 - np.abs(self._alphas) ** 2, 0.0))

    def __len__(self) -> int:
        return len(self._alphas)

    def __repr__(self) -> str:
        return f"VerblunskySequence({self._alphas.tolist()})"

    def to_df(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                key.INDEX_KEY: np.arange(len(self._alphas)),
                key.RE_KEY: self._alphas.real,
                key.IM_KEY: self._alphas.imag,
            },
            columns=key.VERBLUNSKY_COLUMNS,
        )

    @staticmethod
    def from_df(df: pd.DataFrame) -> "VerblunskySequence":
        df = df.sort_values(key.INDEX_KEY)
        return VerblunskySequence(df[key.RE_KEY].to_numpy() + 1j * df[key.IM_KEY].to_numpy())


def validate_unimodular(eta: complex):
    if abs(abs(eta) - 1) > key.UNIT_MODULUS_TOLERANCE:
        raise ConfigurationError(f"η must lie on the unit circle, got |η| = {abs(eta)}")


def rotate_verblunsky(v: VerblunskySequence, eta: complex) -> VerblunskySequence:
    """Multiplies every coefficient by η⁻¹."""
    validate_unimodular(eta)
    rotated = v.alphas / eta
    # keep the last coefficient exactly unimodular
    rotated[-1] /= abs(rotated[-1])
    return VerblunskySequence(rotated)


def h_to_eta(h: float) -> complex:
    """η = (h − i)/(h + i), the rotation matching the level h."""
    return (h - 1j) / (h + 1j)


def eta_to_h(eta: complex) -> float:
    """h = i(1 + η)/(1 − η); η = 1 corresponds to an infinite level."""
    validate_unimodular(eta)
    if abs(1 - eta) < key.UNIT_MODULUS_TOLERANCE:
        return np.inf
    return float(np.real(1j * (1 + eta) / (1 - eta)))
