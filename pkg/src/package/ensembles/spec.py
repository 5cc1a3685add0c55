import math
from enum import Enum
from typing import Optional

from package import key
from package.core.errors import ConfigurationError
from package.core.rng import validate_beta


class EnsembleKind(Enum):
    CIRCULAR_BETA = "cbe"
    GAUSSIAN_BETA = "gbe"
    SINE_BETA_WINDOW = "sine-window"

    @staticmethod
    def from_str(value: str) -> "EnsembleKind":
        for kind in EnsembleKind:
            if kind.value == value:
                return kind
        raise ConfigurationError(f"Unknown ensemble {value!r}")

    @staticmethod
    def all() -> list["EnsembleKind"]:
        return list(EnsembleKind)


class GbeMethod(Enum):
    CORNERS_BOOTSTRAP = "corners"
    TRIDIAGONAL_ORACLE = "tridiagonal"

    @staticmethod
    def from_str(value: str) -> "GbeMethod":
        for method in GbeMethod:
            if method.value == value:
                return method
        raise ConfigurationError(f"Unknown GβE sampling method {value!r}")

    @staticmethod
    def all() -> list["GbeMethod"]:
        return list(GbeMethod)


def default_approx_n(window_halfwidth: float) -> int:
    return max(key.MIN_SINE_APPROX_N, math.ceil(key.SINE_APPROX_N_PER_HALFWIDTH * window_halfwidth))


class EnsembleSpec:
    def __init__(
        self,
        kind: EnsembleKind,
        beta: float,
        n: Optional[int] = None,
        window_halfwidth: Optional[float] = None,
        approx_n: Optional[int] = None,
    ):
        validate_beta(beta)
        self.kind = kind
        self.beta = float(beta)
        self.n = n
        self.window_halfwidth = window_halfwidth
        self.approx_n = approx_n

        if kind == EnsembleKind.SINE_BETA_WINDOW:
            if window_halfwidth is None or window_halfwidth <= 0:
                raise ConfigurationError(f"Window half-width must be positive, got {window_halfwidth}")
            if self.approx_n is None:
                self.approx_n = default_approx_n(window_halfwidth)
            if 2 * math.pi * self.approx_n <= 4 * window_halfwidth:
                raise ConfigurationError(
                    f"approx_n={self.approx_n} is too small for a window of half-width {window_halfwidth}"
                )
        elif n is None or n < 1:
            raise ConfigurationError(f"Ensemble size must be >= 1, got {n}")

    @classmethod
    def circular(cls, n: int, beta: float) -> "EnsembleSpec":
        return cls(EnsembleKind.CIRCULAR_BETA, beta, n=n)

    @classmethod
    def gaussian(cls, n: int, beta: float) -> "EnsembleSpec":
        return cls(EnsembleKind.GAUSSIAN_BETA, beta, n=n)

    @classmethod
    def sine_window(cls, window_halfwidth: float, beta: float, approx_n: Optional[int] = None) -> "EnsembleSpec":
        return cls(EnsembleKind.SINE_BETA_WINDOW, beta, window_halfwidth=window_halfwidth, approx_n=approx_n)

    def to_dict(self) -> dict:
        data = {key.KIND_KEY: self.kind.value, key.BETA_KEY: self.beta}
        if self.kind == EnsembleKind.SINE_BETA_WINDOW:
            data["window_halfwidth"] = self.window_halfwidth
            data["approx_n"] = self.approx_n
        else:
            data[key.N_KEY] = self.n
        return data

    def __repr__(self) -> str:
        return f"EnsembleSpec({self.to_dict()})"
