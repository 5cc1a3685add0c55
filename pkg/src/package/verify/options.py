from typing import Optional

from package import key
from package.core.rng import RngSpec


class VerifyOptions:
    """
    Overrides shared by all suites. Unset values fall back to each suite's
    own defaults.
    """

    def __init__(
        self,
        rng: RngSpec,
        n: Optional[int] = None,
        beta: Optional[float] = None,
        h: Optional[float] = None,
        replicas: Optional[int] = None,
        trials: Optional[int] = None,
        jobs: int = 1,
        significance: float = key.DEFAULT_SIGNIFICANCE,
    ):
        self.rng = rng
        self.n = n
        self.beta = beta
        self.h = h
        self.replicas = replicas
        self.trials = trials
        self.jobs = jobs
        self.significance = significance

    def ns(self, default: list[int]) -> list[int]:
        return [self.n] if self.n is not None else default

    def betas(self, default: list[float]) -> list[float]:
        return [self.beta] if self.beta is not None else default

    def hs(self, default: list[float]) -> list[float]:
        return [self.h] if self.h is not None else default

    def replica_count(self, default: int) -> int:
        return self.replicas if self.replicas is not None else default

    def trial_count(self, default: int) -> int:
        return self.trials if self.trials is not None else default

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            key.BETA_KEY: self.beta,
            "h": self.h,
            "replicas": self.replicas,
            "trials": self.trials,
            "jobs": self.jobs,
            "significance": self.significance,
        }
