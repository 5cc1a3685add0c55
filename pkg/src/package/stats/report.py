from enum import Enum
from typing import Optional

import pandas as pd

from package.core.rng import RngSpec


class Verdict(Enum):
    PASS = "pass"
    FAIL = "fail"


def bonferroni(significance: float, tests: int) -> float:
    return significance / max(tests, 1)


class StatsReport:
    """
    Outcome of one statistical check. The verdict passes when the p-value is
    above the threshold, or, for checks without a p-value, when the
    statistic is below it. Checks without a threshold are reported only and
    always pass.
    """

    def __init__(
        self,
        test: str,
        statistic: float,
        threshold: Optional[float],
        n_replicas: int,
        rng: RngSpec,
        p_value: Optional[float] = None,
        details: Optional[dict] = None,
    ):
        self.test = test
        self.statistic = float(statistic)
        self.threshold = None if threshold is None else float(threshold)
        self.p_value = None if p_value is None else float(p_value)
        self.n_replicas = int(n_replicas)
        self.rng = rng
        self.details = details or {}

    @property
    def verdict(self) -> Verdict:
        if self.threshold is None:
            passed = True
        elif self.p_value is not None:
            passed = self.p_value > self.threshold
        else:
            passed = self.statistic < self.threshold
        return Verdict.PASS if passed else Verdict.FAIL

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS

    def to_dict(self) -> dict:
        data = {
            "test": self.test,
            "statistic": self.statistic,
            "threshold": self.threshold,
            "p_value": self.p_value,
            "verdict": self.verdict.value,
            "n_replicas": self.n_replicas,
            "seed": str(self.rng),
        }
        if self.details:
            data["details"] = self.details
        return data

    def summary(self) -> str:
        p_value = "" if self.p_value is None else f", p={self.p_value:.3g}"
        threshold = "reported" if self.threshold is None else f"threshold={self.threshold:.3g}"
        return f"{self.test}: {self.verdict.value} (statistic={self.statistic:.4g}{p_value}, {threshold})"

    def __repr__(self) -> str:
        return f"StatsReport({self.summary()})"


class SuiteReport:
    """The reports of one verification suite, plus CSV artifacts keyed by file name."""

    def __init__(
        self,
        suite: str,
        reports: list[StatsReport],
        run_config: dict,
        artifacts: Optional[dict[str, pd.DataFrame]] = None,
    ):
        self.suite = suite
        self.reports = reports
        self.run_config = run_config
        self.artifacts = artifacts or {}

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    @property
    def verdict(self) -> Verdict:
        return Verdict.PASS if self.passed else Verdict.FAIL

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "verdict": self.verdict.value,
            "reports": [report.to_dict() for report in self.reports],
            "run_config": self.run_config,
        }

    def summary(self) -> str:
        passed = sum(report.passed for report in self.reports)
        return f"{self.suite}: {self.verdict.value} ({passed}/{len(self.reports)} checks passed)"
