from typing import Optional

import pandas as pd

from package.stats.report import StatsReport


class SuiteOutcome:
    def __init__(self, reports: list[StatsReport], artifacts: Optional[dict[str, pd.DataFrame]] = None):
        self.reports = reports
        self.artifacts = artifacts or {}
