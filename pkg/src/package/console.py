from rich import print
from rich.table import Table

from package.stats.report import SuiteReport, Verdict

VERDICT_STYLES = {Verdict.PASS: "green", Verdict.FAIL: "bold red"}


def report_table(report: SuiteReport) -> Table:
    table = Table(title=report.suite)
    table.add_column("check")
    table.add_column("statistic", justify="right")
    table.add_column("p-value", justify="right")
    table.add_column("threshold", justify="right")
    table.add_column("verdict")

    for check in report.reports:
        table.add_row(
            check.test,
            f"{check.statistic:.4g}",
            "" if check.p_value is None else f"{check.p_value:.3g}",
            "reported" if check.threshold is None else f"{check.threshold:.3g}",
            f"[{VERDICT_STYLES[check.verdict]}]{check.verdict.value}[/]",
        )
    return table


def print_report(report: SuiteReport, details: bool = False):
    """One summary line per suite, preceded by the table of checks when asked for."""
    if details:
        print(report_table(report))
    style = VERDICT_STYLES[report.verdict]
    print(f"[{style}]{report.summary()}[/]")
