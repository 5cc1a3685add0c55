import os
from typing import Optional

import typer
from package import console, key, storage
from package.core.rng import RngSpec
from package.run_config import RunConfig
from package.verify.options import VerifyOptions
from package.verify.registry import SUITES, run_suite
from typing_extensions import Annotated

from command.sample import BETA_HELP, OUTPUT_DIR_HELP, SEED_HELP, STREAM_HELP
from command.sample import validate_flags as validate_sample_flags

SUITE_HELP = f"Suite to run, one of {', '.join(SUITES)}."
JOBS_HELP = f"""
Worker processes for the replicas of a suite. Results do not depend on it. \
Defaults to ${key.JOBS_ENV_VAR} or the CPU count.
"""


def verify(
    suite: Annotated[str, typer.Argument(help=SUITE_HELP)],
    output_dir: Annotated[str, typer.Option(help=OUTPUT_DIR_HELP)] = ".",
    n: Annotated[Optional[int], typer.Option(help="Override the suite's sizes n.")] = None,
    beta: Annotated[Optional[float], typer.Option(help=f"Override the suite's β values. {BETA_HELP}")] = None,
    h: Annotated[Optional[float], typer.Option(help="Override the suite's levels h.")] = None,
    replicas: Annotated[Optional[int], typer.Option(help="Override the suite's replica count.")] = None,
    trials: Annotated[Optional[int], typer.Option(help="Override the suite's trial count.")] = None,
    significance: Annotated[
        float, typer.Option(help="Family-wise significance level, split over the checks of a suite.")
    ] = key.DEFAULT_SIGNIFICANCE,
    jobs: Annotated[int, typer.Option(help=JOBS_HELP)] = key.DEFAULT_N_PROCESSES,
    seed: Annotated[int, typer.Option(help=SEED_HELP)] = 0,
    stream: Annotated[int, typer.Option(help=STREAM_HELP)] = 0,
    details: Annotated[bool, typer.Option(help="Print a table of every check.")] = False,
):
    validate_flags(suite, seed, stream, n, beta, replicas, trials, significance, jobs)

    rng = RngSpec(seed, stream)
    options = VerifyOptions(rng, n, beta, h, replicas, trials, jobs, significance)
    run_config = RunConfig(
        f"{key.VERIFY_COMMAND_NAME} {suite}",
        rng,
        options.to_dict(),
        replicas=replicas or 0,
        output=output_dir,
        jobs=jobs,
    )

    report = run_suite(suite, options, run_config)

    storage.write_json(report.to_dict(), os.path.join(output_dir, key.REPORT_FILE_NAME))
    for file_name, df in report.artifacts.items():
        storage.write_df(df, os.path.join(output_dir, file_name))

    console.print_report(report, details)
    if not report.passed:
        raise typer.Exit(code=1)


def validate_flags(
    suite: str,
    seed: int,
    stream: int,
    n: Optional[int],
    beta: Optional[float],
    replicas: Optional[int],
    trials: Optional[int],
    significance: float,
    jobs: int,
):
    if suite not in SUITES:
        raise typer.BadParameter(f"Unknown suite {suite}. {SUITE_HELP}")

    validate_sample_flags(beta if beta is not None else 1.0, seed, stream, n=n)

    if replicas is not None and replicas < 1:
        raise typer.BadParameter("Replicas must be at least 1.")

    if trials is not None and trials < 1:
        raise typer.BadParameter("Trials must be at least 1.")

    if not 0 < significance < 1:
        raise typer.BadParameter("Significance must lie in (0, 1).")

    if jobs < 1:
        raise typer.BadParameter("Jobs must be at least 1.")
