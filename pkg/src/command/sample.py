import os
from typing import Optional

import typer
from package import key, storage
from package.core.rng import MAX_UINT64, RngSpec
from package.core.types import PointConfiguration
from package.ensembles.circular import sample_cbe_verblunsky, sample_sine_beta_window
from package.ensembles.gaussian import sample_gbe
from package.ensembles.spec import EnsembleSpec, GbeMethod
from package.logger import Timed
from package.opuc.oracle import verblunsky_to_support
from package.run_config import RunConfig
from typing_extensions import Annotated

app = typer.Typer()

BETA_HELP = "Inverse temperature β > 0."
SEED_HELP = "Seed of the Philox generator."
STREAM_HELP = "Stream of the Philox generator. Runs with different streams are independent."
OUTPUT_DIR_HELP = "Output directory. Created if missing."
METHOD_HELP = f"GβE sampler, one of {', '.join(m.value for m in GbeMethod)}."
HALFWIDTH_HELP = "Half-width w of the window [−w, w]."
APPROX_N_HELP = """
Size of the circular ensemble approximating Sine_β. Defaults to \
max(256, 8·w).
"""


@app.command(name=key.SAMPLE_CBE_COMMAND_NAME, help="Sample the circular β ensemble.")
def cbe(
    n: Annotated[int, typer.Option(help="Number of points.")],
    output_dir: Annotated[str, typer.Option(help=OUTPUT_DIR_HELP)] = ".",
    beta: Annotated[float, typer.Option(help=BETA_HELP)] = 2.0,
    seed: Annotated[int, typer.Option(help=SEED_HELP)] = 0,
    stream: Annotated[int, typer.Option(help=STREAM_HELP)] = 0,
):
    validate_flags(beta, seed, stream, n=n)
    spec = EnsembleSpec.circular(n, beta)
    rng = RngSpec(seed, stream)

    with Timed.info(f"Sampling CβE({n}) at β={beta}"):
        alphas = sample_cbe_verblunsky(n, beta, rng)
        circle = verblunsky_to_support(alphas)

    storage.write_df(alphas.to_df(), os.path.join(output_dir, key.VERBLUNSKY_FILE_NAME))
    write_sample(spec, PointConfiguration(circle.angles), rng, output_dir, key.SAMPLE_CBE_COMMAND_NAME)


@app.command(name=key.SAMPLE_GBE_COMMAND_NAME, help="Sample the Gaussian β ensemble.")
def gbe(
    n: Annotated[int, typer.Option(help="Number of points.")],
    output_dir: Annotated[str, typer.Option(help=OUTPUT_DIR_HELP)] = ".",
    beta: Annotated[float, typer.Option(help=BETA_HELP)] = 2.0,
    method: Annotated[str, typer.Option(help=METHOD_HELP)] = GbeMethod.TRIDIAGONAL_ORACLE.value,
    seed: Annotated[int, typer.Option(help=SEED_HELP)] = 0,
    stream: Annotated[int, typer.Option(help=STREAM_HELP)] = 0,
):
    validate_flags(beta, seed, stream, n=n, method=method)
    spec = EnsembleSpec.gaussian(n, beta)
    rng = RngSpec(seed, stream)

    with Timed.info(f"Sampling GβE({n}) at β={beta}"):
        line = sample_gbe(n, beta, GbeMethod.from_str(method), rng)

    write_sample(spec, line, rng, output_dir, key.SAMPLE_GBE_COMMAND_NAME, {"method": method})


@app.command(name=key.SAMPLE_SINE_WINDOW_COMMAND_NAME, help="Sample a window of the Sine_β process.")
def sine_window(
    halfwidth: Annotated[float, typer.Option(help=HALFWIDTH_HELP)],
    output_dir: Annotated[str, typer.Option(help=OUTPUT_DIR_HELP)] = ".",
    beta: Annotated[float, typer.Option(help=BETA_HELP)] = 2.0,
    approx_n: Annotated[Optional[int], typer.Option(help=APPROX_N_HELP)] = None,
    seed: Annotated[int, typer.Option(help=SEED_HELP)] = 0,
    stream: Annotated[int, typer.Option(help=STREAM_HELP)] = 0,
):
    validate_flags(beta, seed, stream, halfwidth=halfwidth, approx_n=approx_n)
    spec = sine_window_spec(halfwidth, beta, approx_n)
    rng = RngSpec(seed, stream)

    with Timed.info(f"Sampling a Sine_β window of half-width {halfwidth} at β={beta}"):
        line = sample_sine_beta_window(spec, rng)

    write_sample(spec, line, rng, output_dir, key.SAMPLE_SINE_WINDOW_COMMAND_NAME)


def write_sample(
    spec: EnsembleSpec,
    line: PointConfiguration,
    rng: RngSpec,
    output_dir: str,
    command: str,
    extra: Optional[dict] = None,
):
    params = {**spec.to_dict(), **(extra or {})}
    run_config = RunConfig(f"{key.SAMPLE_UPPER_COMMAND_NAME} {command}", rng, params, output=output_dir)
    storage.write_df(
        storage.configuration_df([line]),
        os.path.join(output_dir, key.CONFIGURATION_FILE_NAME),
    )
    storage.write_json(
        {**spec.to_dict(), key.SEED_KEY: str(rng), key.RUN_CONFIG_KEY: run_config.to_dict()},
        os.path.join(output_dir, key.METADATA_FILE_NAME),
    )


def sine_window_spec(halfwidth: float, beta: float, approx_n: Optional[int]) -> EnsembleSpec:
    try:
        return EnsembleSpec.sine_window(halfwidth, beta, approx_n)
    except ValueError as e:
        raise typer.BadParameter(str(e))


def validate_flags(
    beta: float,
    seed: int,
    stream: int,
    n: Optional[int] = None,
    method: Optional[str] = None,
    halfwidth: Optional[float] = None,
    approx_n: Optional[int] = None,
):
    if not beta > 0:
        raise typer.BadParameter("β must be positive.")

    if not 0 <= seed <= MAX_UINT64:
        raise typer.BadParameter("Seed must be a 64-bit unsigned integer.")

    if not 0 <= stream <= MAX_UINT64:
        raise typer.BadParameter("Stream must be a 64-bit unsigned integer.")

    if n is not None and n < 1:
        raise typer.BadParameter("Number of points must be at least 1.")

    if method is not None and method not in [m.value for m in GbeMethod]:
        raise typer.BadParameter(f"Unknown method {method}. {METHOD_HELP}")

    if halfwidth is not None and not halfwidth > 0:
        raise typer.BadParameter("Half-width must be positive.")

    if approx_n is not None and approx_n < 1:
        raise typer.BadParameter("Approximation size must be at least 1.")


@app.callback(invoke_without_command=True, no_args_is_help=True)
def main():
    pass
