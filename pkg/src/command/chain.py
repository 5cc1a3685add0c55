import os
from typing import Optional

import typer
from package import key, storage
from package.chains.chain import run_chain, trajectory_metadata, trajectory_to_df
from package.chains.params import BeadTrajectory, ChainParams, CornersState, LevelLaw, Rescale, WeightLaw
from package.core.lift import lift_circle_to_line
from package.core.rng import RngSpec
from package.ensembles.circular import sample_cbe, sample_sine_beta_window
from package.ensembles.gaussian import sample_gbe
from package.ensembles.spec import EnsembleSpec, GbeMethod
from package.logger import Timed
from package.run_config import RunConfig
from typing_extensions import Annotated

from command.sample import (
    APPROX_N_HELP,
    BETA_HELP,
    HALFWIDTH_HELP,
    METHOD_HELP,
    OUTPUT_DIR_HELP,
    SEED_HELP,
    STREAM_HELP,
    sine_window_spec,
    validate_flags as validate_sample_flags,
)

app = typer.Typer()

STEPS_HELP = "Number of chain steps. The trajectory holds steps + 1 lines."
H_HELP = "Level h of the level-set equation, or the center of the level law."
H_LAW_HELP = f"""
Law of the level, one of {', '.join(law.value for law in LevelLaw)}. With \
cauchy a fresh level h + h-scale·Cauchy is drawn every step.
"""
H_SCALE_HELP = "Scale of the Cauchy level law."


def _level_params(h: float, h_law: str, h_scale: float) -> dict:
    if h_law not in [law.value for law in LevelLaw]:
        raise typer.BadParameter(f"Unknown level law {h_law}.")
    if not h_scale > 0:
        raise typer.BadParameter("Level scale must be positive.")
    return {"level_h": h, "level_law": LevelLaw.from_str(h_law), "level_scale": h_scale}


@app.command(name=key.CHAIN_PERIODIC_COMMAND_NAME, help="Run the periodic chain from a circular β ensemble.")
def periodic(
    n: Annotated[int, typer.Option(help="Number of points per period 2πn.")],
    output_dir: Annotated[str, typer.Option(help=OUTPUT_DIR_HELP)] = ".",
    beta: Annotated[float, typer.Option(help=BETA_HELP)] = 2.0,
    steps: Annotated[int, typer.Option(help=STEPS_HELP)] = 1,
    h: Annotated[float, typer.Option(help=H_HELP)] = 0.0,
    h_law: Annotated[str, typer.Option(help=H_LAW_HELP)] = LevelLaw.FIXED.value,
    h_scale: Annotated[float, typer.Option(help=H_SCALE_HELP)] = 1.0,
    seed: Annotated[int, typer.Option(help=SEED_HELP)] = 0,
    stream: Annotated[int, typer.Option(help=STREAM_HELP)] = 0,
):
    validate_flags(beta, seed, stream, steps, n=n)
    params = ChainParams(beta, steps=steps, **_level_params(h, h_law, h_scale))
    rng = RngSpec(seed, stream)

    with Timed.info(f"Running {steps} periodic steps with n={n}"):
        initial = lift_circle_to_line(sample_cbe(n, beta, rng.spawn(0)), n)
        trajectory = run_chain(initial, params, rng)

    write_trajectory(trajectory, rng, output_dir, key.CHAIN_PERIODIC_COMMAND_NAME, {"n": n, "h": h})


@app.command(name=key.CHAIN_BEAD_COMMAND_NAME, help="Run the windowed bead chain from a Sine_β window.")
def bead(
    halfwidth: Annotated[float, typer.Option(help=HALFWIDTH_HELP)] = 30.0,
    output_dir: Annotated[str, typer.Option(help=OUTPUT_DIR_HELP)] = ".",
    beta: Annotated[float, typer.Option(help=BETA_HELP)] = 2.0,
    approx_n: Annotated[Optional[int], typer.Option(help=APPROX_N_HELP)] = None,
    steps: Annotated[int, typer.Option(help=STEPS_HELP)] = 1,
    h: Annotated[float, typer.Option(help=H_HELP)] = 0.0,
    h_law: Annotated[str, typer.Option(help=H_LAW_HELP)] = LevelLaw.FIXED.value,
    h_scale: Annotated[float, typer.Option(help=H_SCALE_HELP)] = 1.0,
    seed: Annotated[int, typer.Option(help=SEED_HELP)] = 0,
    stream: Annotated[int, typer.Option(help=STREAM_HELP)] = 0,
):
    validate_flags(beta, seed, stream, steps, halfwidth=halfwidth, approx_n=approx_n)
    spec = sine_window_spec(halfwidth, beta, approx_n)
    params = ChainParams(
        beta,
        steps=steps,
        weight_law=WeightLaw.IID_GAMMA,
        window_halfwidth=halfwidth,
        **_level_params(h, h_law, h_scale),
    )
    rng = RngSpec(seed, stream)

    with Timed.info(f"Running {steps} bead steps on [−{halfwidth}, {halfwidth}]"):
        initial = sample_sine_beta_window(spec, rng.spawn(0))
        if len(initial) < 2:
            raise typer.BadParameter(f"The sampled window has {len(initial)} points, increase the half-width.")
        trajectory = run_chain(initial, params, rng)

    write_trajectory(trajectory, rng, output_dir, key.CHAIN_BEAD_COMMAND_NAME, {**spec.to_dict(), "h": h})


@app.command(name=key.CHAIN_CORNERS_COMMAND_NAME, help="Run the corners chain from the Gaussian β ensemble.")
def corners(
    n0: Annotated[int, typer.Option(help="Size of the starting GβE sample.")] = 1,
    output_dir: Annotated[str, typer.Option(help=OUTPUT_DIR_HELP)] = ".",
    beta: Annotated[float, typer.Option(help=BETA_HELP)] = 2.0,
    steps: Annotated[int, typer.Option(help=STEPS_HELP)] = 1,
    method: Annotated[str, typer.Option(help=METHOD_HELP)] = GbeMethod.TRIDIAGONAL_ORACLE.value,
    alpha: Annotated[float, typer.Option(help="Bulk position α√n0 of the rescaling, α in (−2, 2).")] = 0.0,
    rescale: Annotated[
        bool,
        typer.Option(help="Run in the bulk coordinates (λ − α√n0)·√(n0(4 − α²)) around α√n0."),
    ] = False,
    seed: Annotated[int, typer.Option(help=SEED_HELP)] = 0,
    stream: Annotated[int, typer.Option(help=STREAM_HELP)] = 0,
):
    validate_flags(beta, seed, stream, steps, n=n0, method=method)
    if not -2 < alpha < 2:
        raise typer.BadParameter("α must lie in (−2, 2).")
    params = ChainParams(beta, steps=steps, weight_law=WeightLaw.IID_GAMMA)
    rng = RngSpec(seed, stream)
    bulk = Rescale(alpha, n0) if rescale else None

    with Timed.info(f"Running {steps} corners steps from GβE({n0})"):
        state = CornersState(sample_gbe(n0, beta, GbeMethod.from_str(method), rng.spawn(0)))
        if bulk is not None:
            state = state.rescaled(bulk)
        trajectory = run_chain(state, params, rng)

    extra = {
        "n0": n0,
        "method": method,
        "alpha": alpha,
        "h": Rescale(alpha, n0).level,
        "rescale": None if bulk is None else bulk.to_dict(),
    }
    write_trajectory(trajectory, rng, output_dir, key.CHAIN_CORNERS_COMMAND_NAME, extra)


def write_trajectory(
    trajectory: BeadTrajectory,
    rng: RngSpec,
    output_dir: str,
    command: str,
    extra: dict,
):
    params = {**trajectory.params.to_dict(), **extra}
    run_config = RunConfig(f"{key.CHAIN_UPPER_COMMAND_NAME} {command}", rng, params, output=output_dir)

    storage.write_df(trajectory_to_df(trajectory), os.path.join(output_dir, key.TRAJECTORY_FILE_NAME))
    storage.write_json(
        {
            **trajectory_metadata(trajectory),
            **extra,
            key.SEED_KEY: str(rng),
            key.RUN_CONFIG_KEY: run_config.to_dict(),
        },
        os.path.join(output_dir, key.METADATA_FILE_NAME),
    )

    solves = [
        {key.LEVEL_KEY: k + 1, **level_set}
        for k, level_set in enumerate(trajectory.level_sets)
        if level_set is not None
    ]
    if solves:
        storage.write_json({key.LEVEL_SET_STEPS_KEY: solves}, os.path.join(output_dir, key.LEVEL_SET_FILE_NAME))


def validate_flags(
    beta: float,
    seed: int,
    stream: int,
    steps: int,
    n: Optional[int] = None,
    method: Optional[str] = None,
    halfwidth: Optional[float] = None,
    approx_n: Optional[int] = None,
):
    validate_sample_flags(beta, seed, stream, n=n, method=method, halfwidth=halfwidth, approx_n=approx_n)

    if steps < 0:
        raise typer.BadParameter("Steps must be non-negative.")


@app.callback(invoke_without_command=True, no_args_is_help=True)
def main():
    pass
