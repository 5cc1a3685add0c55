import functools

import numpy as np

from package import parallel
from package.chains.params import Rescale
from package.chains.steps.corners import corners_step_batch
from package.chains.steps.periodic import periodic_step_batch
from package.core.rng import RngSpec
from package.ensembles.circular import sample_cbe_many
from package.ensembles.gaussian import sample_gbe_many
from package.ensembles.spec import GbeMethod
from package.stats.ks import ks_two_sample
from package.stats.report import StatsReport
from package.stats.spacing import SpacingHistogram
from package.verify.options import VerifyOptions
from package.verify.outcome import SuiteOutcome

CORNERS_N = 400
CORNERS_ALPHA = 0.0
PERIODIC_N = 256
STEPS = 3
BETA = 2.0
SPACINGS = 10_000
CENTRAL_HALFWIDTH = 6 * np.pi
MAX_KS_DISTANCE = 0.05


def _central_spacings(points: np.ndarray, halfwidth: float) -> np.ndarray:
    """Consecutive gaps of every row restricted to [−halfwidth, halfwidth]."""
    return np.concatenate([np.diff(row[np.abs(row) <= halfwidth]) for row in points])


def corners_chunk(chunk: tuple[int, int], n: int, alpha: float, beta: float, rng: RngSpec) -> np.ndarray:
    index, count = chunk
    gen = rng.spawn(index).generator()
    rescale = Rescale(alpha, n)

    points = rescale.forward(sample_gbe_many(count, n, beta, GbeMethod.TRIDIAGONAL_ORACLE, gen))
    for _ in range(STEPS):
        points = corners_step_batch(points, beta, gen, rescale)
    return _central_spacings(points, CENTRAL_HALFWIDTH)


def periodic_chunk(chunk: tuple[int, int], n: int, h: float, beta: float, rng: RngSpec) -> np.ndarray:
    index, count = chunk
    gen = rng.spawn(index).generator()

    points = n * sample_cbe_many(count, n, beta, gen)
    for _ in range(STEPS):
        points = periodic_step_batch(points, h, beta, gen)
    return np.diff(points, axis=1).reshape(-1)


def _collect(worker, per_replica: float, jobs: int, desc: str) -> np.ndarray:
    replicas = int(np.ceil(SPACINGS / per_replica))
    values = np.concatenate(parallel.map_replicas(worker, parallel.replica_chunks(replicas, 100), jobs, desc))
    return values[:SPACINGS]


def bead_limit(options: VerifyOptions) -> SuiteOutcome:
    """
    Central spacings of the rescaled corners chain at α against those of the
    periodic chain at the matching level h = −α/√(4 − α²).
    """
    beta = options.beta if options.beta is not None else BETA
    rescale = Rescale(CORNERS_ALPHA, CORNERS_N)
    h = rescale.level

    corners_worker = functools.partial(corners_chunk, n=CORNERS_N, alpha=CORNERS_ALPHA, beta=beta, rng=options.rng.spawn(0))
    # about 2·halfwidth/2π spacings per replica fall in the central region
    corners = _collect(corners_worker, CENTRAL_HALFWIDTH / np.pi - 1, options.jobs, "Corners chain")

    periodic_worker = functools.partial(periodic_chunk, n=PERIODIC_N, h=h, beta=beta, rng=options.rng.spawn(1))
    periodic = _collect(periodic_worker, PERIODIC_N - 1, options.jobs, "Periodic chain")

    result = ks_two_sample(corners, periodic)
    report = StatsReport(
        "central-spacing-ks-distance",
        result.distance,
        MAX_KS_DISTANCE,
        len(corners),
        options.rng,
        p_value=None,
        details={
            "alpha": CORNERS_ALPHA,
            "h": h,
            "corners_n": CORNERS_N,
            "periodic_n": PERIODIC_N,
            "steps": STEPS,
            "beta": beta,
            "mean_spacing": [float(corners.mean()), float(periodic.mean())],
        },
    )
    return SuiteOutcome(
        [report],
        {
            "histogram_corners.csv": SpacingHistogram(corners).to_df(),
            "histogram_periodic.csv": SpacingHistogram(periodic).to_df(),
        },
    )
