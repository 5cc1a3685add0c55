import functools
import itertools

import numpy as np

from package import parallel
from package.chains.steps.corners import corners_step_batch
from package.core.rng import RngSpec
from package.ensembles.gaussian import sample_gbe_many
from package.ensembles.spec import GbeMethod
from package.stats.density import corners_density_chi_square
from package.stats.ks import ks_two_sample
from package.stats.report import StatsReport, bonferroni
from package.verify.options import VerifyOptions
from package.verify.outcome import SuiteOutcome

MARGINAL_N = 12
MARGINAL_BETAS = [1.0, 2.0]
MARGINAL_REPLICAS = 20_000

DENSITY_BETAS = [1.0, 2.0]
DENSITY_LAMBDAS = [-1.0, 0.0, 0.8]
DENSITY_DRAWS = 50_000


def marginal_chunk(chunk: tuple[int, int], n: int, beta: float, rng: RngSpec):
    index, count = chunk
    gen = rng.spawn(index).generator()
    corners = sample_gbe_many(count, n, beta, GbeMethod.CORNERS_BOOTSTRAP, gen)
    tridiagonal = sample_gbe_many(count, n, beta, GbeMethod.TRIDIAGONAL_ORACLE, gen)
    return corners, tridiagonal


def corners_marginal(options: VerifyOptions) -> SuiteOutcome:
    """
    n − 1 corners steps from GβE(1) against the tridiagonal GβE(n) sampler:
    the largest point and a central gap must have the same law.
    """
    replicas = options.replica_count(MARGINAL_REPLICAS)
    n = options.n if options.n is not None else MARGINAL_N
    betas = options.betas(MARGINAL_BETAS)
    threshold = bonferroni(options.significance, 2 * len(betas))
    mid = n // 2

    reports = []
    for i, beta in enumerate(betas):
        worker = functools.partial(marginal_chunk, n=n, beta=beta, rng=options.rng.spawn(i))
        chunks = parallel.map_replicas(worker, parallel.replica_chunks(replicas), options.jobs, f"β={beta}")
        corners = np.concatenate([c[0] for c in chunks])
        tridiagonal = np.concatenate([c[1] for c in chunks])

        statistics = {"largest": (corners[:, -1], tridiagonal[:, -1])}
        if n > 1:
            statistics["central-gap"] = (
                corners[:, mid] - corners[:, mid - 1],
                tridiagonal[:, mid] - tridiagonal[:, mid - 1],
            )
        for name, (a, b) in statistics.items():
            result = ks_two_sample(a, b)
            reports.append(
                StatsReport(
                    f"{name}[n={n},beta={beta}]",
                    result.distance,
                    threshold,
                    replicas,
                    options.rng.spawn(i),
                    p_value=result.p_value,
                )
            )
    return SuiteOutcome(reports)


def density_chunk(chunk: tuple[int, int], lam: float, beta: float, rng: RngSpec) -> np.ndarray:
    index, count = chunk
    gen = rng.spawn(index).generator()
    return corners_step_batch(np.full((count, 1), lam), beta, gen)


def corners_density(options: VerifyOptions) -> SuiteOutcome:
    """Chi-square fit of one corners step from {λ} against its closed-form density."""
    draws = options.replica_count(DENSITY_DRAWS)
    configs = list(itertools.product(options.betas(DENSITY_BETAS), DENSITY_LAMBDAS))
    threshold = bonferroni(options.significance, len(configs))

    reports = []
    for i, (beta, lam) in enumerate(configs):
        worker = functools.partial(density_chunk, lam=lam, beta=beta, rng=options.rng.spawn(i))
        roots = np.concatenate(
            parallel.map_replicas(worker, parallel.replica_chunks(draws, 5000), options.jobs, f"β={beta} λ={lam}")
        )
        result = corners_density_chi_square(roots[:, 0], roots[:, 1], lam, beta)
        reports.append(
            StatsReport(
                f"chi-square[beta={beta},lambda={lam}]",
                result.statistic,
                threshold,
                draws,
                options.rng.spawn(i),
                p_value=result.pvalue,
            )
        )
    return SuiteOutcome(reports)
