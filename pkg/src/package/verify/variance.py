import functools
import math

import numpy as np

from package import parallel
from package.core.rng import RngSpec
from package.core.types import PointConfiguration
from package.ensembles.circular import sample_sine_beta_window
from package.ensembles.gaussian import sample_gbe_many
from package.ensembles.spec import EnsembleSpec, GbeMethod
from package.stats.counting import (
    CountingReference,
    counting_variance_profile,
    fit_log_growth,
    log_bound_constant,
    max_discrepancy,
)
from package.stats.report import StatsReport
from package.verify.options import VerifyOptions
from package.verify.outcome import SuiteOutcome

SINE_BETA = 2.0
SINE_APPROX_N = 512
SINE_HALFWIDTH = 90.0
SINE_XS = [5.0, 10.0, 20.0, 40.0, 80.0]
SINE_REPLICAS = 400
DISCREPANCY_EXPONENT = 0.4

GBE_N = 2000
GBE_SPACINGS = [5, 10, 20, 40]
GBE_REPLICAS = 200


def sine_chunk(chunk: tuple[int, int], spec: EnsembleSpec, rng: RngSpec) -> list[PointConfiguration]:
    index, count = chunk
    gen = rng.spawn(index).generator()
    return [sample_sine_beta_window(spec, gen) for _ in range(count)]


def gbe_chunk(chunk: tuple[int, int], n: int, beta: float, rng: RngSpec) -> list[PointConfiguration]:
    index, count = chunk
    gen = rng.spawn(index).generator()
    return [PointConfiguration(row) for row in sample_gbe_many(count, n, beta, GbeMethod.TRIDIAGONAL_ORACLE, gen)]


def variance_log(options: VerifyOptions) -> SuiteOutcome:
    """
    Counting variance of Sine_β windows on [0, x] against a + b·log x, the
    per-path discrepancy of the same windows, and the bulk counting variance
    of GβE(n) against the logarithmic bound.
    """
    beta = options.beta if options.beta is not None else SINE_BETA
    replicas = options.replica_count(SINE_REPLICAS)
    spec = EnsembleSpec.sine_window(SINE_HALFWIDTH, beta, approx_n=SINE_APPROX_N)

    worker = functools.partial(sine_chunk, spec=spec, rng=options.rng.spawn(0))
    windows = [
        line
        for chunk in parallel.map_replicas(worker, parallel.replica_chunks(replicas, 50), options.jobs, "Sine windows")
        for line in chunk
    ]
    profile = counting_variance_profile(windows, SINE_XS)
    fit = fit_log_growth(profile)
    discrepancies = np.array(
        [max_discrepancy(line, SINE_XS[-1], DISCREPANCY_EXPONENT) for line in windows]
    )

    n = options.n if options.n is not None else GBE_N
    gbe_replicas = max(GBE_REPLICAS, replicas // 2)
    gbe_worker = functools.partial(gbe_chunk, n=n, beta=beta, rng=options.rng.spawn(1))
    samples = [
        line
        for chunk in parallel.map_replicas(gbe_worker, parallel.replica_chunks(gbe_replicas, 50), options.jobs, f"GβE({n})")
        for line in chunk
    ]
    # the bulk mean spacing of GβE(n) at the origin is π/√n
    xs = [k * math.pi / math.sqrt(n) for k in GBE_SPACINGS]
    gbe_profile = counting_variance_profile(samples, xs, CountingReference.SEMICIRCLE, n=n)
    constant = log_bound_constant(gbe_profile, scale=math.sqrt(n), cap=n)

    reports = [
        StatsReport("sine-log-slope", -fit.b, 0.0, replicas, options.rng.spawn(0), details=fit.to_dict()),
        StatsReport(
            "sine-log-fit-ratio",
            fit.max_ratio(),
            2.0,
            replicas,
            options.rng.spawn(0),
            details={"variances": profile.to_list(), "errors": profile.errors.tolist()},
        ),
        StatsReport(
            "sine-max-discrepancy",
            float(np.median(discrepancies)),
            None,
            replicas,
            options.rng.spawn(0),
            details={
                "exponent": DISCREPANCY_EXPONENT,
                "quantiles": {str(q): float(np.quantile(discrepancies, q)) for q in [0.5, 0.9, 0.99, 1.0]},
            },
        ),
        StatsReport(
            "gbe-log-constant",
            constant,
            None,
            gbe_replicas,
            options.rng.spawn(1),
            details={"n": n, "variances": gbe_profile.to_list()},
        ),
    ]
    return SuiteOutcome(
        reports,
        {"sine_variance.csv": profile.to_df(), "gbe_variance.csv": gbe_profile.to_df()},
    )
