import functools
import itertools

import numpy as np

from package import parallel
from package.chains.steps.bead import bead_step
from package.chains.steps.periodic import periodic_step_batch
from package.core.rng import RngSpec, as_generator
from package.ensembles.circular import sample_cbe_many, sample_sine_beta_window
from package.ensembles.spec import EnsembleSpec
from package.stats.ks import ks_two_sample
from package.stats.report import StatsReport, bonferroni
from package.stats.spacing import spacing_distribution
from package.verify.options import VerifyOptions
from package.verify.outcome import SuiteOutcome

PERIODIC_NS = [4, 8]
PERIODIC_BETAS = [1.0, 2.0, 4.0]
PERIODIC_HS = [0.0, 1.0]
PERIODIC_STEPS = 3
PERIODIC_REPLICAS = 20_000

SINE_BETAS = [2.0]
SINE_HS = [0.0]
SINE_HALFWIDTH = 30.0
SINE_REPLICAS = 2_000


def _periodic_statistics(points: np.ndarray, n: int, gen: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    """Count in the arc [0, πn] and the gap after a uniformly chosen point, per row."""
    period = 2 * np.pi * n
    counts = np.sum(points <= np.pi * n, axis=1)
    gaps = np.diff(np.concatenate([points, points[:, :1] + period], axis=1), axis=1)
    index = gen.integers(0, n, len(points))
    return counts, gaps[np.arange(len(points)), index]


def periodic_chunk(chunk: tuple[int, int], n: int, beta: float, h: float, steps: int, rng: RngSpec):
    index, count = chunk
    gen = rng.spawn(index).generator()

    initial = n * sample_cbe_many(count, n, beta, gen)
    stepped = n * sample_cbe_many(count, n, beta, gen)
    for _ in range(steps):
        stepped = periodic_step_batch(stepped, h, beta, gen)

    return _periodic_statistics(initial, n, gen), _periodic_statistics(stepped, n, gen)


def invariance_periodic(options: VerifyOptions) -> SuiteOutcome:
    """
    Compares lines at step 0 (exact circular β ensembles) with independent
    lines after three chain steps, which have the same law when the chain
    leaves the ensemble invariant.
    """
    replicas = options.replica_count(PERIODIC_REPLICAS)
    configs = list(itertools.product(options.ns(PERIODIC_NS), options.betas(PERIODIC_BETAS), options.hs(PERIODIC_HS)))
    threshold = bonferroni(options.significance, 2 * len(configs))

    reports = []
    for i, (n, beta, h) in enumerate(configs):
        worker = functools.partial(
            periodic_chunk, n=n, beta=beta, h=h, steps=PERIODIC_STEPS, rng=options.rng.spawn(i)
        )
        chunks = parallel.map_replicas(worker, parallel.replica_chunks(replicas), options.jobs, f"n={n} β={beta} h={h}")
        counts0 = np.concatenate([c[0][0] for c in chunks])
        gaps0 = np.concatenate([c[0][1] for c in chunks])
        counts3 = np.concatenate([c[1][0] for c in chunks])
        gaps3 = np.concatenate([c[1][1] for c in chunks])

        details = {"n": n, "beta": beta, "h": h, "steps": PERIODIC_STEPS}
        for name, a, b in [("arc-count", counts0, counts3), ("spacing", gaps0, gaps3)]:
            result = ks_two_sample(a, b)
            reports.append(
                StatsReport(
                    f"{name}[n={n},beta={beta},h={h}]",
                    result.distance,
                    threshold,
                    replicas,
                    options.rng.spawn(i),
                    p_value=result.p_value,
                    details=details,
                )
            )
    return SuiteOutcome(reports)


def _origin_gap(points: np.ndarray) -> float:
    """Length of the gap containing 0, or nan when 0 is not inside a gap."""
    right = np.searchsorted(points, 0.0)
    if right == 0 or right == len(points):
        return np.nan
    return float(points[right] - points[right - 1])


def sine_chunk(chunk: tuple[int, int], spec: EnsembleSpec, h: float, rng: RngSpec):
    index, count = chunk
    gen = as_generator(rng.spawn(index))
    w = spec.window_halfwidth
    assert w is not None

    initial, stepped = [], []
    for _ in range(count):
        initial.append(sample_sine_beta_window(spec, gen))
        window = sample_sine_beta_window(spec, gen)
        stepped.append(bead_step(window, h, spec.beta, gen, half_width=w).interior_line)
    return initial, stepped


def invariance_sine(options: VerifyOptions) -> SuiteOutcome:
    """
    One step of the windowed bead chain from Sine_β windows: the gap
    containing the origin and the count in the central third keep their law.
    """
    replicas = options.replica_count(SINE_REPLICAS)
    configs = list(itertools.product(options.betas(SINE_BETAS), options.hs(SINE_HS)))
    threshold = bonferroni(options.significance, 2 * len(configs))
    third = SINE_HALFWIDTH / 3

    reports = []
    artifacts = {}
    for i, (beta, h) in enumerate(configs):
        spec = EnsembleSpec.sine_window(SINE_HALFWIDTH, beta)
        worker = functools.partial(sine_chunk, spec=spec, h=h, rng=options.rng.spawn(i))
        chunks = parallel.map_replicas(worker, parallel.replica_chunks(replicas, 100), options.jobs, f"β={beta} h={h}")
        initial = [line for c in chunks for line in c[0]]
        stepped = [line for c in chunks for line in c[1]]

        details = {"beta": beta, "h": h, "window_halfwidth": SINE_HALFWIDTH, "approx_n": spec.approx_n}
        gaps0 = np.array([_origin_gap(line.points) for line in initial])
        gaps1 = np.array([_origin_gap(line.points) for line in stepped])
        samples = {
            "origin-gap": (gaps0[np.isfinite(gaps0)], gaps1[np.isfinite(gaps1)]),
            "central-count": (
                np.array([line.count_in(-third, third) for line in initial]),
                np.array([line.count_in(-third, third) for line in stepped]),
            ),
        }
        for name, (a, b) in samples.items():
            result = ks_two_sample(a, b)
            reports.append(
                StatsReport(
                    f"{name}[beta={beta},h={h}]",
                    result.distance,
                    threshold,
                    replicas,
                    options.rng.spawn(i),
                    p_value=result.p_value,
                    details=details,
                )
            )

        histogram = spacing_distribution(stepped, -third, third).to_df()
        artifacts[f"histogram_beta{beta:g}_h{h:g}.csv"] = histogram
    return SuiteOutcome(reports, artifacts)
