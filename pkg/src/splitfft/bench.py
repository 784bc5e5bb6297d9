"""Wall-clock benchmarking of the fast kernels against the naive oracle."""

import statistics
import time
from dataclasses import dataclass

import numpy as np

from .layout import SplitSignal, interleave
from .oracle import naive_dft
from .transform import Algorithm, FlopReport, count_flops, fft, make_plan

NAIVE_LIMIT = 12


@dataclass(frozen=True)
class BenchRow:
    m: int
    n: int
    algorithm: str
    median_seconds: float
    flops: FlopReport | None


def _time_transform(plan, base, reps: int) -> float:
    times = []
    for _ in range(reps + 1):  # first run is warmup
        buf = base.copy()
        t0 = time.perf_counter()
        fft(plan, buf)
        times.append(time.perf_counter() - t0)
    return statistics.median(times[1:])


def _time_naive(signal, reps: int) -> float:
    times = []
    for _ in range(reps + 1):
        t0 = time.perf_counter()
        naive_dft(signal)
        times.append(time.perf_counter() - t0)
    return statistics.median(times[1:])


def run_benchmark(min_m: int, max_m: int, reps: int = 3, *,
                  naive_limit: int = NAIVE_LIMIT, seed: int = 0) -> list:
    """Median wall time per transform for each size and variant.

    Returns one :class:`BenchRow` per (m, algorithm) with algorithm in
    ``dit``, ``dif`` and — up to ``naive_limit`` — ``naive``.  The two
    fast variants carry the operation census; the naive oracle has none.
    """
    if min_m < 0 or min_m > max_m:
        raise ValueError(f"bad size range [{min_m}, {max_m}]")
    if reps < 1:
        raise ValueError(f"reps must be >= 1, got {reps}")
    rng = np.random.default_rng(seed)
    rows = []
    for m in range(min_m, max_m + 1):
        n = 1 << m
        signal = SplitSignal(rng.standard_normal(n), rng.standard_normal(n))
        base = interleave(signal)
        for algo in (Algorithm.DIT, Algorithm.DIF):
            plan = make_plan(m, algo)
            rows.append(BenchRow(m, n, algo.value, _time_transform(plan, base, reps),
                                 count_flops(plan)))
        if m <= naive_limit:
            rows.append(BenchRow(m, n, "naive", _time_naive(signal, reps), None))
    return rows
