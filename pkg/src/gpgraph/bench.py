"""Recognition benchmark over generated GP(n, k) inputs.

Records both wall time and the deterministic path-extension step counter, so
linear-scaling checks do not have to rely on machine noise.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .census import sigma_census
from .construct import GpParams, build
from .recognizer import recognize


@dataclass(frozen=True)
class BenchRecord:
    n: int
    k: int
    wall_time_ns: int
    sigma_steps: int
    accepted: bool


def run_bench(sizes: list[int], k: int, reps: int = 1) -> list[BenchRecord]:
    """Build GP(n, k) for each size, time recognition, one record per repetition.

    Raises InvalidParamsError on any invalid (n, k) combination before doing
    any work.  Graph construction is excluded from the timed section.
    """
    if reps < 1:
        raise ValueError("reps must be at least 1")
    params = [GpParams(n, k) for n in sizes]
    # warm any lazy compilation so the first record is not an outlier
    warm, _ = build(GpParams(23, 3))
    sigma_census(warm)
    records = []
    for p in params:
        g, _ = build(p)
        for _ in range(reps):
            start = time.perf_counter_ns()
            result = recognize(g)
            elapsed = time.perf_counter_ns() - start
            records.append(
                BenchRecord(
                    n=p.n,
                    k=p.k,
                    wall_time_ns=max(elapsed, 1),
                    sigma_steps=result.sigma_steps,
                    accepted=result.accepted,
                )
            )
    return records
