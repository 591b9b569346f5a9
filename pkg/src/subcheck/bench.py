"""Timing harness for the fast and naive deciders on complete coherent lists."""

from __future__ import annotations

import csv
import gc
import time
from dataclasses import astuple, dataclass, fields
from typing import Iterable, Sequence, TextIO

import numpy as np

from .generators import gen_complete_coherent
from .report import check


class BenchDisagreement(RuntimeError):
    pass


@dataclass(frozen=True)
class BenchRow:
    m: int
    N: int
    algorithm: str
    seed: int
    rep: int
    elapsed_ns: int
    verdict: str


COLUMNS = tuple(f.name for f in fields(BenchRow))


def run_bench(sizes: Iterable[int], algorithms: Sequence[str] = ("fast", "naive"),
              reps: int = 5, seed: int = 0) -> list[BenchRow]:
    """Time each algorithm ``reps`` times per size after one discarded warm-up run."""
    if reps < 1:
        raise ValueError("reps must be positive")
    rows = []
    for m in sizes:
        plist = gen_complete_coherent(m, seed)
        verdicts = {}
        for alg in algorithms:
            verdicts[alg] = check(plist, alg).outcome.value
            for rep in range(reps):
                # like timeit: keep collector pauses out of the measurement
                gc_was_enabled = gc.isenabled()
                gc.disable()
                try:
                    start = time.perf_counter_ns()
                    v = check(plist, alg)
                    elapsed = time.perf_counter_ns() - start
                finally:
                    if gc_was_enabled:
                        gc.enable()
                rows.append(BenchRow(m, plist.n, alg, seed, rep, elapsed, v.outcome.value))
        if len(set(verdicts.values())) > 1:
            raise BenchDisagreement(f"m={m}: algorithms disagree: {verdicts}")
    return rows


def medians(rows: Iterable[BenchRow]) -> dict[tuple[int, str], float]:
    groups: dict[tuple[int, str], list[int]] = {}
    for row in rows:
        groups.setdefault((row.m, row.algorithm), []).append(row.elapsed_ns)
    return {key: float(np.median(v)) for key, v in groups.items()}


def loglog_slope(ns: Sequence[float], times: Sequence[float]) -> float:
    """Least-squares slope of log(time) against log(N)."""
    slope, _ = np.polyfit(np.log(ns), np.log(times), 1)
    return float(slope)


def write_csv(rows: Iterable[BenchRow], fp: TextIO) -> None:
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow(astuple(row))
