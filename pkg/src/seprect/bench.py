"""Timing harness for the scaling claims.

For each cell of the ``m`` x ``k`` grid one instance is generated and
solved ``reps`` times; the median wall time is kept.  Slopes are least
squares fits of ``log(median_ns)`` against ``log(m)`` per algorithm and
``k``; they are reported, never asserted.
"""
from __future__ import annotations

import csv
import math
import statistics
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence, TextIO

import numpy as np

from .circles import solve_mbsr_c
from .generate import generate_circles, generate_points
from .geometry import InvalidInstance, Rect
from .outliers import solve_mbsr_o_baseline, solve_mbsr_o_pairset

CSV_COLUMNS = ("m", "k", "algorithm", "median_ns", "reps")
MIN_REPS = 5


@dataclass(frozen=True)
class BenchRow:
    m: int
    k: int
    algorithm: str
    median_ns: int
    reps: int


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)

    def slopes(self) -> dict[tuple[str, int], float]:
        groups: dict[tuple[str, int], list[BenchRow]] = {}
        for r in self.rows:
            groups.setdefault((r.algorithm, r.k), []).append(r)
        out = {}
        for key, rows in sorted(groups.items()):
            ms = sorted({r.m for r in rows if r.m > 0})
            if len(ms) < 2:
                continue
            x = np.log([r.m for r in rows if r.m > 0])
            y = np.log([max(r.median_ns, 1) for r in rows if r.m > 0])
            out[key] = float(np.polyfit(x, y, 1)[0])
        return out

    def write_csv(self, fh: TextIO) -> None:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            w.writerow((r.m, r.k, r.algorithm, r.median_ns, r.reps))


def _time(fn: Callable[[], object], reps: int) -> int:
    samples = []
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        fn()
        samples.append(time.perf_counter_ns() - t0)
    return int(statistics.median(samples))


def run_bench(problem: str, m_grid: Sequence[int], k_grid: Sequence[int] = (0,), reps: int = MIN_REPS,
              seed: int = 0, n: int = 5, layout: str = "uniform") -> BenchReport:
    if reps < MIN_REPS:
        raise InvalidInstance(f"need at least {MIN_REPS} repetitions")
    if list(m_grid) != sorted(m_grid):
        raise InvalidInstance("the m grid must be increasing")
    report = BenchReport()
    for m in m_grid:
        if problem == "mbsr-c":
            # keep the circle density fixed as m grows
            side = 6.0 + 3.0 * math.sqrt(m)
            inst = generate_circles(n, m, seed=seed, frame=Rect(0.0, 0.0, side, side), layout=layout)
            dur = _time(lambda: solve_mbsr_c(inst.red, inst.blue_circles, inst.frame), reps)
            report.rows.append(BenchRow(m, 0, "csr", dur, reps))
            continue
        ks = [0] if problem == "mbsr" else list(k_grid)
        for k in ks:
            inst = generate_points(n, m, k, seed=seed, layout=layout)
            algos = {"baseline": solve_mbsr_o_baseline}
            if problem == "mbsr-o":
                algos["pairset"] = solve_mbsr_o_pairset
            for name, solver in algos.items():
                dur = _time(lambda: solver(inst.red, inst.blue_points, k, inst.frame), reps)
                report.rows.append(BenchRow(m, k, name, dur, reps))
    return report


def format_slopes(slopes: dict[tuple[str, int], float]) -> list[str]:
    return [f"slope algorithm={a} k={k} log-log={v:.3f}" for (a, k), v in slopes.items()
            if math.isfinite(v)]
