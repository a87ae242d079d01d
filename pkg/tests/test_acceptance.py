"""Acceptance run: one PASS/FAIL line per criterion.

Run with ``python3 tests/test_acceptance.py`` or through pytest.  Every
tolerance is pinned below; nothing is tuned per instance.
"""
import math
import os
import random
import sys
import time

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from checks import envelope_violations  # noqa: E402
from seprect.arcs import HALF_PI, critical_quartic, maximize_corner_area  # noqa: E402
from seprect.bench import format_slopes, run_bench  # noqa: E402
from seprect.circles import avoids_all, is_inextensible, solve_mbsr_c  # noqa: E402
from seprect.generate import LAYOUTS, generate_circles, generate_points  # noqa: E402
from seprect.geometry import Point, QUADRANTS, Rect, Region, UnitCircle, rect_contains  # noqa: E402
from seprect.oracles import oracle_arc_max_1d, oracle_mbsr_c, oracle_mbsr_o, oracle_staircase_levels  # noqa: E402
from seprect.outliers import solve_mbsr_o_baseline, solve_mbsr_o_pairset  # noqa: E402
from seprect.staircase import build_staircases  # noqa: E402

POINT_INSTANCES = 504
STAIR_INSTANCES = 240
ARC_DRAWS = 10_000
ARC_TOL = 1e-9
QUARTIC_DRAWS = 20
CIRCLE_INSTANCES = 102
GRID_STEP = 1e-3
AVOID_EPS = 1e-9
GROW_DELTA = 1e-6
ENVELOPE_SAMPLES = 1000
ENVELOPE_EPS = 1e-6


def line(n, name, ok, detail):
    text = f"ACCEPTANCE {n} {name}: {'PASS' if ok else 'FAIL'} ({detail})"
    print(text, flush=True)
    return ok


def point_corpus():
    for seed in range(POINT_INSTANCES):
        layout = LAYOUTS[seed % 3]
        n, m, k = 1 + seed % 10, seed % 26, seed % 5
        yield generate_points(n, m, k, seed=seed, layout=layout)


_SOLVED = {}


def _solved():
    if not _SOLVED:
        for inst in point_corpus():
            args = (inst.red, inst.blue_points, inst.k, inst.frame)
            _SOLVED[id(inst)] = (inst, solve_mbsr_o_baseline(*args).best, solve_mbsr_o_pairset(*args).best)
    return list(_SOLVED.values())


def criterion_1():
    t0 = time.perf_counter()
    bad = 0
    for inst, base, _ in _solved():
        ref = oracle_mbsr_o(inst.red, inst.blue_points, inst.k, inst.frame)
        if base.area != ref.area:
            bad += 1
    total = len(_solved())
    return line(1, "baseline equals brute force", bad == 0 and total >= 500,
                f"{total - bad}/{total} exact, {time.perf_counter() - t0:.1f}s")


def criterion_2():
    rows = _solved()
    bad = sum(1 for _, base, pair in rows if base.area != pair.area)
    return line(2, "pair sets equal baseline", bad == 0, f"{len(rows) - bad}/{len(rows)} equal")


def criterion_3():
    rng = random.Random(3)
    mismatches = over = loose = 0
    worst = 0.0
    for i in range(STAIR_INSTANCES):
        m, k = rng.randint(1, 50), rng.randint(0, 5)
        if i % 2:
            pts = [(rng.uniform(0, 10), rng.uniform(0, 10)) for _ in range(m)]
        else:
            pts = [((j + 1) + rng.uniform(-0.3, 0.3), (m - j) + rng.uniform(-0.3, 0.3)) for j in range(m)]
        stairs = build_staircases([Point(*p) for p in pts], Region.NE, k)
        got = [sorted((v.x, v.y) for v in level) for level in stairs.levels]
        if got != oracle_staircase_levels(pts, k):
            mismatches += 1
        count = stairs.vertex_count()
        if count > 2 * m:
            over += 1
        if count > (k + 1) * m:
            loose += 1
        worst = max(worst, count / m)
    line("3a", "staircases equal dominance counting", mismatches == 0,
         f"{STAIR_INSTANCES - mismatches}/{STAIR_INSTANCES} equal")
    return line("3b", "total vertices <= 2m", over == 0,
                f"{over}/{STAIR_INSTANCES} over budget, worst ratio {worst:.2f}, "
                f"{loose} over (k+1)m") and mismatches == 0


def criterion_4():
    rng = np.random.default_rng(4)
    worst = 0.0
    for _ in range(ARC_DRAWS):
        w, h = rng.uniform(1.0, 10.0, 2)
        w, h = max(w, np.nextafter(1.0, 2.0)), max(h, np.nextafter(1.0, 2.0))
        a, b = np.sort(rng.uniform(0.0, HALF_PI, 2))
        _, area = maximize_corner_area(float(w), float(h), float(a), float(b))
        _, ref = oracle_arc_max_1d(float(w), float(h), (float(a), float(b)))
        worst = max(worst, abs(area - ref))
    ok_arc = line("4a", "quartic path equals golden section", worst <= ARC_TOL,
                  f"{ARC_DRAWS} draws, worst |diff| {worst:.2e} <= {ARC_TOL:g}")
    ident = 0.0
    for _ in range(QUARTIC_DRAWS):
        w, h = rng.uniform(1.0, 10.0, 2)
        ident = max(ident, abs(np.polyval(critical_quartic(w, h), 1.0) - 2 * (w - h) ** 2) / (1 + (w + h) ** 2))
    ok_q = line("4b", "quartic at 1 equals 2(w-h)^2", ident <= 1e-12,
                f"{QUARTIC_DRAWS} draws, worst relative error {ident:.1e}")
    return ok_arc and ok_q


def circle_corpus():
    for seed in range(CIRCLE_INSTANCES):
        side = (5.0, 6.0, 7.0)[seed % 3]
        yield generate_circles(1 + seed % 4, 1 + seed % 8, seed=1000 + seed,
                               frame=Rect(0.0, 0.0, side, side), layout=LAYOUTS[seed % 3])


def criterion_5():
    t0 = time.perf_counter()
    outside = invalid = 0
    total = 0
    for inst in circle_corpus():
        total += 1
        best = solve_mbsr_c(inst.red, inst.blue_circles, inst.frame).best
        _, (lo, hi) = oracle_mbsr_c(inst.red, inst.blue_circles, inst.frame, GRID_STEP)
        slack = hi - lo
        if not (lo - slack <= best.area <= hi):
            outside += 1
        circles = [UnitCircle(c) for c in inst.blue_circles]
        if not (all(rect_contains(best, p) for p in inst.red) and avoids_all(best, circles, AVOID_EPS)
                and is_inextensible(best, circles, inst.frame, GROW_DELTA)):
            invalid += 1
    return line(5, "circle solver inside oracle bracket", outside == 0 and invalid == 0 and total >= 100,
                f"{total - outside}/{total} bracketed, {invalid} invalid rectangles, "
                f"{time.perf_counter() - t0:.1f}s")


def criterion_6():
    bad2 = bad3 = points = 0
    for inst in circle_corpus():
        b2, b3, n = envelope_violations(inst.red, inst.blue_circles, inst.frame,
                                        samples=ENVELOPE_SAMPLES // 4, eps=ENVELOPE_EPS)
        bad2, bad3, points = bad2 + b2, bad3 + b3, points + n
    return line(6, "envelope properties hold", bad2 == 0 and bad3 == 0,
                f"{points} samples, {bad2} empty-rectangle and {bad3} maximality violations")


def criterion_7():
    rows = []
    rep = run_bench("mbsr-o", [64, 128, 256, 512], [0, 2], reps=5, layout="staircase-adversarial")
    rows += format_slopes(rep.slopes())
    rep = run_bench("mbsr-c", [8, 16, 32, 64], reps=5, layout="staircase-adversarial")
    rows += format_slopes(rep.slopes())
    for r in rows:
        print("  " + r)
    return line(7, "scaling slopes", True, "reported, not asserted")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i + 1}" for i in range(len(CRITERIA))])
def test_acceptance(criterion, capsys):
    with capsys.disabled():
        print()
        assert criterion()


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
