import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from seprect.generate import generate_points
from seprect.geometry import (
    INF,
    InvalidInstance,
    Point,
    QUADRANT_SIGNS,
    Rect,
    Region,
    Unbounded,
    count_open,
    rect_contains,
)
from seprect.oracles import oracle_mbsr_o, oracle_pair_corners
from seprect.outliers import (
    PAIR_SIDE,
    build_pair_sets,
    compositions,
    solve_mbsr,
    solve_mbsr_o,
    solve_mbsr_o_baseline,
    solve_mbsr_o_pairset,
)
from seprect.staircase import build_staircases

RED = [Point(0, 0), Point(1, 1)]
BLUE = [Point(2, 0.5), Point(3, 0.5), Point(-1, 0.5), Point(0.5, 2), Point(0.5, -1)]
FRAME = Rect(-2, -2, 4, 3)


def test_compositions_cover_every_budget_split():
    comps = list(compositions(2, 3))
    assert len(comps) == math.comb(2 + 3, 3)
    assert all(sum(c) <= 2 for c in comps)
    assert comps == sorted(comps)


def test_one_outlier_lets_the_east_edge_pass():
    rep = solve_mbsr_o_baseline(RED, BLUE, 1, FRAME)
    ref = oracle_mbsr_o(RED, BLUE, 1, FRAME)
    assert rep.best.area == ref.area
    # passing (3, 0.5) east or (-1, 0.5) west both give area 12; the
    # tie-break keeps the smaller xmin
    assert rep.best.area == 12
    assert rep.best == Rect(-2, -1, 2, 2)
    # dropping the west point makes passing the south one the best move
    assert solve_mbsr_o_baseline(RED, BLUE[:2] + BLUE[3:], 1, FRAME).best == Rect(-2, -2, 2, 2)
    assert rep.outliers_used == 1


def test_k_zero_is_plain_mbsr():
    assert solve_mbsr_o_baseline(RED, BLUE, 0, FRAME).best == solve_mbsr(RED, BLUE, FRAME).best
    assert solve_mbsr(RED, BLUE, FRAME).best == Rect(-1, -1, 2, 2)


def test_twenty_blue_five_red_three_outliers():
    inst = generate_points(5, 20, 3, seed=4)
    rep = solve_mbsr_o_baseline(inst.red, inst.blue_points, 3, inst.frame)
    assert rep.best.area == oracle_mbsr_o(inst.red, inst.blue_points, 3, inst.frame).area


def test_unbounded_without_frame():
    with pytest.raises(Unbounded):
        solve_mbsr_o_baseline(RED, BLUE, 1)


def test_frame_must_contain_red():
    with pytest.raises(InvalidInstance):
        solve_mbsr_o_baseline(RED, BLUE, 0, Rect(0.5, 0.5, 4, 3))


def test_negative_k_rejected():
    with pytest.raises(InvalidInstance):
        solve_mbsr_o_baseline(RED, BLUE, -1, FRAME)


def test_unknown_algorithm_rejected():
    with pytest.raises(ValueError):
        solve_mbsr_o(RED, BLUE, 1, FRAME, algorithm="nope")


def test_pair_set_single_quadrant_point_with_one_outlier():
    ps = build_pair_sets([], [Point(1, 1)], Region.NE, 1)
    assert ps.pairs == ()


def test_pair_set_matches_pair_oracle():
    side, quad = [Point(0.5, 3)], [Point(2, 2), Point(3, 1)]
    ps = build_pair_sets(side, quad, Region.NE, 1)
    local = [(-INF, 3.0), (2.0, 2.0), (3.0, 1.0)]
    assert sorted(ps.corners) == oracle_pair_corners(local, 1)


@pytest.mark.parametrize("quadrant", [Region.NE, Region.NW, Region.SW, Region.SE])
def test_level_zero_pairs_reproduce_staircase_without_side_points(quadrant):
    rng = random.Random(quadrant.value)
    sx, sy = QUADRANT_SIGNS[quadrant]
    quad = [Point(sx * rng.randint(1, 9), sy * rng.randint(1, 9)) for _ in range(15)]
    ps = build_pair_sets([], quad, quadrant, 0)
    stairs = build_staircases(quad, quadrant, 0)
    assert sorted(ps.corners) == sorted(tuple(p) for p in stairs.corners(0))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 8), st.integers(1, 8)), max_size=8),
       st.lists(st.integers(1, 8), max_size=5),
       st.integers(0, 3))
def test_pair_sets_match_oracle(quad, side, t):
    quadrant = Region.NE
    side_pts = [Point(0.5, float(y)) for y in side]
    quad_pts = [Point(float(x), float(y)) for x, y in quad]
    ps = build_pair_sets(side_pts, quad_pts, quadrant, t)
    local = [(-INF, float(y)) for y in side] + [(float(x), float(y)) for x, y in quad]
    assert sorted(ps.corners) == oracle_pair_corners(local, t)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.integers(0, 4),
       st.sampled_from(["uniform", "clustered", "staircase-adversarial"]))
def test_solvers_agree_with_oracle(seed, k, layout):
    inst = generate_points(1 + seed % 6, 4 + seed % 18, k, seed=seed, layout=layout)
    base = solve_mbsr_o_baseline(inst.red, inst.blue_points, k, inst.frame)
    pair = solve_mbsr_o_pairset(inst.red, inst.blue_points, k, inst.frame)
    ref = oracle_mbsr_o(inst.red, inst.blue_points, k, inst.frame)
    assert base.best.area == ref.area
    assert pair.best.area == base.best.area
    for rep in (base, pair):
        assert all(rect_contains(rep.best, p) for p in inst.red)
        assert rep.outliers_used <= k
        assert inst.frame.contains_rect(rep.best)


def test_pairset_tries_at_most_cubic_compositions():
    inst = generate_points(5, 40, 4, seed=9)
    rep = solve_mbsr_o_pairset(inst.red, inst.blue_points, 4, inst.frame)
    assert rep.compositions_tried <= 5 ** 3
    assert rep.best.area == solve_mbsr_o_baseline(inst.red, inst.blue_points, 4, inst.frame).best.area


def test_k_equal_m_gives_frame():
    inst = generate_points(3, 6, 6, seed=2)
    assert solve_mbsr_o_baseline(inst.red, inst.blue_points, 6, inst.frame).best == inst.frame


@pytest.mark.parametrize("sx, sy", [(-1, 1), (1, -1), (-1, -1)])
def test_reflection_reflects_the_area(sx, sy):
    inst = generate_points(4, 20, 2, seed=12)
    red = [Point(sx * p.x, sy * p.y) for p in inst.red]
    blue = [Point(sx * p.x, sy * p.y) for p in inst.blue_points]
    f = inst.frame
    xs, ys = sorted((sx * f.xmin, sx * f.xmax)), sorted((sy * f.ymin, sy * f.ymax))
    frame = Rect(xs[0], ys[0], xs[1], ys[1])
    a = solve_mbsr_o_baseline(inst.red, inst.blue_points, 2, inst.frame).best
    b = solve_mbsr_o_baseline(red, blue, 2, frame).best
    assert a.area == b.area
