import math

import pytest
from hypothesis import given, settings, strategies as st

from checks import envelope_violations
from seprect.envelope import build_envelope, quadrant_domain
from seprect.generate import generate_circles
from seprect.geometry import Point, Rect, Region, UnitCircle

SMIN = Rect(0, 0, 1, 1)
SMAX = Rect(-10, -10, 10, 10)


def c(x, y):
    return UnitCircle(Point(x, y))


def radical_lower_intersection(a, b):
    """Lower intersection of two unit circles from the radical line."""
    dx, dy = b.x - a.x, b.y - a.y
    d = math.hypot(dx, dy)
    mx, my = (a.x + b.x) / 2, (a.y + b.y) / 2
    h = math.sqrt(1 - (d / 2) ** 2)
    p1 = (mx + h * dy / d, my - h * dx / d)
    p2 = (mx - h * dy / d, my + h * dx / d)
    return min(p1, p2, key=lambda p: p[1])


def test_no_circles_gives_smax_corner_path():
    env = build_envelope([], Region.NE, SMIN, SMAX)
    assert [e.kind for e in env.elements] == ["hseg", "vseg"]
    assert env.elements[0].start == Point(1, 10)
    assert env.elements[-1].end == Point(10, 1)


def test_one_circle_is_its_quarter_arc():
    env = build_envelope([c(4, 5)], Region.NE, SMIN, SMAX)
    kinds = [e.kind for e in env.elements]
    assert kinds == ["hseg", "vseg", "arc", "hseg", "vseg"]
    arc = env.elements[2]
    assert arc.start == Point(3, 5)
    assert arc.end == Point(4, 4)
    assert arc.interval == (0.0, math.pi / 2)
    assert env.value(3.5) == pytest.approx(5 - math.sqrt(0.75))


def test_overlapping_circles_meet_at_radical_intersection():
    a, b = c(3, 5), c(3.3, 4.8)
    env = build_envelope([a, b], Region.NE, SMIN, SMAX)
    corners = [bp for bp in env.breakpoints if bp.case == "A"]
    assert len(corners) == 1
    x, y = radical_lower_intersection(a, b)
    assert corners[0].point.x == pytest.approx(x, abs=1e-9)
    assert corners[0].point.y == pytest.approx(y, abs=1e-9)


def test_far_apart_circles_give_case_d():
    # centres (0,0) and (3,-3) relative to a common origin
    ox, oy = 4.0, 8.0
    a, b = c(ox, oy), c(ox + 3, oy - 3)
    env = build_envelope([a, b], Region.NE, SMIN, SMAX)
    plain = {(bp.point.x, bp.point.y) for bp in env.breakpoints if bp.kind == "plain"}
    # the first circle also enters below the smax cap, a case D of its own
    corner = [bp for bp in env.breakpoints if bp.case == "D" and bp.point.x > ox]
    assert (ox, oy - 1) in plain              # bottom of the first circle
    assert (ox + 2, oy - 3) in plain          # leftmost point of the second
    assert len(corner) == 1
    assert corner[0].point == Point(ox + 2, oy - 1)


def test_circle_beyond_smax_is_clipped_away():
    env = build_envelope([c(20, 20)], Region.NE, SMIN, SMAX)
    assert all(e.circle is None for e in env.elements)


def test_inverse_is_right_inverse_of_value():
    env = build_envelope([c(3, 5), c(5, 3), c(7, 2.5)], Region.NE, SMIN, SMAX)
    for T in (2.0, 3.0, 4.5, 9.0):
        X = env.inverse(T)
        assert X is not None
        assert env.value(X) >= T - 1e-12
        if X < env.xend:
            assert env.value(X + 1e-7) < T


@pytest.mark.parametrize("quadrant", [Region.NE, Region.NW, Region.SW, Region.SE])
def test_domain_per_quadrant(quadrant):
    x0, y0, xend, cap = quadrant_domain(quadrant, SMIN, SMAX)
    assert (xend, cap) == (10, 10)
    assert x0 in (1, 0) and y0 in (1, 0)


@pytest.mark.parametrize("quadrant", [Region.NE, Region.NW, Region.SW, Region.SE])
def test_value_is_non_increasing(quadrant):
    circles = [c(3, 4), c(-3, 4), c(-4, -3), c(4, -3), c(5, 6), c(-6, -5)]
    env = build_envelope([x for x in circles], quadrant, SMIN, SMAX)
    xs = [env.x0 + i * (env.xend - env.x0) / 400 for i in range(401)]
    vals = [env.value(x) for x in xs]
    assert all(a >= b for a, b in zip(vals, vals[1:]))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(0, 8),
       st.sampled_from(["uniform", "clustered", "staircase-adversarial"]))
def test_sampled_points_satisfy_properties(seed, m, layout):
    inst = generate_circles(2, m, seed=seed, frame=Rect(0, 0, 8, 8), layout=layout)
    bad2, bad3, total = envelope_violations(inst.red, inst.blue_circles, inst.frame, samples=200)
    assert total > 0
    assert (bad2, bad3) == (0, 0)
