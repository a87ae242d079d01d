"""Largest rectangle that encloses the red points and avoids blue unit disks.

A rectangle containing ``smin`` meets a circle of a corner quadrant only
through its corner in that quadrant, and a circle of a side region only
through the matching edge.  Side circles therefore become constant edge
limits (folded into ``smax``), and each corner is confined below its
quadrant's envelope.  With ``X`` / ``Xw`` the east / west edges the area is

    F(X, Xw) = (X - Xw) * (min(tE(X), tW(Xw)) - max(bE(X), bW(Xw)))

with ``tE``, ``bE`` read from the NE and SE envelopes and ``tW``, ``bW``
from NW and SW.  ``F`` is smooth on the cells cut out by envelope
breakpoints and by the two switch curves where the top (or bottom) moves
from one side to the other, so its maximum sits at one of

1. the rectangle found by treating envelope corner breakpoints as blue
   points and running the point solver (case 1),
2. a vertical edge fixed at a breakpoint or an ``smax`` edge, the other
   edge optimized in one variable (case 2),
3. a point of a switch curve, optimized in one variable (case 3),
4. a critical point of two opposite corners sliding on their arcs (case 4).

Every candidate is pushed outward until no edge can move, then checked
against all circles.  The reported rectangle is the best one over all
cases.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .arcs import maximize_corner_area, optimize_arc_pair
from .envelope import Envelope, build_envelope
from .geometry import (
    EPS,
    INF,
    QUADRANT_SIGNS,
    QUADRANTS,
    InvalidInstance,
    Point,
    Rect,
    Region,
    UnitCircle,
    Unbounded,
    classify_circle,
    smallest_enclosing_rect,
    squared_distance_to_rect,
)
from .outliers import SolveReport, solve_mbsr

GROW_DELTA = 1e-6


def as_circle(c) -> UnitCircle:
    return c if isinstance(c, UnitCircle) else UnitCircle(Point(*c))


def compute_smax_circles(smin: Rect, circles: Sequence, frame: Optional[Rect] = None) -> Rect:
    """Slide each edge of ``smin`` outward until it touches a circle (or the
    frame).  Circles meeting ``smin`` must have been removed beforehand."""
    edges = {"E": INF, "W": -INF, "N": INF, "S": -INF}
    for c in map(as_circle, circles):
        x, y = c.center
        dy = max(smin.ymin - y, 0.0, y - smin.ymax)
        dx = max(smin.xmin - x, 0.0, x - smin.xmax)
        if dy < 1.0:
            reach = math.sqrt(1.0 - dy * dy)
            if x > smin.xmax:
                edges["E"] = min(edges["E"], x - reach)
            elif x < smin.xmin:
                edges["W"] = max(edges["W"], x + reach)
        if dx < 1.0:
            reach = math.sqrt(1.0 - dx * dx)
            if y > smin.ymax:
                edges["N"] = min(edges["N"], y - reach)
            elif y < smin.ymin:
                edges["S"] = max(edges["S"], y + reach)
    if frame is not None:
        edges["E"] = min(edges["E"], frame.xmax)
        edges["W"] = max(edges["W"], frame.xmin)
        edges["N"] = min(edges["N"], frame.ymax)
        edges["S"] = max(edges["S"], frame.ymin)
    open_sides = [k for k, v in edges.items() if math.isinf(v)]
    if open_sides:
        raise Unbounded(f"edges {''.join(open_sides)} never meet a circle")
    return Rect(edges["W"], edges["S"], edges["E"], edges["N"])


@dataclass(frozen=True)
class CsrCandidate:
    rect: Rect
    case: str
    supports: tuple[str, ...] = ()

    @property
    def area(self) -> float:
        return self.rect.area


def circle_distance(rect: Rect, c: UnitCircle) -> float:
    return math.sqrt(squared_distance_to_rect(rect, c.center))


def avoids_all(rect: Rect, circles: Sequence[UnitCircle], eps: float = EPS) -> bool:
    return all(circle_distance(rect, c) >= 1.0 - eps for c in circles)


def is_inextensible(rect: Rect, circles: Sequence[UnitCircle], frame: Optional[Rect],
                    delta: float = GROW_DELTA) -> bool:
    """Growing any edge by ``delta`` must hit a circle or leave the frame."""
    grown = (
        Rect(rect.xmin, rect.ymin, rect.xmax + delta, rect.ymax),
        Rect(rect.xmin, rect.ymin, rect.xmax, rect.ymax + delta),
        Rect(rect.xmin - delta, rect.ymin, rect.xmax, rect.ymax),
        Rect(rect.xmin, rect.ymin - delta, rect.xmax, rect.ymax),
    )
    for g in grown:
        if frame is not None and not frame.contains_rect(g):
            continue
        if not any(squared_distance_to_rect(g, c.center) < 1.0 for c in circles):
            return False
    return True


def describe_supports(rect: Rect, circles: Sequence[UnitCircle], tol: float = 1e-7) -> tuple[str, ...]:
    """Which circle touches which edge or corner of ``rect``."""
    out = []
    for i, c in enumerate(circles):
        if abs(circle_distance(rect, c) - 1.0) > tol:
            continue
        x, y = c.center
        ew = "E" if x > rect.xmax else "W" if x < rect.xmin else ""
        ns = "N" if y > rect.ymax else "S" if y < rect.ymin else ""
        out.append(f"{ns + ew}:{i}")
    return tuple(out)


class _Layout:
    """The four envelopes and the derived edge bounds in global coordinates."""

    def __init__(self, smin: Rect, smax: Rect, circles: list[UnitCircle], frame: Optional[Rect]):
        self.smin, self.smax, self.circles, self.frame = smin, smax, circles, frame
        by_q = {q: [] for q in QUADRANTS}
        for i, c in enumerate(circles):
            region = classify_circle(c, smin)
            if region in by_q:
                by_q[region].append(i)
        self.env: dict[Region, Envelope] = {
            q: build_envelope([circles[i] for i in ids], q, smin, smax, ids) for q, ids in by_q.items()
        }

    # bounds on the top/bottom from each side
    def t_e(self, X: float) -> float:
        return self.env[Region.NE].value(X)

    def b_e(self, X: float) -> float:
        return -self.env[Region.SE].value(X)

    def t_w(self, Xw: float) -> float:
        return self.env[Region.NW].value(-Xw)

    def b_w(self, Xw: float) -> float:
        return -self.env[Region.SW].value(-Xw)

    def x_e(self, T: float, B: float) -> float:
        a = self.env[Region.NE].inverse(T)
        b = self.env[Region.SE].inverse(-B)
        x0 = self.smin.xmax
        return min(x0 if a is None else a, x0 if b is None else b)

    def x_w(self, T: float, B: float) -> float:
        a = self.env[Region.NW].inverse(T)
        b = self.env[Region.SW].inverse(-B)
        x0 = self.smin.xmin
        return max(x0 if a is None else -a, x0 if b is None else -b)

    def rect_at(self, X: float, Xw: float) -> Rect:
        T = min(self.t_e(X), self.t_w(Xw))
        B = max(self.b_e(X), self.b_w(Xw))
        return Rect(Xw, B, X, T)

    def area(self, X: float, Xw: float) -> float:
        return self.rect_at(X, Xw).area

    def tighten(self, X: float, Xw: float) -> Rect:
        """Push the edges out until none of them can move."""
        X = min(max(X, self.smin.xmax), self.smax.xmax)
        Xw = max(min(Xw, self.smin.xmin), self.smax.xmin)
        for _ in range(16):
            r = self.rect_at(X, Xw)
            X2 = max(X, self.x_e(r.ymax, r.ymin))
            Xw2 = min(Xw, self.x_w(r.ymax, r.ymin))
            if X2 == X and Xw2 == Xw:
                break
            X, Xw = X2, Xw2
        return self.rect_at(X, Xw)

    def e_breaks(self) -> list[float]:
        xs = set(self.env[Region.NE].breakpoint_xs()) | set(self.env[Region.SE].breakpoint_xs())
        for lvl in self.env[Region.NW].flat_levels():
            x = self.env[Region.NE].inverse(lvl)
            if x is not None:
                xs.add(x)
        for lvl in self.env[Region.SW].flat_levels():
            x = self.env[Region.SE].inverse(lvl)
            if x is not None:
                xs.add(x)
        return sorted(xs)

    def w_breaks(self) -> list[float]:
        xs = set(self.env[Region.NW].breakpoint_xs()) | set(self.env[Region.SW].breakpoint_xs())
        for lvl in self.env[Region.NE].flat_levels():
            x = self.env[Region.NW].inverse(lvl)
            if x is not None:
                xs.add(x)
        for lvl in self.env[Region.SE].flat_levels():
            x = self.env[Region.SW].inverse(lvl)
            if x is not None:
                xs.add(x)
        return sorted(-x for x in xs)


def _golden(f: Callable[[float], float], a: float, b: float, tol: float = 1e-12) -> float:
    phi = (math.sqrt(5) - 1) / 2
    c, d = b - phi * (b - a), a + phi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol * (1.0 + abs(a) + abs(b)):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - phi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + phi * (b - a)
            fd = f(d)
    return c if fc >= fd else d


def _scan(f: Callable[[float], float], a: float, b: float, samples: int = 24) -> float:
    """Best point of ``f`` on ``[a, b]``: endpoints, a sample grid, and a
    golden-section refinement around the best sample."""
    if b <= a:
        return a
    step = (b - a) / samples
    xs = [a + i * step for i in range(samples + 1)]
    xs[-1] = b
    vals = [f(x) for x in xs]
    i = max(range(len(xs)), key=vals.__getitem__)
    lo, hi = xs[max(i - 1, 0)], xs[min(i + 1, samples)]
    x = _golden(f, lo, hi)
    return x if f(x) > vals[i] else xs[i]


def _arc_in_piece(env: Envelope, lo: float, hi: float):
    """The circle whose arc forms the envelope on the local open interval
    ``(lo, hi)``, or None when the envelope is flat there."""
    mid = 0.5 * (lo + hi)
    s = env.piece_at(mid).shadow
    if s.is_cap or mid >= s.cx:
        return None
    return s


def _solve_side(lay: _Layout, fixed: float, east_fixed: bool) -> list[tuple[float, float, str]]:
    """Fix one vertical edge and maximize over the other.

    Returns ``(X, Xw, subcase)`` triples, one per smooth piece of the free
    edge's range.  A piece with exactly one sliding arc is solved in closed
    form by the quartic; two arcs (top and bottom from the same side) fall
    back to a scan.
    """
    smin, smax = lay.smin, lay.smax
    if east_fixed:
        X = fixed
        top_fixed, bot_fixed = lay.t_e(X), lay.b_e(X)
        tq, bq = lay.env[Region.NW], lay.env[Region.SW]
        lo_l, hi_l = -smin.xmin, -smax.xmin
        cuts = set(tq.breakpoint_xs()) | set(bq.breakpoint_xs())

        def area(xl: float) -> float:
            return lay.area(X, -xl)
    else:
        Xw = fixed
        top_fixed, bot_fixed = lay.t_w(Xw), lay.b_w(Xw)
        tq, bq = lay.env[Region.NE], lay.env[Region.SE]
        lo_l, hi_l = smin.xmax, smax.xmax
        cuts = set(tq.breakpoint_xs()) | set(bq.breakpoint_xs())

        def area(xl: float) -> float:
            return lay.area(xl, Xw)

    for x in (tq.inverse(top_fixed), bq.inverse(-bot_fixed)):
        if x is not None:
            cuts.add(x)
    cuts = sorted(c for c in cuts | {lo_l, hi_l} if lo_l <= c <= hi_l)

    out = []
    for a, b in zip(cuts, cuts[1:]):
        if b <= a:
            continue
        mid = 0.5 * (a + b)
        top_free = tq.value(mid) < top_fixed
        bot_free = -bq.value(mid) > bot_fixed
        arc_t = _arc_in_piece(tq, a, b) if top_free else None
        arc_b = _arc_in_piece(bq, a, b) if bot_free else None
        best, sub = max((a, b), key=area), "2.1"
        if arc_t is not None and arc_b is not None:
            x = _scan(area, a, b)
            if area(x) > area(best):
                best, sub = x, "2.2"
        elif arc_t is not None or arc_b is not None:
            s = arc_t if arc_t is not None else arc_b
            other_y = bot_fixed if arc_t is not None else -top_fixed
            # width = other-side offset + (s.cx - sin t); height = s.cy + other_y' - cos t
            w = s.cx + (fixed if east_fixed else -fixed)
            h = s.cy - other_y
            t_lo = math.asin(min(1.0, max(0.0, s.cx - b)))
            t_hi = math.asin(min(1.0, max(0.0, s.cx - a)))
            t, _ = maximize_corner_area(w, h, t_lo, t_hi)
            x = min(max(s.cx - math.sin(t), a), b)
            if area(x) > area(best):
                best, sub = x, "2.2"
        if east_fixed:
            out.append((fixed, -best, sub))
        else:
            out.append((best, fixed, sub))
    if not out:
        out.append((fixed, -lo_l, "2.1") if east_fixed else (lo_l, fixed, "2.1"))
    return out


def _switch_curve(lay: _Layout, top: bool) -> list[tuple[float, float, str]]:
    """Maximize along the curve where the top (or bottom) is held by both
    sides at once, parametrized by that common height."""
    if top:
        e_env, w_env, sub = lay.env[Region.NE], lay.env[Region.NW], "3.1"
    else:
        e_env, w_env, sub = lay.env[Region.SE], lay.env[Region.SW], "3.2"
    lo = max(e_env.y0, w_env.y0)
    hi = min(e_env.value(e_env.x0), w_env.value(w_env.x0))
    if not hi > lo:
        return []

    def point(v: float) -> tuple[float, float]:
        return e_env.inverse(v), -w_env.inverse(v)

    def area(v: float) -> float:
        X, Xw = point(v)
        return lay.area(X, Xw)

    levels = {lo, hi}
    for env in lay.env.values():
        for bp in env.breakpoints:
            levels.add(bp.point.y if top else -bp.point.y)
    for env in (e_env, w_env):
        for x in env.breakpoint_xs():
            levels.add(env.value(x))
    levels = sorted(v for v in levels if lo <= v <= hi)
    out = []
    for a, b in zip(levels, levels[1:]):
        v = _scan(area, a, b, samples=12)
        X, Xw = point(v)
        out.append((X, Xw, sub))
    return out


def _arc_elements(env: Envelope):
    for p in env.pieces:
        s = p.shadow
        if s.is_cap or p.lo >= min(p.hi, s.cx):
            continue
        t_lo = math.asin(min(1.0, s.cx - min(p.hi, s.cx)))
        t_hi = math.asin(min(1.0, s.cx - p.lo))
        yield s, (t_lo, t_hi)


def _diagonal_pairs(lay: _Layout, ne_sw: bool) -> list[tuple[float, float, str]]:
    """Critical points with two opposite corners both on arcs."""
    if ne_sw:
        e_env, w_env, sub = lay.env[Region.NE], lay.env[Region.SW], "4.1"
    else:
        e_env, w_env, sub = lay.env[Region.SE], lay.env[Region.NW], "4.2"
    out = []
    w_arcs = list(_arc_elements(w_env))
    for s1, iv1 in _arc_elements(e_env):
        for s2, iv2 in w_arcs:
            # local centres: width = s1.cx + s2.cx - sin a - sin b, height likewise
            a, b, _ = optimize_arc_pair(s1.cx + s2.cx, s1.cy + s2.cy, iv1, iv2)
            out.append((s1.cx - math.sin(a), -(s2.cx - math.sin(b)), sub))
    return out


def _finalize(lay: _Layout, X: float, Xw: float, case: str) -> Optional[CsrCandidate]:
    rect = lay.tighten(X, Xw)
    if not (rect.contains_rect(lay.smin) and avoids_all(rect, lay.circles)):
        return None
    return CsrCandidate(rect, case, describe_supports(rect, lay.circles))


def _best(cands: list[Optional[CsrCandidate]]) -> Optional[CsrCandidate]:
    cands = [c for c in cands if c is not None]
    if not cands:
        return None
    return min(cands, key=lambda c: c.rect.sort_key())


def solve_case1(lay: _Layout, red: Sequence[Point]) -> Optional[CsrCandidate]:
    """Corner breakpoints stand in for the circles; the point solver then
    finds the largest rectangle inside ``smax`` that swallows none of them."""
    pts = [p for env in lay.env.values() for p in env.corner_breakpoints()]
    rect = solve_mbsr(red, pts, frame=lay.smax).best
    if not avoids_all(rect, lay.circles):
        return None
    if not is_inextensible(rect, lay.circles, lay.frame):
        return None
    return CsrCandidate(rect, "1", describe_supports(rect, lay.circles))


def solve_case2(lay: _Layout) -> Optional[CsrCandidate]:
    cands = []
    for X in lay.e_breaks():
        cands += [_finalize(lay, *t) for t in _solve_side(lay, X, east_fixed=True)]
    for Xw in lay.w_breaks():
        cands += [_finalize(lay, *t) for t in _solve_side(lay, Xw, east_fixed=False)]
    return _best(cands)


def solve_case3(lay: _Layout) -> Optional[CsrCandidate]:
    cands = [_finalize(lay, *t) for top in (True, False) for t in _switch_curve(lay, top)]
    return _best(cands)


def solve_case4(lay: _Layout) -> Optional[CsrCandidate]:
    cands = [_finalize(lay, *t) for d in (True, False) for t in _diagonal_pairs(lay, d)]
    return _best(cands)


@dataclass(frozen=True)
class CircleInstance:
    red: list[Point]
    circles: list[UnitCircle]
    smin: Rect
    smax: Rect
    frame: Optional[Rect]


def prepare_circles(red, circles, frame: Optional[Rect] = None) -> CircleInstance:
    """Drop circles meeting ``smin`` and compute ``smax``."""
    red = [Point(*p) for p in red]
    smin = smallest_enclosing_rect(red)
    if frame is not None and not frame.contains_rect(smin):
        raise InvalidInstance("the frame does not contain every red point")
    kept = [c for c in map(as_circle, circles) if classify_circle(c, smin) is not Region.INSIDE]
    smax = compute_smax_circles(smin, kept, frame)
    return CircleInstance(red, kept, smin, smax, frame)


def layout(inst: CircleInstance) -> _Layout:
    return _Layout(inst.smin, inst.smax, inst.circles, inst.frame)


def solve_mbsr_c_candidates(red, circles, frame: Optional[Rect] = None) -> list[CsrCandidate]:
    inst = prepare_circles(red, circles, frame)
    lay = layout(inst)
    found = [solve_case1(lay, inst.red), solve_case2(lay), solve_case3(lay), solve_case4(lay)]
    return [c for c in found if c is not None]


def solve_mbsr_c(red, circles, frame: Optional[Rect] = None) -> SolveReport:
    """Largest rectangle containing every red point and no part of any blue
    unit disk (circles meeting the red bounding box are ignored)."""
    t0 = time.perf_counter_ns()
    cands = solve_mbsr_c_candidates(red, circles, frame)
    if not cands:
        raise InvalidInstance("no candidate rectangle survived validation")
    best = min(cands, key=lambda c: c.rect.sort_key())
    return SolveReport(best.rect, 0, len(cands), time.perf_counter_ns() - t0, "csr_case" + best.case)
