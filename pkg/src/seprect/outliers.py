"""Largest red-enclosing rectangle with at most ``k`` blue outliers.

Two pipelines are provided.  The baseline splits the outlier budget over the
eight regions around ``smin``: side budgets pick the ``smax`` edges, corner
budgets pick a staircase level, and one staircase problem is solved per
split.  The pair-set pipeline merges each side region into the next corner
region counter-clockwise (N with NE, E with SE, S with SW, W with NW); the
count of such a merged pair depends on one rectangle corner only, so four
budgets summing to ``k`` are enough.
"""
from __future__ import annotations

import bisect
import time
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .geometry import (
    INF,
    QUADRANT_SIGNS,
    QUADRANTS,
    SIDES,
    InvalidInstance,
    Point,
    Rect,
    Region,
    Unbounded,
    count_open,
    smallest_enclosing_rect,
    split_by_region,
)
from .staircase import (
    CornerProfile,
    SideSupports,
    build_staircases,
    corners_of,
    solve_profiles,
)

COMPOSITION_ORDER = (Region.E, Region.N, Region.W, Region.S,
                     Region.NE, Region.NW, Region.SW, Region.SE)

# side region merged into each quadrant, and which of its coordinates is free
PAIR_SIDE = {Region.NE: Region.N, Region.SE: Region.E, Region.SW: Region.S, Region.NW: Region.W}
_FREE_AXIS = {Region.N: 0, Region.S: 0, Region.E: 1, Region.W: 1}


@dataclass(frozen=True)
class Composition:
    k_E: int = 0
    k_N: int = 0
    k_W: int = 0
    k_S: int = 0
    k_NE: int = 0
    k_NW: int = 0
    k_SW: int = 0
    k_SE: int = 0

    def __getitem__(self, region: Region) -> int:
        return getattr(self, "k_" + region.value)

    @property
    def total(self) -> int:
        return sum(self[r] for r in COMPOSITION_ORDER)


@dataclass(frozen=True)
class PairSet:
    """Supports of one region pair at level ``t``.

    Each pair is ``(top, right)`` in the quadrant's own orientation; ``right``
    is ``None`` when the corner is pinned by side-region points alone and
    therefore bounds only the horizontal edge (dually ``top`` is ``None``).
    ``corners`` holds the matching corner positions in input coordinates.
    """

    quadrant: Region
    t: int
    pairs: tuple[tuple[Optional[Point], Optional[Point]], ...]
    corners: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class SolveReport:
    best: Rect
    outliers_used: int
    compositions_tried: int
    elapsed_ns: int
    algorithm: str


@dataclass(frozen=True)
class _Instance:
    red: list[Point]
    blue: list[Point]
    smin: Rect
    groups: dict
    frame: Optional[Rect]


def _prepare(red: Sequence, blue: Sequence, k: int, frame: Optional[Rect]) -> _Instance:
    if k < 0:
        raise InvalidInstance("k must be non-negative")
    red = [Point(*p) for p in red]
    blue = [Point(*p) for p in blue]
    smin = smallest_enclosing_rect(red)
    if frame is not None and not frame.contains_rect(smin):
        raise InvalidInstance("the frame does not contain every red point")
    groups = split_by_region(blue, smin)
    if frame is None:
        for side in SIDES:
            if len(groups[side]) <= k:
                raise Unbounded(f"side region {side.value} holds {len(groups[side])} <= k={k} blue points")
    return _Instance(red, blue, smin, groups, frame)


def _kept(inst: _Instance) -> list[Point]:
    return [p for r, pts in inst.groups.items() if r is not Region.INSIDE for p in pts]


def compositions(k: int, parts: int = 8) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` non-negative integers with sum <= k, in
    lexicographic order."""
    if parts == 0:
        yield ()
        return
    for first in range(k + 1):
        for rest in compositions(k - first, parts - 1):
            yield (first,) + rest


def _report(inst: _Instance, best: Rect, tried: int, t0: int, algorithm: str) -> SolveReport:
    used = count_open(best, _kept(inst))
    return SolveReport(best, used, tried, time.perf_counter_ns() - t0, algorithm)


def _smax_for(sides: SideSupports, comp: Composition, frame: Optional[Rect]) -> Rect:
    xmax = sides.edge(Region.E, comp.k_E)
    ymax = sides.edge(Region.N, comp.k_N)
    xmin = sides.edge(Region.W, comp.k_W)
    ymin = sides.edge(Region.S, comp.k_S)
    if frame is not None:
        xmin, ymin = max(xmin, frame.xmin), max(ymin, frame.ymin)
        xmax, ymax = min(xmax, frame.xmax), min(ymax, frame.ymax)
    return Rect(xmin, ymin, xmax, ymax)


def solve_mbsr_o_baseline(red, blue, k: int, frame: Optional[Rect] = None) -> SolveReport:
    """Enumerate every split of ``k`` over the eight regions.

    All staircase levels are computed once up front; each split then costs a
    single staircase problem.
    """
    t0 = time.perf_counter_ns()
    inst = _prepare(red, blue, k, frame)
    sides = SideSupports.from_regions(inst.smin, inst.groups)
    profiles = {}
    for q in QUADRANTS:
        stairs = build_staircases(inst.groups[q], q, k)
        sx, sy = QUADRANT_SIGNS[q]
        profiles[q] = [CornerProfile([(sx * x, sy * y) for x, y in corners_of(stairs, t)])
                       for t in range(k + 1)]

    best: Optional[Rect] = None
    tried = 0
    for parts in compositions(k):
        comp = Composition(*parts)
        tried += 1
        smax = _smax_for(sides, comp, inst.frame)
        rect = solve_profiles(inst.smin, smax, {q: profiles[q][comp[q]] for q in QUADRANTS})
        if best is None or rect.sort_key() < best.sort_key():
            best = rect
    return _report(inst, best, tried, t0, "baseline_k7")


def solve_mbsr(red, blue, frame: Optional[Rect] = None) -> SolveReport:
    """Plain separating rectangle: no blue point outside ``smin`` may be covered."""
    return solve_mbsr_o_baseline(red, blue, 0, frame)


def _pair_local(side_pts: Sequence[Point], quad_pts: Sequence[Point], quadrant: Region):
    sx, sy = QUADRANT_SIGNS[quadrant]
    free = _FREE_AXIS[PAIR_SIDE[quadrant]]
    local, owners = [], []
    for p in side_pts:
        q = [sx * p.x, sy * p.y]
        q[free] = -INF
        local.append(tuple(q))
        owners.append(p)
    for p in quad_pts:
        local.append((sx * p.x, sy * p.y))
        owners.append(p)
    return local, owners


def horizontal_sweep(local: Sequence[tuple[float, float]], k: int) -> list[list[tuple[float, float, int, int]]]:
    """Sweep a horizontal line upward over NE-oriented points.

    Every point met is a candidate top support; the right support of a level
    ``t`` corner is the point holding the ``(t+1)``-th smallest abscissa
    below the line.  ``xs`` plays the role of the x-ordered search tree.
    Returns per level tuples ``(corner_x, corner_y, top_idx, right_idx)``.
    """
    order = sorted(range(len(local)), key=lambda i: (local[i][1], local[i][0]))
    xs: list[float] = []
    owner: list[int] = []
    out: list[list[tuple[float, float, int, int]]] = [[] for _ in range(k + 1)]
    i = 0
    while i < len(order):
        y = local[order[i]][1]
        before = xs[:k + 1]
        top = order[i]
        while i < len(order) and local[order[i]][1] == y:
            j = order[i]
            pos = bisect.bisect_right(xs, local[j][0])
            xs.insert(pos, local[j][0])
            owner.insert(pos, j)
            i += 1
        for t in range(min(k + 1, len(xs))):
            old = before[t] if t < len(before) else INF
            if xs[t] < old:
                out[t].append((xs[t], y, top, owner[t]))
    return out


def _pair_sets_all(side_pts, quad_pts, quadrant: Region, k: int) -> list[PairSet]:
    local, owners = _pair_local(side_pts, quad_pts, quadrant)
    sx, sy = QUADRANT_SIGNS[quadrant]
    free = _FREE_AXIS[PAIR_SIDE[quadrant]]
    result = []
    for t, level in enumerate(horizontal_sweep(local, k)):
        pairs, corners = [], []
        for cx, cy, top, right in level:
            top_pt = None if (free == 1 and cy == -INF) else owners[top]
            right_pt = None if (free == 0 and cx == -INF) else owners[right]
            pairs.append((top_pt, right_pt))
            corners.append((sx * cx, sy * cy))
        result.append(PairSet(quadrant, t, tuple(pairs), tuple(corners)))
    return result


def build_pair_sets(side_pts: Sequence[Point], quad_pts: Sequence[Point], quadrant: Region, k_p: int) -> PairSet:
    """Support pairs of the region pair ``(PAIR_SIDE[quadrant], quadrant)``
    for rectangles holding ``k_p`` of its points.

    ``side_pts`` must lie in the side region and ``quad_pts`` in the quadrant.
    An empty result means the pair does not constrain that corner.
    """
    side_pts = [Point(*p) for p in side_pts]
    quad_pts = [Point(*p) for p in quad_pts]
    return _pair_sets_all(side_pts, quad_pts, quadrant, k_p)[k_p]


def solve_mbsr_o_pairset(red, blue, k: int, frame: Optional[Rect] = None) -> SolveReport:
    """Four merged region pairs, budgets ``(k_WNW, k_ESE, k_SSW)`` free and
    ``k_NNE`` forced to the remainder."""
    t0 = time.perf_counter_ns()
    inst = _prepare(red, blue, k, frame)
    profiles = {}
    for q in QUADRANTS:
        sets = _pair_sets_all(inst.groups[PAIR_SIDE[q]], inst.groups[q], q, k)
        sx, sy = QUADRANT_SIGNS[q]
        profiles[q] = [CornerProfile([(sx * x, sy * y) for x, y in ps.corners]) for ps in sets]

    box = inst.frame
    if box is None:
        pts = _kept(inst)
        box = Rect(min([inst.smin.xmin] + [p.x for p in pts]),
                   min([inst.smin.ymin] + [p.y for p in pts]),
                   max([inst.smin.xmax] + [p.x for p in pts]),
                   max([inst.smin.ymax] + [p.y for p in pts]))

    best: Optional[Rect] = None
    tried = 0
    for k_wnw, k_ese, k_ssw in compositions(k, 3):
        k_nne = k - k_wnw - k_ese - k_ssw
        tried += 1
        rect = solve_profiles(inst.smin, box, {
            Region.NW: profiles[Region.NW][k_wnw],
            Region.SE: profiles[Region.SE][k_ese],
            Region.SW: profiles[Region.SW][k_ssw],
            Region.NE: profiles[Region.NE][k_nne],
        })
        if best is None or rect.sort_key() < best.sort_key():
            best = rect
    return _report(inst, best, tried, t0, "pairset_k3")


def solve_mbsr_o(red, blue, k: int, frame: Optional[Rect] = None, algorithm: str = "auto") -> SolveReport:
    if algorithm == "auto":
        algorithm = "pairset" if k >= 2 else "baseline"
    if algorithm == "baseline":
        return solve_mbsr_o_baseline(red, blue, k, frame)
    if algorithm == "pairset":
        return solve_mbsr_o_pairset(red, blue, k, frame)
    raise ValueError(f"unknown algorithm {algorithm!r}")
