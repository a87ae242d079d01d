"""Multi-level staircases of a quadrant and the staircase rectangle problem.

A rectangle that contains ``smin`` meets a corner quadrant in the box spanned
by the ``smin`` corner and the rectangle corner, so the number of quadrant
points it swallows depends on its corner alone.  For a budget of ``t`` points
the admissible corners form a region whose boundary is the ``t``-level
staircase.  We store each level by its inner corners: a corner ``c`` is a
minimal position such that ``t + 1`` points lie componentwise at or below
``c`` (in the quadrant's own orientation).  A rectangle respects level ``t``
iff no such corner lies in its open interior.
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .geometry import (
    INF,
    QUADRANT_SIGNS,
    QUADRANTS,
    InvalidComposition,
    Point,
    Rect,
    Region,
)


@dataclass(frozen=True)
class StairVertex:
    point: Point
    kind: str  # "q": a blue point of the quadrant, "r": a projection

    @property
    def x(self) -> float:
        return self.point.x

    @property
    def y(self) -> float:
        return self.point.y


@dataclass(frozen=True)
class StaircaseSet:
    quadrant: Region
    levels: tuple[tuple[StairVertex, ...], ...]

    @property
    def k(self) -> int:
        return len(self.levels) - 1

    def corners(self, t: int) -> list[Point]:
        return [v.point for v in self.levels[t]]

    def vertex_count(self) -> int:
        return sum(len(level) for level in self.levels)


def sweep_levels(points: Sequence[tuple[float, float]], k: int) -> list[list[tuple[float, float, int, int]]]:
    """Vertical sweep over NE-oriented points.

    Returns, per level ``t <= k``, the inner corners in increasing x as tuples
    ``(x, y, column_owner, row_owner)`` where the owners index ``points``.
    Only the ``k + 1`` lowest y values seen so far are kept; inserting a point
    at rank ``s`` shifts levels ``s..k`` down by one slot, and every level
    whose height drops records a corner at the sweep position.
    """
    order = sorted(range(len(points)), key=lambda i: (points[i][0], points[i][1]))
    low_y: list[float] = []
    low_owner: list[int] = []
    levels: list[list[tuple[float, float, int, int]]] = [[] for _ in range(k + 1)]
    i = 0
    while i < len(order):
        x = points[order[i]][0]
        before = list(low_y)
        group = []
        while i < len(order) and points[order[i]][0] == x:
            group.append(order[i])
            i += 1
        for j in group:
            y = points[j][1]
            s = bisect.bisect_right(low_y, y)
            if s > k:
                continue
            low_y.insert(s, y)
            low_owner.insert(s, j)
            del low_y[k + 1:]
            del low_owner[k + 1:]
        column_owner = group[-1]
        for t in range(min(k + 1, len(low_y))):
            old = before[t] if t < len(before) else INF
            if low_y[t] < old:
                owner = low_owner[t]
                col = owner if owner in group else column_owner
                levels[t].append((x, low_y[t], col, owner))
    return levels


def build_staircases(blue_quadrant: Sequence[Point], quadrant: Region, k: int) -> StaircaseSet:
    """All ``t``-level staircases, ``t = 0..k``, of the points of one quadrant."""
    if k < 0:
        raise ValueError("k must be non-negative")
    sx, sy = QUADRANT_SIGNS[quadrant]
    local = [(sx * p[0], sy * p[1]) for p in blue_quadrant]
    levels = []
    for chain in sweep_levels(local, k):
        verts = []
        for x, y, col, row in chain:
            kind = "q" if col == row else "r"
            verts.append(StairVertex(Point(sx * x, sy * y), kind))
        levels.append(tuple(verts))
    return StaircaseSet(quadrant, tuple(levels))


@dataclass(frozen=True)
class SideSupports:
    """Distances of side-region points from ``smin``, closest first."""

    smin: Rect
    coords: Mapping[Region, tuple[float, ...]] = field(default_factory=dict)

    @classmethod
    def from_regions(cls, smin: Rect, groups: Mapping[Region, Sequence[Point]]) -> "SideSupports":
        coords = {
            Region.E: tuple(sorted(p.x for p in groups.get(Region.E, ()))),
            Region.W: tuple(sorted((p.x for p in groups.get(Region.W, ())), reverse=True)),
            Region.N: tuple(sorted(p.y for p in groups.get(Region.N, ()))),
            Region.S: tuple(sorted((p.y for p in groups.get(Region.S, ())), reverse=True)),
        }
        return cls(smin, coords)

    def distances(self, side: Region) -> list[float]:
        edge = {Region.E: self.smin.xmax, Region.W: self.smin.xmin,
                Region.N: self.smin.ymax, Region.S: self.smin.ymin}[side]
        return [abs(v - edge) for v in self.coords[side]]

    def edge(self, side: Region, kq: int) -> float:
        """Coordinate of the (kq+1)-th closest point, or an infinite edge."""
        vals = self.coords[side]
        if kq < len(vals):
            return vals[kq]
        return INF if side in (Region.E, Region.N) else -INF


class CornerProfile:
    """Prefix-extreme view of one quadrant's corner set.

    In the quadrant's NE orientation, ``bound(X)`` is the lowest corner height
    among corners strictly left of ``X``; the rectangle's edge on that side
    may not rise above it.
    """

    __slots__ = ("xs", "prefix")

    def __init__(self, corners_local: Sequence[tuple[float, float]]):
        pts = sorted(corners_local)
        self.xs = np.array([p[0] for p in pts], dtype=float)
        ys = np.array([p[1] for p in pts], dtype=float)
        self.prefix = np.minimum.accumulate(ys) if len(ys) else ys

    def bound(self, xq: np.ndarray) -> np.ndarray:
        idx = np.searchsorted(self.xs, xq, side="left")
        out = np.full(idx.shape, INF)
        has = idx > 0
        if self.prefix.size:
            out[has] = self.prefix[idx[has] - 1]
        return out


def profiles_from_corners(corners: Mapping[Region, Sequence[tuple[float, float]]]) -> dict[Region, CornerProfile]:
    out = {}
    for q in QUADRANTS:
        sx, sy = QUADRANT_SIGNS[q]
        out[q] = CornerProfile([(sx * c[0], sy * c[1]) for c in corners.get(q, ())])
    return out


def solve_profiles(smin: Rect, smax: Rect, prof: Mapping[Region, CornerProfile]) -> Rect:
    """Largest rectangle between ``smin`` and ``smax`` with no profile corner
    in its open interior.

    The east and west edges are enumerated among corner abscissae and the
    ``smax`` edges; for a fixed pair the top and bottom are forced.
    """
    if not smax.contains_rect(smin):
        raise InvalidComposition(f"S_max {smax.as_tuple()} misses S_min {smin.as_tuple()}")
    if not smax.is_finite():
        raise ValueError("staircase problem needs a bounded S_max")
    ne, se, nw, sw = prof[Region.NE], prof[Region.SE], prof[Region.NW], prof[Region.SW]

    xe = np.concatenate((ne.xs, se.xs))
    xe = xe[(xe >= smin.xmax) & (xe < smax.xmax)]
    xe = np.unique(np.append(xe, smax.xmax))
    # west candidates live in the reflected frame x' = -x
    xw = np.concatenate((nw.xs, sw.xs))
    xw = xw[(xw >= -smin.xmin) & (xw < -smax.xmin)]
    xw = -np.unique(np.append(xw, -smax.xmin))

    top_e = np.minimum(ne.bound(xe), smax.ymax)
    bot_e = np.maximum(-se.bound(xe), smax.ymin)
    top_w = np.minimum(nw.bound(-xw), smax.ymax)
    bot_w = np.maximum(-sw.bound(-xw), smax.ymin)

    top = np.minimum(top_e[:, None], top_w[None, :])
    bot = np.maximum(bot_e[:, None], bot_w[None, :])
    height = top - bot
    width = xe[:, None] - xw[None, :]
    with np.errstate(invalid="ignore"):
        area = np.where(height >= 0, width * np.where(height >= 0, height, 0.0), -INF)
    best = area.max()
    ii, jj = np.nonzero(area == best)
    cands = [(xw[j], bot[i, j], xe[i], top[i, j]) for i, j in zip(ii, jj)]
    return Rect(*(float(v) for v in min(cands)))


def solve_staircase_problem(
    smin: Rect,
    smax: Rect,
    chains: Mapping[Region, Sequence[tuple[float, float]]],
) -> Rect:
    """Maximum-area rectangle with ``smin`` inside, inside ``smax``, whose
    open interior contains no staircase corner of the supplied chains.

    ``chains`` maps each corner quadrant to its corner points (missing
    quadrants are unconstrained).  A corner may carry an infinite coordinate
    when it stands for a support that binds one edge only.
    """
    return solve_profiles(smin, smax, profiles_from_corners(chains))


def corners_of(stairs: StaircaseSet, t: int) -> list[tuple[float, float]]:
    if t >= len(stairs.levels):
        return []
    return [(v.x, v.y) for v in stairs.levels[t]]


def is_monotone_chain(chain: Sequence[StairVertex], quadrant: Region) -> bool:
    sx, sy = QUADRANT_SIGNS[quadrant]
    local = [(sx * v.x, sy * v.y) for v in chain]
    return all(a[0] < b[0] and a[1] > b[1] for a, b in zip(local, local[1:]))
