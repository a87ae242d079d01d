"""Planar primitives shared by the point and circle solvers.

Point solvers compare raw input coordinates only, so every predicate here
that deals with points is exact.  Circle predicates use the tolerances
``EPS`` (coordinates) and ``EPS_SQ`` (squared distances).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple, Sequence, Union

EPS = 1e-9
EPS_SQ = 1e-12

INF = math.inf


class InvalidInstance(ValueError):
    """The input cannot describe a separation problem (e.g. no red points)."""


class Unbounded(ValueError):
    """Some edge of the optimal rectangle can be pushed to infinity."""


class InvalidComposition(ValueError):
    """An outlier composition whose S_max does not contain S_min."""


class GuardExceeded(ValueError):
    """A brute-force routine was asked to run on an instance that is too large."""


class Point(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class Rect:
    xmin: float
    ymin: float
    xmax: float
    ymax: float

    def __post_init__(self):
        if not (self.xmin <= self.xmax and self.ymin <= self.ymax):
            raise ValueError(f"inverted rectangle {self.as_tuple()}")

    @property
    def width(self) -> float:
        return self.xmax - self.xmin

    @property
    def height(self) -> float:
        return self.ymax - self.ymin

    @property
    def area(self) -> float:
        return (self.xmax - self.xmin) * (self.ymax - self.ymin)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.xmin, self.ymin, self.xmax, self.ymax)

    def sort_key(self) -> tuple:
        """Order used to pick one optimum among equal areas: larger area first,
        then lexicographically smaller (xmin, ymin, xmax, ymax)."""
        return (-self.area, self.xmin, self.ymin, self.xmax, self.ymax)

    def contains_rect(self, other: "Rect") -> bool:
        return (self.xmin <= other.xmin and self.ymin <= other.ymin
                and other.xmax <= self.xmax and other.ymax <= self.ymax)

    def is_finite(self) -> bool:
        return all(math.isfinite(v) for v in self.as_tuple())


@dataclass(frozen=True)
class UnitCircle:
    center: Point

    radius = 1.0

    @property
    def x(self) -> float:
        return self.center.x

    @property
    def y(self) -> float:
        return self.center.y


class Region(str, Enum):
    E = "E"
    N = "N"
    W = "W"
    S = "S"
    NE = "NE"
    NW = "NW"
    SW = "SW"
    SE = "SE"
    INSIDE = "INSIDE"


SIDES = (Region.E, Region.N, Region.W, Region.S)
QUADRANTS = (Region.NE, Region.NW, Region.SW, Region.SE)

# Sign flips that map a quadrant onto NE: (x, y) -> (sx * x, sy * y).
QUADRANT_SIGNS = {
    Region.NE: (1, 1),
    Region.NW: (-1, 1),
    Region.SW: (-1, -1),
    Region.SE: (1, -1),
}


def smallest_enclosing_rect(red: Iterable[Point]) -> Rect:
    red = list(red)
    if not red:
        raise InvalidInstance("the red point set is empty")
    xs = [p[0] for p in red]
    ys = [p[1] for p in red]
    return Rect(min(xs), min(ys), max(xs), max(ys))


def rect_contains(r: Rect, p: Point) -> bool:
    """Closed containment, used for red points."""
    return r.xmin <= p[0] <= r.xmax and r.ymin <= p[1] <= r.ymax


def rect_contains_open(r: Rect, p: Point) -> bool:
    """Open-interior containment, used for blue points: a blue point on the
    boundary supports the rectangle and is not an outlier."""
    return r.xmin < p[0] < r.xmax and r.ymin < p[1] < r.ymax


def squared_distance_to_rect(r: Rect, p: Point) -> float:
    dx = max(r.xmin - p[0], 0.0, p[0] - r.xmax)
    dy = max(r.ymin - p[1], 0.0, p[1] - r.ymax)
    return dx * dx + dy * dy


def rect_avoids_circle(r: Rect, c: UnitCircle, eps_sq: float = 0.0) -> bool:
    """True iff the closed rectangle and the closed unit disk share no point,
    tangency allowed.  ``eps_sq`` relaxes the test for floating-point output."""
    return squared_distance_to_rect(r, c.center) >= 1.0 - eps_sq


def classify_point(p: Point, smin: Rect) -> Region:
    """Region of a blue point around ``smin``.

    Points in the closed ``smin`` are INSIDE (discarded).  A point on the
    extension of an ``smin`` edge is put in the corner region it borders,
    because the rectangle swallows it exactly when both adjacent edges move
    past it.
    """
    x, y = p
    if smin.xmin <= x <= smin.xmax and smin.ymin <= y <= smin.ymax:
        return Region.INSIDE
    if x > smin.xmax or (x == smin.xmax and (y > smin.ymax or y < smin.ymin)):
        if y >= smin.ymax:
            return Region.NE
        if y <= smin.ymin:
            return Region.SE
        return Region.E
    if x < smin.xmin or (x == smin.xmin and (y > smin.ymax or y < smin.ymin)):
        if y >= smin.ymax:
            return Region.NW
        if y <= smin.ymin:
            return Region.SW
        return Region.W
    return Region.N if y > smin.ymax else Region.S


def classify_circle(c: UnitCircle, smin: Rect) -> Region:
    """INSIDE when the disk properly intersects ``smin``; otherwise the region
    of the center.  Tangent circles are kept since they still block growth."""
    if squared_distance_to_rect(smin, c.center) < 1.0:
        return Region.INSIDE
    x, y = c.center
    if x > smin.xmax:
        if y > smin.ymax:
            return Region.NE
        if y < smin.ymin:
            return Region.SE
        return Region.E
    if x < smin.xmin:
        if y > smin.ymax:
            return Region.NW
        if y < smin.ymin:
            return Region.SW
        return Region.W
    return Region.N if y > smin.ymax else Region.S


def classify_region(obj: Union[Point, UnitCircle], smin: Rect) -> Region:
    if isinstance(obj, UnitCircle):
        return classify_circle(obj, smin)
    return classify_point(obj, smin)


def split_by_region(points: Sequence[Point], smin: Rect) -> dict[Region, list[Point]]:
    groups: dict[Region, list[Point]] = {r: [] for r in Region}
    for p in points:
        groups[classify_point(p, smin)].append(Point(*p))
    return groups


def count_open(r: Rect, points: Iterable[Point]) -> int:
    return sum(1 for p in points if rect_contains_open(r, p))


def reflect_point(p: Point, sx: int, sy: int) -> Point:
    return Point(sx * p[0], sy * p[1])
