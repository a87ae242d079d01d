"""Random instances for tests, the CLI and benchmarks.

Everything is driven by one ``numpy.random.Generator`` seeded from the
caller, so equal arguments give byte-identical files.  Coordinates are
rounded to a fixed number of decimals to keep files short.
"""
from __future__ import annotations

from typing import Optional

import numpy as np

from .geometry import InvalidInstance, Point, Rect, smallest_enclosing_rect, squared_distance_to_rect
from .io import InstanceFile

LAYOUTS = ("uniform", "clustered", "staircase-adversarial")
DECIMALS = 6
POINT_FRAME = Rect(0.0, 0.0, 100.0, 100.0)
CIRCLE_FRAME = Rect(0.0, 0.0, 12.0, 12.0)


def _round(v: float) -> float:
    return float(round(float(v), DECIMALS))


def _red(rng: np.random.Generator, n: int, frame: Rect, spread: float) -> list[Point]:
    cx, cy = (frame.xmin + frame.xmax) / 2, (frame.ymin + frame.ymax) / 2
    hw, hh = spread * frame.width / 2, spread * frame.height / 2
    return [Point(_round(rng.uniform(cx - hw, cx + hw)), _round(rng.uniform(cy - hh, cy + hh)))
            for _ in range(n)]


def _uniform(rng, m: int, frame: Rect) -> list[Point]:
    return [Point(_round(rng.uniform(frame.xmin, frame.xmax)), _round(rng.uniform(frame.ymin, frame.ymax)))
            for _ in range(m)]


def _clustered(rng, m: int, frame: Rect) -> list[Point]:
    if m == 0:
        return []
    centers = _uniform(rng, max(1, m // 6), frame)
    sd = 0.05 * min(frame.width, frame.height)
    out = []
    for i in range(m):
        c = centers[rng.integers(len(centers))]
        x = min(max(rng.normal(c.x, sd), frame.xmin), frame.xmax)
        y = min(max(rng.normal(c.y, sd), frame.ymin), frame.ymax)
        out.append(Point(_round(x), _round(y)))
    return out


def _antichain(rng, m: int, frame: Rect, smin: Rect) -> list[Point]:
    """About ``m / 4`` points per quadrant, each group decreasing away from
    ``smin`` so that no point of a group dominates another."""
    out = []
    per = [m // 4 + (1 if i < m % 4 else 0) for i in range(4)]
    corners = ((1, 1), (-1, 1), (-1, -1), (1, -1))
    for count, (sx, sy) in zip(per, corners):
        if count == 0:
            continue
        x0 = smin.xmax if sx > 0 else smin.xmin
        y0 = smin.ymax if sy > 0 else smin.ymin
        xr = (frame.xmax - x0) if sx > 0 else (x0 - frame.xmin)
        yr = (frame.ymax - y0) if sy > 0 else (y0 - frame.ymin)
        for i in range(count):
            u = (i + 1) / (count + 1)
            jitter = rng.uniform(-0.2, 0.2) / (count + 1)
            px = x0 + sx * xr * (u + jitter) * 0.9
            py = y0 + sy * yr * (1 - u - jitter) * 0.9
            out.append(Point(_round(px), _round(py)))
    return out


def generate_points(n: int, m: int, k: int = 0, seed: int = 0, frame: Optional[Rect] = None,
                    layout: str = "uniform") -> InstanceFile:
    if n < 1:
        raise InvalidInstance("at least one red point is needed")
    if m < 0 or k < 0:
        raise InvalidInstance("sizes must be non-negative")
    if layout not in LAYOUTS:
        raise InvalidInstance(f"unknown layout {layout!r}")
    frame = frame or POINT_FRAME
    rng = np.random.default_rng(seed)
    red = _red(rng, n, frame, 0.2)
    if layout == "uniform":
        blue = _uniform(rng, m, frame)
    elif layout == "clustered":
        blue = _clustered(rng, m, frame)
    else:
        blue = _antichain(rng, m, frame, smallest_enclosing_rect(red))
    return InstanceFile(tuple(red), tuple(blue), None, k, frame)


def generate_circles(n: int, m: int, seed: int = 0, frame: Optional[Rect] = None,
                     layout: str = "uniform", max_tries: int = 1000) -> InstanceFile:
    """Circles are redrawn until none of them meets the red bounding box."""
    if n < 1:
        raise InvalidInstance("at least one red point is needed")
    if m < 0:
        raise InvalidInstance("sizes must be non-negative")
    if layout not in LAYOUTS:
        raise InvalidInstance(f"unknown layout {layout!r}")
    frame = frame or CIRCLE_FRAME
    rng = np.random.default_rng(seed)
    red = _red(rng, n, frame, 0.15)
    smin = smallest_enclosing_rect(red)
    hubs = _uniform(rng, max(1, m // 3), frame)
    sd = 0.08 * min(frame.width, frame.height)
    grown = Rect(smin.xmin - 1, smin.ymin - 1, smin.xmax + 1, smin.ymax + 1)
    circles: list[Point] = []
    tries = 0
    while len(circles) < m:
        tries += 1
        if tries > max_tries * max(m, 1):
            raise InvalidInstance(f"could not place {m} circles away from the red points")
        if layout == "clustered":
            h = hubs[int(rng.integers(len(hubs)))]
            c = Point(_round(rng.normal(h.x, sd)), _round(rng.normal(h.y, sd)))
        elif layout == "staircase-adversarial":
            c = _antichain(rng, 4, frame, grown)[int(rng.integers(4))]
        else:
            c = _uniform(rng, 1, frame)[0]
        if squared_distance_to_rect(smin, c) > 1.0:
            circles.append(c)
    return InstanceFile(tuple(red), None, tuple(circles), None, frame)
