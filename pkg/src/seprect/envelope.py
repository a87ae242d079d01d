"""Dominating envelopes of the unit circles in one corner quadrant.

Work in the quadrant's NE orientation.  A rectangle containing ``smin``
avoids a NE circle ``c`` iff its NE corner ``(X, Y)`` stays out of the
circle's shadow, i.e. ``Y <= h_c(X)`` where

* ``h_c(X) = +inf``                         for ``X <= c.x - 1``,
* ``h_c(X) = c.y - sqrt(1 - (c.x - X)^2)``  for ``c.x - 1 < X < c.x``,
* ``h_c(X) = c.y - 1``                      for ``X >= c.x``.

The envelope is the graph of ``g = min(cap, min_c h_c)`` over the corner's
admissible abscissae ``[x0, xend]``, where ``cap`` and ``xend`` come from
``smax``.  All ``h_c`` are translates of one convex non-increasing profile,
so for two circles taken in order of ``c.x`` the later one, once lower,
stays lower.  That makes the lower envelope buildable with a single stack
pass, like the convex-hull trick for lines.

Each switch from one function to the next is tagged by where it happens:

* ``A``: both on their arcs (the lower intersection of the two circles),
* ``B``: the earlier one on its flat bottom, the later on its arc,
* ``C``: the later circle enters through its vertical left tangent while
  the earlier one is on its arc,
* ``D``: the same entry while the earlier one is flat.

Switch points are corner breakpoints (the corner is locked by two circles,
or a circle and ``smax``); the bottom and leftmost points of a circle are
plain breakpoints.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .geometry import EPS, INF, QUADRANT_SIGNS, Point, Rect, Region, UnitCircle


@dataclass(frozen=True)
class _Shadow:
    """``h_c`` in local coordinates; the cap is a circle at ``x = -inf``."""

    cx: float
    cy: float
    index: Optional[int]
    bottom: float  # height of the flat part, kept exact for the cap

    def value(self, X: float) -> float:
        if X >= self.cx:
            return self.bottom
        d = self.cx - X
        if d >= 1.0:
            return INF
        return self.cy - math.sqrt(1.0 - d * d)

    def value_right(self, X: float) -> float:
        """Limit of ``value`` from the right; finite from ``cx - 1`` on."""
        if X >= self.cx:
            return self.bottom
        d = self.cx - X
        if d > 1.0 + 1e-12:  # cx - (cx - 1) may round just above 1
            return INF
        return self.cy - math.sqrt(max(0.0, 1.0 - d * d))

    @property
    def is_cap(self) -> bool:
        return self.index is None


def _crossing(i: _Shadow, j: _Shadow) -> tuple[float, str]:
    """First abscissa after which ``j`` is strictly below ``i`` (``j`` not
    left of ``i``), with the transition letter; ``(inf, "")`` if never."""
    if j.bottom >= i.bottom:
        return INF, ""
    entry = j.cx - 1.0
    flat_i = i.is_cap or entry >= i.cx
    if j.cy < i.value_right(entry):
        return entry, ("D" if flat_i else "C")
    lo, hi = entry, j.cx
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if j.value_right(mid) < i.value_right(mid):
            hi = mid
        else:
            lo = mid
    x = hi
    flat_i = i.is_cap or x >= i.cx
    return x, ("B" if flat_i else "A")


@dataclass(frozen=True)
class EnvelopeElement:
    kind: str                      # "arc", "hseg" or "vseg"
    start: Point                   # global coordinates, walking away from smin's x0
    end: Point
    circle: Optional[int] = None   # index into the circle list, for arcs and flats
    interval: Optional[tuple[float, float]] = None  # arc angles, lo <= hi


@dataclass(frozen=True)
class Breakpoint:
    point: Point
    kind: str                 # "plain" or "corner"
    case: Optional[str] = None


@dataclass(frozen=True)
class _Piece:
    shadow: _Shadow
    lo: float
    hi: float
    case: str


class Envelope:
    """Envelope of one quadrant.  ``value`` and ``inverse`` take and return
    local coordinates; ``elements`` and ``breakpoints`` are global."""

    def __init__(self, quadrant: Region, x0: float, y0: float, xend: float, pieces: list[_Piece],
                 circles: dict):
        self.quadrant = quadrant
        self.signs = QUADRANT_SIGNS[quadrant]
        self.x0, self.y0, self.xend = x0, y0, xend
        self.pieces = pieces
        self._his = [p.hi for p in pieces]
        self.circles = circles
        self.elements, self.breakpoints = self._trace()

    # -- local queries -------------------------------------------------
    def piece_at(self, X: float) -> _Piece:
        i = bisect.bisect_left(self._his, X)
        return self.pieces[min(i, len(self.pieces) - 1)]

    def value(self, X: float) -> float:
        # never below y0 on the domain; rounding at xend could say otherwise
        return max(self.y0, self.piece_at(X).shadow.value(X))

    def inverse(self, T: float) -> Optional[float]:
        """Largest ``X`` in the domain with ``value(X) >= T``; None if none."""
        if self.value(self.x0) < T:
            return None
        for p in self.pieces:
            if p.shadow.value(p.hi) >= T:
                continue
            s = p.shadow
            if s.value_right(p.lo) < T:
                return p.lo
            x = s.cx - math.sqrt(max(0.0, 1.0 - (s.cy - T) ** 2))
            return min(max(x, p.lo), p.hi)
        return self.xend

    def local(self, x: float, y: float) -> tuple[float, float]:
        sx, sy = self.signs
        return sx * x, sy * y

    def to_global(self, X: float, Y: float) -> Point:
        sx, sy = self.signs
        return Point(sx * X, sy * Y)

    # -- geometry ------------------------------------------------------
    def _trace(self):
        els: list[EnvelopeElement] = []
        bps: list[Breakpoint] = []
        g = self.to_global
        prev: Optional[_Piece] = None
        for p in self.pieces:
            s = p.shadow
            top = prev.shadow.value(p.lo) if prev else s.value(p.lo)
            if prev is not None:
                entry = s.value_right(p.lo)
                bps.append(Breakpoint(g(p.lo, top), "corner", p.case))
                if top - entry > EPS:
                    els.append(EnvelopeElement("vseg", g(p.lo, top), g(p.lo, entry), s.index))
                    bps.append(Breakpoint(g(p.lo, entry), "plain"))
                top = entry
            if not s.is_cap and p.lo < min(p.hi, s.cx):
                xa = min(p.hi, s.cx)
                t0 = math.asin(min(1.0, s.cx - p.lo))
                t1 = math.asin(min(1.0, s.cx - xa))
                els.append(EnvelopeElement("arc", g(p.lo, top), g(xa, s.value(xa)), s.index, (t1, t0)))
                if p.hi > s.cx:
                    bps.append(Breakpoint(g(s.cx, s.bottom), "plain"))
            xa = p.lo if s.is_cap else max(p.lo, s.cx)
            if p.hi > xa:
                els.append(EnvelopeElement("hseg", g(xa, s.bottom), g(p.hi, s.bottom), s.index))
            prev = p
        last = self.value(self.xend)
        if last > self.y0:
            bps.append(Breakpoint(g(self.xend, last), "corner", "clip"))
            els.append(EnvelopeElement("vseg", g(self.xend, last), g(self.xend, self.y0)))
        return els, bps

    def corner_breakpoints(self) -> list[Point]:
        return [b.point for b in self.breakpoints if b.kind == "corner"]

    def breakpoint_xs(self) -> list[float]:
        """Local abscissae where the envelope changes element."""
        xs = {self.x0, self.xend}
        for p in self.pieces:
            xs.add(p.lo)
            xs.add(p.hi)
            s = p.shadow
            if not s.is_cap and p.lo < s.cx < p.hi:
                xs.add(s.cx)
        return sorted(x for x in xs if self.x0 <= x <= self.xend)

    def flat_levels(self) -> list[float]:
        """Local heights of the horizontal pieces."""
        out = set()
        for p in self.pieces:
            s = p.shadow
            if s.is_cap or p.hi > s.cx:
                out.add(s.bottom)
        return sorted(out)

    def sample(self, n: int) -> list[tuple[Point, tuple[float, float], int]]:
        """``n`` points spread over the elements, with the outward normal and
        the element index.  Normals point into the obstacle: towards the
        centre on arcs, up on horizontal pieces, right on vertical ones."""
        if not self.elements:
            return []
        sx, sy = self.signs
        lengths = []
        for e in self.elements:
            if e.kind == "arc":
                lengths.append(e.interval[1] - e.interval[0])
            else:
                lengths.append(math.dist(e.start, e.end))
        total = sum(lengths) or 1.0
        counts = [max(1, int(round(n * L / total))) for L in lengths]
        while sum(counts) > n and max(counts) > 1:
            counts[counts.index(max(counts))] -= 1
        while sum(counts) < n:
            counts[lengths.index(max(lengths))] += 1
        out = []
        for idx, (e, c) in enumerate(zip(self.elements, counts)):
            ts = np.linspace(0.0, 1.0, c) if c > 1 else np.array([0.5])
            if e.kind == "arc":
                circ = self.circles[e.circle]
                cx, cy = self.local(circ.x, circ.y)
                for u in ts:
                    t = e.interval[1] + u * (e.interval[0] - e.interval[1])
                    p = self.to_global(cx - math.sin(t), cy - math.cos(t))
                    out.append((p, (sx * math.sin(t), sy * math.cos(t)), idx))
            else:
                normal = (0.0, float(sy)) if e.kind == "hseg" else (float(sx), 0.0)
                for u in ts:
                    p = Point(e.start.x + u * (e.end.x - e.start.x), e.start.y + u * (e.end.y - e.start.y))
                    out.append((p, normal, idx))
        return out[:n]


def quadrant_domain(quadrant: Region, smin: Rect, smax: Rect) -> tuple[float, float, float, float]:
    """``(x0, y0, xend, cap)`` of a quadrant in its local orientation."""
    sx, sy = QUADRANT_SIGNS[quadrant]
    x0 = smin.xmax if sx > 0 else -smin.xmin
    y0 = smin.ymax if sy > 0 else -smin.ymin
    xend = smax.xmax if sx > 0 else -smax.xmin
    cap = smax.ymax if sy > 0 else -smax.ymin
    return x0, y0, xend, cap


def build_envelope(circles: Sequence[UnitCircle], quadrant: Region, smin: Rect, smax: Rect,
                   indices: Optional[Sequence[int]] = None) -> Envelope:
    """Envelope of the given quadrant circles, clipped to ``smax``.

    ``indices`` labels the circles in the output (defaults to positions in
    ``circles``).  With no circles the envelope is the ``smax`` corner path.
    """
    circles = list(circles)
    if indices is None:
        indices = range(len(circles))
    sx, sy = QUADRANT_SIGNS[quadrant]
    x0, y0, xend, cap = quadrant_domain(quadrant, smin, smax)
    shadows = sorted((_Shadow(sx * c.x, sy * c.y, i, sy * c.y - 1.0) for c, i in zip(circles, indices)),
                     key=lambda s: (s.cx, s.cy, s.index))

    stack: list[tuple[_Shadow, float, str]] = [(_Shadow(-INF, cap + 1.0, None, cap), -INF, "")]
    for s in shadows:
        while True:
            x, case = _crossing(stack[-1][0], s)
            if x <= stack[-1][1] and len(stack) > 1:
                stack.pop()
                continue
            break
        if x < INF and x < xend:
            stack.append((s, x, case))

    pieces: list[_Piece] = []
    for n, (s, start, case) in enumerate(stack):
        stop = stack[n + 1][1] if n + 1 < len(stack) else INF
        lo, hi = max(start, x0), min(stop, xend)
        # a zero-width piece at x0 keeps the left limit there
        if lo < hi or lo == hi == x0:
            pieces.append(_Piece(s, lo, hi, case if start >= x0 else ""))
    by_index = {i: c for c, i in zip(circles, indices)}
    return Envelope(quadrant, x0, y0, xend, pieces, by_index)
