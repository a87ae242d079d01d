"""Area maximization for rectangle corners sliding on unit-circle arcs.

Everything is expressed in the NE orientation.  A corner on the lower-left
quarter of a circle centred at ``c`` sits at ``c - (sin t, cos t)`` for
``t`` in ``[0, pi/2]`` (``t = 0`` is the bottom of the circle, ``t = pi/2``
its leftmost point).  With the opposite edges fixed at ``x = l`` and
``y = b`` the area is ``(w - sin t)(h - cos t)`` where ``w = c.x - l`` and
``h = c.y - b``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

HALF_PI = math.pi / 2


def corner_area(w: float, h: float, t: float) -> float:
    return (w - math.sin(t)) * (h - math.cos(t))


def corner_slope(w: float, h: float, t: float) -> float:
    """d/dt of ``corner_area``."""
    s, c = math.sin(t), math.cos(t)
    return w * s - h * c + c * c - s * s


def critical_quartic(w: float, h: float) -> np.ndarray:
    """Coefficients, highest degree first, of the quartic in ``x = tan t``
    whose non-negative roots include every critical angle of the area.

    Obtained by squaring ``(w x - h) sqrt(1 + x^2) = x^2 - 1``; squaring may
    add spurious roots, so callers check the derivative afterwards.
    """
    return np.array([w * w - 1.0, -2.0 * w * h, w * w + h * h + 2.0, -2.0 * w * h, h * h - 1.0])


def _real_nonneg_roots(coeffs: np.ndarray) -> list[float]:
    nz = np.flatnonzero(np.abs(coeffs) > 0)
    if nz.size == 0:
        return []
    roots = np.roots(coeffs[nz[0]:])
    poly = np.poly1d(coeffs[nz[0]:])
    dpoly = poly.deriv()
    out = []
    for r in roots:
        if abs(r.imag) > 1e-6 * (1.0 + abs(r.real)):
            continue
        x = float(r.real)
        for _ in range(3):  # Newton polish, kept only while it helps
            d = dpoly(x)
            if d == 0:
                break
            nx = x - poly(x) / d
            if abs(poly(nx)) >= abs(poly(x)):
                break  # near a double root the step can overshoot
            x = nx
        if x >= 0.0:
            out.append(x)
    return out


def _scan_max(w: float, h: float, lo: float, hi: float, samples: int = 65) -> tuple[float, float]:
    ts = np.linspace(lo, hi, samples)
    vals = (w - np.sin(ts)) * (h - np.cos(ts))
    i = int(np.argmax(vals))
    a, b = ts[max(i - 1, 0)], ts[min(i + 1, samples - 1)]
    phi = (math.sqrt(5) - 1) / 2
    while b - a > 1e-13:
        c, d = b - phi * (b - a), a + phi * (b - a)
        if corner_area(w, h, c) >= corner_area(w, h, d):
            b = d
        else:
            a = c
    t = (a + b) / 2
    best = max((corner_area(w, h, t), t), (float(vals[i]), float(ts[i])),
               (corner_area(w, h, lo), lo), (corner_area(w, h, hi), hi))
    return best[1], best[0]


def maximize_corner_area(w: float, h: float, lo: float, hi: float) -> tuple[float, float]:
    """Best angle in ``[lo, hi]`` and its area.

    Interior maxima are roots of ``critical_quartic``; both endpoints are
    always candidates.  When ``w <= 1`` or ``h <= 1`` the corner may cross
    the fixed edges, and a sampled golden-section search is used instead.
    """
    lo, hi = max(lo, 0.0), min(hi, HALF_PI)
    if hi < lo:
        raise ValueError(f"empty angular interval [{lo}, {hi}]")
    if hi == lo:
        return lo, corner_area(w, h, lo)
    if w <= 1.0 or h <= 1.0:
        return _scan_max(w, h, lo, hi)
    cands = [lo, hi]
    tol = 1e-7 * (1.0 + abs(w) + abs(h))
    for x in _real_nonneg_roots(critical_quartic(w, h)):
        t = math.atan(x)
        if lo <= t <= hi and abs(corner_slope(w, h, t)) <= tol:
            cands.append(t)
    best = max(cands, key=lambda t: corner_area(w, h, t))
    return best, corner_area(w, h, best)


@dataclass(frozen=True)
class ArcProblem:
    """One sliding corner in NE orientation: circle centre, allowed angles,
    and the fixed left and bottom edges of the rectangle."""

    cx: float
    cy: float
    alpha: float
    beta: float
    left: float
    bottom: float

    @property
    def w(self) -> float:
        return self.cx - self.left

    @property
    def h(self) -> float:
        return self.cy - self.bottom

    def corner(self, t: float) -> tuple[float, float]:
        return (self.cx - math.sin(t), self.cy - math.cos(t))


def optimize_arc(problem: ArcProblem) -> tuple[float, float]:
    return maximize_corner_area(problem.w, problem.h, problem.alpha, problem.beta)


def pair_area(W: float, H: float, t1: float, t2: float) -> float:
    return (W - math.sin(t1) - math.sin(t2)) * (H - math.cos(t1) - math.cos(t2))


def optimize_arc_pair(W: float, H: float, iv1: tuple[float, float], iv2: tuple[float, float]) -> tuple[float, float, float]:
    """Two opposite corners on two arcs.

    With the NE corner at ``c1 - (sin a, cos a)`` and the SW corner at
    ``c2 + (sin b, cos b)`` the area is ``(W - sin a - sin b)(H - cos a - cos b)``
    where ``(W, H) = c1 - c2``.  Setting both partial derivatives to zero
    forces ``tan a = tan b``, so interior critical points have ``a = b`` and
    reduce to the single-arc problem with half the offsets.  The rest of the
    candidates come from fixing one angle at an end of its interval.
    """
    (a0, a1), (b0, b1) = iv1, iv2
    cands = []
    lo, hi = max(a0, b0), min(a1, b1)
    if lo <= hi:
        t, _ = maximize_corner_area(W / 2.0, H / 2.0, lo, hi)
        cands.append((t, t))
    for a in {a0, a1}:
        b, _ = maximize_corner_area(W - math.sin(a), H - math.cos(a), b0, b1)
        cands.append((a, b))
    for b in {b0, b1}:
        a, _ = maximize_corner_area(W - math.sin(b), H - math.cos(b), a0, a1)
        cands.append((a, b))
    a, b = max(cands, key=lambda ab: pair_area(W, H, *ab))
    return a, b, pair_area(W, H, a, b)
