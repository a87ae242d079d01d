"""Brute-force reference implementations.

Nothing here imports solver code: these functions only share the value
types from ``geometry``.  They are slow on purpose and guarded against large
inputs.
"""
from __future__ import annotations

import math
from typing import Optional, Sequence

import numpy as np
from scipy import optimize

from .geometry import GuardExceeded, Point, Rect, UnitCircle

MAX_ORACLE_BLUE = 40
MAX_ORACLE_CIRCLES = 10


def _bbox(points) -> Rect:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return Rect(min(xs), min(ys), max(xs), max(ys))


def oracle_mbsr_o(red, blue, k: int, frame: Rect) -> Rect:
    """Try every rectangle whose sides lie on blue coordinates or frame edges.

    Blue points inside the closed red bounding box are ignored; the rest are
    counted when strictly inside.  Returns the largest admissible rectangle,
    ties broken by the smallest (xmin, ymin, xmax, ymax).
    """
    if len(blue) > MAX_ORACLE_BLUE:
        raise GuardExceeded(f"{len(blue)} blue points exceed the oracle guard {MAX_ORACLE_BLUE}")
    box = _bbox(red)
    outside = [p for p in blue
               if not (box.xmin <= p[0] <= box.xmax and box.ymin <= p[1] <= box.ymax)]
    bx = np.array([p[0] for p in outside], dtype=float)
    by = np.array([p[1] for p in outside], dtype=float)

    def cands(vals, lo, hi, extra):
        return sorted({v for v in vals if lo <= v <= hi} | {extra})

    xls = cands(bx.tolist(), frame.xmin, box.xmin, frame.xmin)
    xhs = cands(bx.tolist(), box.xmax, frame.xmax, frame.xmax)
    yls = np.array(cands(by.tolist(), frame.ymin, box.ymin, frame.ymin))
    yhs = np.array(cands(by.tolist(), box.ymax, frame.ymax, frame.ymax))

    below_top = (by[:, None] < yhs[None, :]).astype(np.int64)
    above_bot = by[:, None] > yls[None, :]
    best_key = None
    best = None
    for xl in xls:
        for xh in xhs:
            in_x = (bx > xl) & (bx < xh)
            counts = (above_bot & in_x[:, None]).astype(np.int64).T @ below_top
            ok = counts <= k
            if not ok.any():
                continue
            area = (xh - xl) * (yhs[None, :] - yls[:, None])
            area = np.where(ok, area, -np.inf)
            top = area.max()
            ii, jj = np.nonzero(area == top)
            for i, j in zip(ii, jj):
                key = (-float(top), xl, float(yls[i]), xh, float(yhs[j]))
                if best_key is None or key < best_key:
                    best_key = key
                    best = Rect(xl, float(yls[i]), xh, float(yhs[j]))
    return best


def oracle_staircase_levels(points: Sequence[tuple[float, float]], k: int) -> list[list[tuple[float, float]]]:
    """Inner corners of every level by counting on the full coordinate grid.

    ``points`` are NE-oriented.  ``count[i, j]`` is the number of points at or
    below ``(xs[i], ys[j])``; a grid node with ``count >= t + 1`` is a corner
    when neither its left nor its lower neighbour qualifies.
    """
    if not points:
        return [[] for _ in range(k + 1)]
    xs = np.array(sorted({p[0] for p in points}))
    ys = np.array(sorted({p[1] for p in points}))
    grid = np.zeros((len(xs), len(ys)), dtype=np.int64)
    for x, y in points:
        grid[np.searchsorted(xs, x), np.searchsorted(ys, y)] += 1
    count = grid.cumsum(axis=0).cumsum(axis=1)
    levels = []
    for t in range(k + 1):
        s = count >= t + 1
        left = np.zeros_like(s)
        left[1:, :] = s[:-1, :]
        down = np.zeros_like(s)
        down[:, 1:] = s[:, :-1]
        ii, jj = np.nonzero(s & ~left & ~down)
        levels.append(sorted((float(xs[i]), float(ys[j])) for i, j in zip(ii, jj)))
    return levels


def oracle_pair_corners(local: Sequence[tuple[float, float]], t: int) -> list[tuple[float, float]]:
    """Minimal corners holding at least ``t + 1`` points, by trying every
    (x, y) combination of point coordinates.  Coordinates may be ``-inf``."""
    xs = sorted({p[0] for p in local})
    ys = sorted({p[1] for p in local})
    heavy = []
    for cx in xs:
        for cy in ys:
            n = sum(1 for px, py in local if px <= cx and py <= cy)
            if n >= t + 1:
                heavy.append((cx, cy))
    minimal = [c for c in heavy
               if not any(d != c and d[0] <= c[0] and d[1] <= c[1] for d in heavy)]
    return sorted(minimal)


def arc_area(w: float, h: float, theta):
    return (w - np.sin(theta)) * (h - np.cos(theta))


def _golden_max(f, a: float, b: float, tol: float = 1e-13) -> tuple[float, float]:
    g = (math.sqrt(5) - 1) / 2
    c, d = b - g * (b - a), a + g * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - g * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + g * (b - a)
            fd = f(d)
    x = (a + b) / 2
    return x, f(x)


def oracle_arc_max_1d(w: float, h: float, interval: tuple[float, float], samples: int = 257) -> tuple[float, float]:
    """Maximize ``(w - sin t)(h - cos t)`` on ``interval`` by dense sampling
    followed by golden-section search around every sampled local maximum."""
    lo, hi = interval
    if hi - lo <= 0:
        return lo, float(arc_area(w, h, lo))
    ts = np.linspace(lo, hi, samples)
    vals = arc_area(w, h, ts)
    best_t, best_v = lo, float(vals[0])
    if vals[-1] > best_v:
        best_t, best_v = hi, float(vals[-1])
    f = lambda t: float(arc_area(w, h, t))
    for i in range(samples):
        left = vals[i - 1] if i > 0 else -np.inf
        right = vals[i + 1] if i < samples - 1 else -np.inf
        if vals[i] >= left and vals[i] >= right:
            a = ts[max(i - 1, 0)]
            b = ts[min(i + 1, samples - 1)]
            t, v = _golden_max(f, a, b)
            if v > best_v:
                best_t, best_v = t, v
    return best_t, best_v


def pair_area(W: float, H: float, t1, t2):
    return (W - np.sin(t1) - np.sin(t2)) * (H - np.cos(t1) - np.cos(t2))


def oracle_arc_max_2d(W: float, H: float, iv1: tuple[float, float], iv2: tuple[float, float],
                      samples: int = 81) -> tuple[float, float, float]:
    """Maximize ``(W - sin a - sin b)(H - cos a - cos b)`` over a box of angles
    with a dense grid followed by bounded Nelder-Mead from the best nodes."""
    a = np.linspace(iv1[0], iv1[1], samples)
    b = np.linspace(iv2[0], iv2[1], samples)
    vals = pair_area(W, H, a[:, None], b[None, :])
    flat = np.argsort(vals, axis=None)[::-1][:8]
    best = (float(a[0]), float(b[0]), float(vals[0, 0]))
    bounds = [iv1, iv2]
    for idx in flat:
        i, j = np.unravel_index(idx, vals.shape)
        if vals[i, j] > best[2]:
            best = (float(a[i]), float(b[j]), float(vals[i, j]))
        if iv1[1] - iv1[0] <= 0 and iv2[1] - iv2[0] <= 0:
            continue
        res = optimize.minimize(lambda v: -pair_area(W, H, v[0], v[1]), x0=[a[i], b[j]],
                                method="Nelder-Mead", bounds=bounds,
                                options={"xatol": 1e-13, "fatol": 1e-15, "maxiter": 4000})
        val = -float(res.fun)
        if val > best[2]:
            best = (float(res.x[0]), float(res.x[1]), val)
    return best


def _edge_profile(xs: np.ndarray, circles, smin: Rect, frame: Rect, side: int):
    """For candidate positions of one vertical edge, the highest admissible
    top, lowest admissible bottom, and whether some circle blocks the band.

    ``side`` is +1 for the east edge (circles right of ``smin``) and -1 for
    the west edge.
    """
    top = np.full(xs.shape, frame.ymax)
    bot = np.full(xs.shape, frame.ymin)
    ok = np.ones(xs.shape, dtype=bool)
    for cx, cy in circles:
        dx = np.maximum(side * (cx - xs), 0.0)
        r2 = 1.0 - dx * dx
        hit = r2 > 0
        r = np.sqrt(np.where(hit, r2, 0.0))
        above = hit & (cy - r >= smin.ymax)
        below = hit & (cy + r <= smin.ymin)
        top = np.where(above, np.minimum(top, cy - r), top)
        bot = np.where(below, np.maximum(bot, cy + r), bot)
        ok &= ~(hit & ~above & ~below)
    return top, bot, ok


def oracle_mbsr_c(red, circles, frame: Optional[Rect], grid_step: float,
                  refine: bool = True) -> tuple[Optional[Rect], tuple[float, float]]:
    """Grid search over the east and west edge positions.

    For fixed east/west edges the best top and bottom follow directly from the
    circles, so only a 2-D grid is needed.  Rounding an optimal rectangle's
    vertical edges inward to the grid loses at most ``2 * grid_step`` of width,
    which gives the certified bracket ``[best, best + slack]`` with
    ``slack = 2 * grid_step * (frame width + frame height)``.
    """
    centers = [c.center if isinstance(c, UnitCircle) else Point(*c) for c in circles]
    if len(centers) > MAX_ORACLE_CIRCLES:
        raise GuardExceeded(f"{len(centers)} circles exceed the oracle guard {MAX_ORACLE_CIRCLES}")
    if grid_step <= 0:
        raise ValueError("grid_step must be positive")
    smin = _bbox(red)

    def dist2(c):
        dx = max(smin.xmin - c[0], 0.0, c[0] - smin.xmax)
        dy = max(smin.ymin - c[1], 0.0, c[1] - smin.ymax)
        return dx * dx + dy * dy

    kept = [c for c in centers if dist2(c) >= 1.0]
    if frame is None:
        frame = Rect(min([smin.xmin] + [c[0] - 1 for c in kept]),
                     min([smin.ymin] + [c[1] - 1 for c in kept]),
                     max([smin.xmax] + [c[0] + 1 for c in kept]),
                     max([smin.ymax] + [c[1] + 1 for c in kept]))
    slack = 2.0 * grid_step * (frame.width + frame.height)
    east = [c for c in kept if c[0] >= smin.xmax]
    west = [c for c in kept if c[0] <= smin.xmin and c[0] < smin.xmax]
    mid = [c for c in kept if smin.xmin < c[0] < smin.xmax]
    top0, bot0 = frame.ymax, frame.ymin
    for cx, cy in mid:
        if cy > smin.ymax:
            top0 = min(top0, cy - 1.0)
        else:
            bot0 = max(bot0, cy + 1.0)

    n_e = int(math.floor((frame.xmax - smin.xmax) / grid_step))
    n_w = int(math.floor((smin.xmin - frame.xmin) / grid_step))
    xe = smin.xmax + grid_step * np.arange(n_e + 1)
    xe = np.unique(np.append(xe[xe <= frame.xmax], frame.xmax))
    xw = smin.xmin - grid_step * np.arange(n_w + 1)
    xw = np.unique(np.append(xw[xw >= frame.xmin], frame.xmin))
    te, be, oe = _edge_profile(xe, east, smin, frame, +1)
    tw, bw, ow = _edge_profile(xw, west, smin, frame, -1)
    te, be = np.minimum(te, top0), np.maximum(be, bot0)

    best = (-np.inf, None)
    chunk = max(1, 4_000_000 // max(len(xw), 1))
    for s in range(0, len(xe), chunk):
        sl = slice(s, s + chunk)
        T = np.minimum(te[sl, None], tw[None, :])
        B = np.maximum(be[sl, None], bw[None, :])
        area = (xe[sl, None] - xw[None, :]) * (T - B)
        area = np.where(oe[sl, None] & ow[None, :] & (T >= B), area, -np.inf)
        idx = np.argmax(area)
        i, j = np.unravel_index(idx, area.shape)
        if area[i, j] > best[0]:
            best = (float(area[i, j]), (float(xe[s + i]), float(xw[j])))
    if best[1] is None:
        return None, (0.0, slack)

    def evaluate(X: float, Xw: float):
        if not (smin.xmax <= X <= frame.xmax and frame.xmin <= Xw <= smin.xmin):
            return -np.inf, None
        t1, b1, o1 = _edge_profile(np.array([X]), east, smin, frame, +1)
        t2, b2, o2 = _edge_profile(np.array([Xw]), west, smin, frame, -1)
        T = min(float(t1[0]), float(t2[0]), top0)
        B = max(float(b1[0]), float(b2[0]), bot0)
        if not (o1[0] and o2[0]) or T < B:
            return -np.inf, None
        return (X - Xw) * (T - B), Rect(Xw, B, X, T)

    X, Xw = best[1]
    value, rect = evaluate(X, Xw)
    if refine:
        for _ in range(6):
            improved = False
            for axis in (0, 1):
                lo = (X if axis == 0 else Xw) - grid_step
                hi = (X if axis == 0 else Xw) + grid_step

                def neg(v, axis=axis):
                    val, _ = evaluate(v, Xw) if axis == 0 else evaluate(X, v)
                    return -val if np.isfinite(val) else 1e300

                res = optimize.minimize_scalar(neg, bounds=(lo, hi), method="bounded",
                                               options={"xatol": 1e-12})
                cand = (res.x, Xw) if axis == 0 else (X, res.x)
                val, r = evaluate(*cand)
                if val > value + 1e-15:
                    X, Xw = cand
                    value, rect = val, r
                    improved = True
            if not improved:
                break
    return rect, (value, value + slack)
