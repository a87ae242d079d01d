"""SVG figures of instances and answers.

The drawing is emitted in world coordinates inside a group whose transform
flips the y axis, so the picture reads with y pointing up.  Element order
and number formatting are fixed, which makes the output byte-stable.
"""
from __future__ import annotations

import math
from typing import Iterable, Optional, Sequence

from .geometry import QUADRANTS, Point, Rect, split_by_region, smallest_enclosing_rect
from .io import InstanceFile
from .staircase import build_staircases

SIZE = 600.0
MARGIN = 20.0


def _f(v: float) -> str:
    s = f"{v:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _rect(r: Rect, style: str) -> str:
    return (f'<rect x="{_f(r.xmin)}" y="{_f(r.ymin)}" width="{_f(r.width)}" '
            f'height="{_f(r.height)}" {style}/>')


def _polyline(pts: Iterable[Sequence[float]], style: str) -> str:
    coords = " ".join(f"{_f(x)},{_f(y)}" for x, y in pts)
    return f'<polyline points="{coords}" {style}/>'


def _view(inst: InstanceFile, extra: Sequence[Rect]) -> Rect:
    xs = [p.x for p in inst.red] + [p.x for p in inst.blue]
    ys = [p.y for p in inst.red] + [p.y for p in inst.blue]
    for r in ([inst.frame] if inst.frame else []) + list(extra):
        xs += [r.xmin, r.xmax]
        ys += [r.ymin, r.ymax]
    pad = 1.0 if inst.blue_circles is not None else 0.0
    box = Rect(min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)
    if box.width == 0 or box.height == 0:
        box = Rect(box.xmin - 1, box.ymin - 1, box.xmax + 1, box.ymax + 1)
    return box


def staircase_paths(inst: InstanceFile, k: int) -> list[tuple[int, list[Point]]]:
    """Level ``t`` staircases of every quadrant as step polylines."""
    smin = smallest_enclosing_rect(inst.red)
    groups = split_by_region(inst.blue_points or (), smin)
    out = []
    for q in QUADRANTS:
        stairs = build_staircases(groups[q], q, k)
        for t, level in enumerate(stairs.levels):
            pts: list[Point] = []
            for v in level:
                if pts:
                    pts.append(Point(v.x, pts[-1].y))
                pts.append(v.point)
            if pts:
                out.append((t, pts))
    return out


def envelope_paths(envelopes) -> list[list[Point]]:
    out = []
    for env in envelopes:
        pts: list[Point] = []
        for e in env.elements:
            if e.kind == "arc":
                c = env.circles[e.circle]
                sx, sy = env.signs
                lo, hi = e.interval
                steps = max(2, int(math.ceil((hi - lo) / 0.05)))
                for i in range(steps + 1):
                    t = hi + (lo - hi) * i / steps
                    pts.append(Point(c.x - sx * math.sin(t), c.y - sy * math.cos(t)))
            else:
                pts += [e.start, e.end]
        if pts:
            out.append(pts)
    return out


def render_svg(inst: InstanceFile, answer: Optional[Rect] = None, smax: Optional[Rect] = None,
               staircases: Sequence[tuple[int, Sequence[Point]]] = (),
               envelopes: Sequence[Sequence[Point]] = ()) -> str:
    smin = smallest_enclosing_rect(inst.red)
    view = _view(inst, [r for r in (answer, smax) if r is not None])
    scale = (SIZE - 2 * MARGIN) / max(view.width, view.height)
    w = view.width * scale + 2 * MARGIN
    h = view.height * scale + 2 * MARGIN
    pr = 3.0 / scale
    lw = 1.0 / scale
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(w)}" height="{_f(h)}" '
        f'viewBox="0 0 {_f(w)} {_f(h)}">',
        f"<!-- world to screen: x' = {_f(scale)}*(x - {_f(view.xmin)}) + {_f(MARGIN)}, "
        f"y' = -{_f(scale)}*(y - {_f(view.ymax)}) + {_f(MARGIN)} (y axis points up) -->",
        f'<g transform="translate({_f(MARGIN - scale * view.xmin)},{_f(MARGIN + scale * view.ymax)}) '
        f'scale({_f(scale)},{_f(-scale)})">',
    ]
    if inst.frame is not None:
        lines.append(_rect(inst.frame, f'fill="none" stroke="#999" stroke-width="{_f(lw)}"'))
    if smax is not None:
        lines.append(_rect(smax, f'fill="none" stroke="#777" stroke-dasharray="{_f(4 * lw)}" '
                                 f'stroke-width="{_f(lw)}"'))
    if answer is not None:
        lines.append(_rect(answer, f'fill="#2a9d8f" fill-opacity="0.2" stroke="#2a9d8f" '
                                   f'stroke-width="{_f(2 * lw)}"'))
    lines.append(_rect(smin, f'fill="none" stroke="#c1121f" stroke-width="{_f(lw)}"'))
    for t, pts in staircases:
        shade = max(40, 200 - 40 * t)
        lines.append(_polyline(pts, f'fill="none" stroke="rgb(0,0,{shade})" stroke-width="{_f(lw)}"'))
    for pts in envelopes:
        lines.append(_polyline(pts, f'fill="none" stroke="#f4a261" stroke-width="{_f(2 * lw)}"'))
    if inst.blue_circles is not None:
        for c in inst.blue_circles:
            lines.append(f'<circle cx="{_f(c.x)}" cy="{_f(c.y)}" r="1" fill="#1d3557" fill-opacity="0.15" '
                         f'stroke="#1d3557" stroke-width="{_f(lw)}"/>')
    else:
        for p in inst.blue_points or ():
            lines.append(f'<circle cx="{_f(p.x)}" cy="{_f(p.y)}" r="{_f(pr)}" fill="#1d3557"/>')
    for p in inst.red:
        lines.append(f'<circle cx="{_f(p.x)}" cy="{_f(p.y)}" r="{_f(pr)}" fill="#c1121f"/>')
    lines += ["</g>", "</svg>", ""]
    return "\n".join(lines)
