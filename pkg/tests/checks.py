"""Property checks shared by the unit tests and the acceptance run."""
import math

from seprect.circles import layout, prepare_circles
from seprect.geometry import QUADRANTS, Point, Rect, squared_distance_to_rect


def corner_rect(smin, quadrant, p):
    """Rectangle spanned by ``p`` and the nearest ``smin`` corner."""
    cx = smin.xmax if "E" in quadrant.value else smin.xmin
    cy = smin.ymax if "N" in quadrant.value else smin.ymin
    return Rect(min(cx, p.x), min(cy, p.y), max(cx, p.x), max(cy, p.y))


def envelope_violations(red, circles, frame, samples=1000, eps=1e-6):
    """Count sampled envelope points breaking the two defining properties.

    Emptiness: the rectangle cornered at the point meets no circle.
    Maximality: pushing the point outward by ``eps`` makes that rectangle
    meet a circle or leave ``smax``.
    """
    inst = prepare_circles(red, circles, frame)
    lay = layout(inst)
    bad2 = bad3 = total = 0
    for q in QUADRANTS:
        env = lay.env[q]
        for p, (nx, ny), _ in env.sample(samples):
            total += 1
            r = corner_rect(inst.smin, q, p)
            if any(squared_distance_to_rect(r, c.center) < (1 - eps) ** 2 for c in inst.circles):
                bad2 += 1
            moved = Point(p.x + eps * nx, p.y + eps * ny)
            r2 = corner_rect(inst.smin, q, moved)
            leaves = not inst.smax.contains_rect(r2)
            hits = any(squared_distance_to_rect(r2, c.center) < 1.0 for c in inst.circles)
            if not (leaves or hits):
                bad3 += 1
    return bad2, bad3, total
