"""Instance files.

An instance is a JSON object::

    {"red": [[x, y], ...],
     "blue_points": [[x, y], ...],      # or "blue_circles": [[cx, cy], ...]
     "k": 2,
     "frame": [xmin, ymin, xmax, ymax]}

Only ``red`` is required.  Floats are written with ``repr``, which is the
shortest text that reads back to the same double, so a render/parse round
trip is exact.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Any, Optional

from .geometry import InvalidInstance, Point, Rect

KEYS = ("red", "blue_points", "blue_circles", "k", "frame")


class InstanceFormatError(InvalidInstance):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)
        self.line, self.column = line, column


@dataclass(frozen=True)
class InstanceFile:
    red: tuple[Point, ...]
    blue_points: Optional[tuple[Point, ...]] = None
    blue_circles: Optional[tuple[Point, ...]] = None
    k: Optional[int] = None
    frame: Optional[Rect] = None

    @property
    def kind(self) -> str:
        return "circles" if self.blue_circles is not None else "points"

    @property
    def blue(self) -> tuple[Point, ...]:
        if self.blue_circles is not None:
            return self.blue_circles
        return self.blue_points or ()


def _reject_constant(name: str):
    raise ValueError(f"non-finite number {name} is not allowed")


def _number(v: Any, what: str) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise InstanceFormatError(f"{what} must be a number, got {json.dumps(v)}")
    f = float(v)
    if not math.isfinite(f):
        raise InstanceFormatError(f"{what} is not finite")
    return f


def _points(v: Any, key: str) -> tuple[Point, ...]:
    if not isinstance(v, list):
        raise InstanceFormatError(f"'{key}' must be a list of [x, y] pairs")
    out = []
    for i, p in enumerate(v):
        if not isinstance(p, list) or len(p) != 2:
            raise InstanceFormatError(f"'{key}'[{i}] must be a pair [x, y]")
        out.append(Point(_number(p[0], f"'{key}'[{i}][0]"), _number(p[1], f"'{key}'[{i}][1]")))
    return tuple(out)


def parse_instance(text: str) -> InstanceFile:
    """Parse and validate; errors carry line and column when the JSON
    itself is malformed."""
    try:
        data = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise InstanceFormatError(e.msg, e.lineno, e.colno) from None
    except ValueError as e:
        raise InstanceFormatError(str(e)) from None
    if not isinstance(data, dict):
        raise InstanceFormatError("top level must be a JSON object")
    unknown = sorted(set(data) - set(KEYS))
    if unknown:
        raise InstanceFormatError(f"unknown keys: {', '.join(unknown)}")
    if "red" not in data:
        raise InstanceFormatError("missing 'red'")
    red = _points(data["red"], "red")
    if not red:
        raise InstanceFormatError("'red' must hold at least one point")
    if "blue_points" in data and "blue_circles" in data:
        raise InstanceFormatError("give either 'blue_points' or 'blue_circles', not both")
    blue_points = _points(data["blue_points"], "blue_points") if "blue_points" in data else None
    blue_circles = _points(data["blue_circles"], "blue_circles") if "blue_circles" in data else None
    k = data.get("k")
    if k is not None and (isinstance(k, bool) or not isinstance(k, int) or k < 0):
        raise InstanceFormatError("'k' must be a non-negative integer")
    frame = None
    if "frame" in data:
        f = data["frame"]
        if not isinstance(f, list) or len(f) != 4:
            raise InstanceFormatError("'frame' must be [xmin, ymin, xmax, ymax]")
        vals = [_number(v, f"'frame'[{i}]") for i, v in enumerate(f)]
        try:
            frame = Rect(*vals)
        except ValueError as e:
            raise InstanceFormatError(str(e)) from None
    return InstanceFile(red, blue_points, blue_circles, k, frame)


def read_instance(path) -> InstanceFile:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def _pairs(points) -> str:
    if not points:
        return "[]"
    rows = ",\n    ".join(f"[{p[0]!r}, {p[1]!r}]" for p in points)
    return "[\n    " + rows + "\n  ]"


def render_instance(inst: InstanceFile) -> str:
    """Deterministic text: fixed key order, one point per line."""
    parts = [f'  "red": {_pairs(inst.red)}']
    if inst.blue_points is not None:
        parts.append(f'  "blue_points": {_pairs(inst.blue_points)}')
    if inst.blue_circles is not None:
        parts.append(f'  "blue_circles": {_pairs(inst.blue_circles)}')
    if inst.k is not None:
        parts.append(f'  "k": {inst.k}')
    if inst.frame is not None:
        parts.append('  "frame": [' + ", ".join(repr(float(v)) for v in inst.frame.as_tuple()) + "]")
    return "{\n" + ",\n".join(parts) + "\n}\n"


def result_dict(rect: Rect, outliers_used: int, algorithm: str, elapsed_ns: int) -> dict:
    return {
        "rect": [float(v) for v in rect.as_tuple()],
        "area": float(rect.area),
        "outliers_used": outliers_used,
        "algorithm": algorithm,
        "elapsed_ns": elapsed_ns,
    }
