"""Largest axis-aligned rectangles separating red points from blue points
(with outliers) or from blue unit circles."""
from .arcs import ArcProblem, optimize_arc, optimize_arc_pair
from .circles import compute_smax_circles, solve_mbsr_c
from .envelope import Envelope, build_envelope
from .geometry import (
    GuardExceeded,
    InvalidComposition,
    InvalidInstance,
    Point,
    Rect,
    Region,
    Unbounded,
    UnitCircle,
    smallest_enclosing_rect,
)
from .io import InstanceFile, parse_instance, read_instance, render_instance
from .outliers import SolveReport, solve_mbsr, solve_mbsr_o, solve_mbsr_o_baseline, solve_mbsr_o_pairset

__all__ = [
    "ArcProblem",
    "Envelope",
    "GuardExceeded",
    "InstanceFile",
    "InvalidComposition",
    "InvalidInstance",
    "Point",
    "Rect",
    "Region",
    "SolveReport",
    "Unbounded",
    "UnitCircle",
    "build_envelope",
    "compute_smax_circles",
    "optimize_arc",
    "optimize_arc_pair",
    "parse_instance",
    "read_instance",
    "render_instance",
    "smallest_enclosing_rect",
    "solve_mbsr",
    "solve_mbsr_c",
    "solve_mbsr_o",
    "solve_mbsr_o_baseline",
    "solve_mbsr_o_pairset",
]
