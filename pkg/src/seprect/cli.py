"""Command line entry point: ``seprect solve | gen | bench``.

Exit codes: 0 success, 2 unbounded instance, 3 invalid input, 4 the
``--verify`` oracle disagrees with the solver.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import oracles
from .bench import format_slopes, run_bench
from .circles import layout, prepare_circles, solve_mbsr_c
from .envelope import Envelope
from .generate import LAYOUTS, generate_circles, generate_points
from .geometry import GuardExceeded, InvalidInstance, Rect, Unbounded, smallest_enclosing_rect
from .io import InstanceFile, read_instance, render_instance, result_dict
from .outliers import solve_mbsr_o
from .render import envelope_paths, render_svg, staircase_paths

EXIT_OK, EXIT_UNBOUNDED, EXIT_INVALID, EXIT_MISMATCH = 0, 2, 3, 4
VERIFY_GRID = 1e-3


class VerifyMismatch(Exception):
    pass


def _frame_arg(text: Optional[str]) -> Optional[Rect]:
    if text is None:
        return None
    try:
        vals = [float(v) for v in text.split(",")]
        return Rect(*vals)
    except (TypeError, ValueError):
        raise InvalidInstance(f"--frame expects xmin,ymin,xmax,ymax, got {text!r}") from None


def _int_list(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v.strip()]


def _verify_points(inst: InstanceFile, k: int, rect: Rect) -> str:
    frame = inst.frame
    if frame is None:
        pts = list(inst.red) + list(inst.blue)
        frame = smallest_enclosing_rect(pts)
    ref = oracles.oracle_mbsr_o(inst.red, inst.blue_points or (), k, frame)
    if ref.area != rect.area:
        raise VerifyMismatch(f"oracle area {ref.area!r} differs from solver area {rect.area!r}")
    return f"verified against brute force: area {ref.area!r}"


def _verify_circles(inst: InstanceFile, rect: Rect) -> str:
    if len(inst.blue_circles) > oracles.MAX_ORACLE_CIRCLES:
        raise GuardExceeded(f"{len(inst.blue_circles)} circles exceed the oracle guard")
    _, (lo, hi) = oracles.oracle_mbsr_c(inst.red, inst.blue_circles, inst.frame, VERIFY_GRID)
    slack = hi - lo
    if not (lo - slack <= rect.area <= hi):
        raise VerifyMismatch(f"solver area {rect.area!r} outside the oracle bracket [{lo - slack!r}, {hi!r}]")
    return f"verified against grid search: area in [{lo - slack:.6g}, {hi:.6g}]"


def cmd_solve(args) -> int:
    inst = read_instance(args.input)
    problem = args.problem
    envelopes: list[Envelope] = []
    smax = None
    if problem == "mbsr-c":
        if inst.blue_circles is None:
            raise InvalidInstance("mbsr-c needs 'blue_circles'")
        rep = solve_mbsr_c(inst.red, inst.blue_circles, inst.frame)
        if args.svg:
            prepared = prepare_circles(inst.red, inst.blue_circles, inst.frame)
            smax = prepared.smax
            envelopes = list(layout(prepared).env.values())
    else:
        if inst.blue_circles is not None:
            raise InvalidInstance(f"{problem} needs 'blue_points'")
        k = 0 if problem == "mbsr" else (inst.k or 0)
        algorithm = "baseline" if problem == "mbsr" else args.algorithm
        rep = solve_mbsr_o(inst.red, inst.blue_points or (), k, inst.frame, algorithm=algorithm)

    note = None
    if args.verify:
        try:
            if problem == "mbsr-c":
                note = _verify_circles(inst, rep.best)
            else:
                note = _verify_points(inst, 0 if problem == "mbsr" else (inst.k or 0), rep.best)
        except GuardExceeded as e:
            note = f"verification skipped: {e}"

    if args.svg:
        stairs = staircase_paths(inst, 0 if problem == "mbsr" else (inst.k or 0)) if problem != "mbsr-c" else []
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(inst, rep.best, smax, stairs, envelope_paths(envelopes)))

    if args.json:
        print(json.dumps(result_dict(rep.best, rep.outliers_used, rep.algorithm, rep.elapsed_ns)))
    else:
        r = rep.best
        print(f"rect {r.xmin!r} {r.ymin!r} {r.xmax!r} {r.ymax!r}")
        print(f"area {r.area!r}")
        print(f"outliers {rep.outliers_used} algorithm {rep.algorithm}")
    if note:
        print(note, file=sys.stderr)
    return EXIT_OK


def cmd_gen(args) -> int:
    seed = int(os.environ.get("SEPRECT_SEED", args.seed))
    frame = _frame_arg(args.frame)
    if args.kind == "circles":
        inst = generate_circles(args.n, args.m, seed=seed, frame=frame, layout=args.layout)
    else:
        inst = generate_points(args.n, args.m, args.k, seed=seed, frame=frame, layout=args.layout)
    text = render_instance(inst)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench(args) -> int:
    seed = int(os.environ.get("SEPRECT_SEED", args.seed))
    report = run_bench(args.problem, _int_list(args.m_grid), _int_list(args.k_grid) or [0], args.reps, seed,
                       layout=args.layout)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            report.write_csv(fh)
    else:
        report.write_csv(sys.stdout)
    for line in format_slopes(report.slopes()):
        print(line, file=sys.stderr if not args.out else sys.stdout)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="seprect", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve one instance file")
    s.add_argument("--input", required=True)
    s.add_argument("--problem", choices=("mbsr", "mbsr-o", "mbsr-c"), required=True)
    s.add_argument("--algorithm", choices=("baseline", "pairset", "auto"), default="auto")
    s.add_argument("--verify", action="store_true", help="cross-check with the brute-force oracle")
    s.add_argument("--svg", help="write a figure to this path")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_solve)

    g = sub.add_parser("gen", help="generate a random instance")
    g.add_argument("--kind", choices=("points", "circles"), default="points")
    g.add_argument("--n", type=int, default=5)
    g.add_argument("--m", type=int, default=20)
    g.add_argument("--k", type=int, default=0)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--frame", help="xmin,ymin,xmax,ymax")
    g.add_argument("--layout", choices=LAYOUTS, default="uniform")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="time the solvers over a size grid")
    b.add_argument("--problem", choices=("mbsr", "mbsr-o", "mbsr-c"), default="mbsr-o")
    b.add_argument("--m-grid", default="64,128,256,512")
    b.add_argument("--k-grid", default="0,2,4")
    b.add_argument("--reps", type=int, default=5)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--layout", choices=LAYOUTS, default="staircase-adversarial")
    b.add_argument("--out")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Unbounded as e:
        print(f"unbounded: {e}", file=sys.stderr)
        return EXIT_UNBOUNDED
    except VerifyMismatch as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    except (InvalidInstance, OSError) as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID
