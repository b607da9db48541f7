"""Command-line interface: construct, classify, verify, campaign, sweep,
render, and generate, all over the JSON quadrangle format.

Exit codes:
  0  success (and, for verify/campaign, every report passed)
  1  at least one verification report failed
  2  usage error
  3  I/O or malformed-JSON error
  4  invalid quadrangle (duplicate vertices, parallel diagonals, bad scalars)
  5  random generation exhausted its attempt budget
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from .geometry import format_scalar, scalar
from .homothety import construct, result_to_json, result_vertices
from .quadrangle import (
    InvalidQuadrangle,
    QuadClass,
    Quadrangle,
    classify,
    diagonal_intersection,
    quad_from_json,
    quad_signed_area,
    quad_to_json,
)
from .render import RenderOptions, Scene, render_svg
from .verify import (
    ClaimId,
    GenerationExhausted,
    GeneratorConfig,
    generate_quadrangle,
    run_campaign,
    verify_quadrangle,
)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_INVALID_QUADRANGLE = 4
EXIT_GENERATION_EXHAUSTED = 5

DEFAULT_VERIFY_RATIOS = (
    Fraction(1, 2),
    Fraction(1, 3),
    Fraction(0),
    Fraction(1),
    Fraction(-1, 3),
    Fraction(4, 3),
)

_CLASS_NAMES = {
    "convex": QuadClass.CONVEX,
    "re-entrant": QuadClass.RE_ENTRANT,
    "crossed": QuadClass.CROSSED,
}


def _ratio_arg(text: str) -> Fraction:
    try:
        return scalar(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"invalid ratio {text!r}: {exc}") from exc


def _claims_arg(text: str) -> List[ClaimId]:
    by_name = {c.value: c for c in ClaimId}
    out = []
    for name in text.split(","):
        name = name.strip()
        if name not in by_name:
            raise argparse.ArgumentTypeError(
                f"unknown claim {name!r}; valid: {', '.join(sorted(by_name))}"
            )
        out.append(by_name[name])
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homquad",
        description="Homothetic parallelograms of a quadrangle: exact construction, "
        "theorem verification, and SVG figures.",
        epilog=__doc__.split("Exit codes:")[1].join(["Exit codes:", ""]),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", required=True, help="quadrangle JSON file")

    p = sub.add_parser("construct", help="build the homothetic parallelogram for one ratio")
    add_input(p)
    p.add_argument("--lambda", dest="ratio", type=_ratio_arg, required=True, metavar="RATIO")

    p = sub.add_parser("classify", help="convex / re-entrant / crossed, O, signed area")
    add_input(p)

    p = sub.add_parser("verify", help="run every claim on one quadrangle")
    add_input(p)
    p.add_argument(
        "--lambda",
        dest="ratios",
        type=_ratio_arg,
        action="append",
        metavar="RATIO",
        help="ratio to test (repeatable; default a built-in spread)",
    )
    p.add_argument("--claims", type=_claims_arg, help="comma-separated claim filter")

    p = sub.add_parser("campaign", help="verify claims over seeded random quadrangles")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--range", dest="coord_range", type=int, default=10)
    p.add_argument("--class", dest="target_class", choices=sorted(_CLASS_NAMES))
    p.add_argument("--lambda", dest="ratios", type=_ratio_arg, action="append", metavar="RATIO")
    p.add_argument("--claims", type=_claims_arg)

    p = sub.add_parser("sweep", help="tabulate area and perimeter across a ratio range")
    add_input(p)
    p.add_argument("--from", dest="ratio_from", type=_ratio_arg, required=True, metavar="RATIO")
    p.add_argument("--to", dest="ratio_to", type=_ratio_arg, required=True, metavar="RATIO")
    p.add_argument("--steps", type=int, required=True)

    p = sub.add_parser("render", help="write an SVG figure")
    add_input(p)
    p.add_argument("--lambda", dest="ratios", type=_ratio_arg, action="append", metavar="RATIO")
    p.add_argument("--output", required=True)
    p.add_argument("--show-construction", action="store_true")
    p.add_argument("--show-rays", action="store_true")
    p.add_argument("--labels", action="store_true")
    p.add_argument("--width", type=int, default=640)

    p = sub.add_parser("generate", help="write a seeded random quadrangle JSON")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--range", dest="coord_range", type=int, default=10)
    p.add_argument("--class", dest="target_class", choices=sorted(_CLASS_NAMES))
    p.add_argument("--output", help="destination file (default: stdout)")

    return parser


def _load_quad(path: str) -> Quadrangle:
    with open(path, "r", encoding="utf-8") as handle:
        doc = json.load(handle)
    return quad_from_json(doc)


def _use_color(stream) -> bool:
    mode = os.environ.get("HOMQUAD_COLOR", "auto")
    if mode == "never":
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _summary(passed: int, failed: int) -> None:
    color = _use_color(sys.stderr)
    if failed:
        msg = f"FAILED: {failed} of {passed + failed} reports"
        if color:
            msg = f"\x1b[31m{msg}\x1b[0m"
    else:
        msg = f"ok: all {passed} reports passed"
        if color:
            msg = f"\x1b[32m{msg}\x1b[0m"
    print(msg, file=sys.stderr)


def _emit_reports(reports) -> int:
    failed = 0
    for report in reports:
        print(json.dumps(report.to_json()))
    failed = sum(1 for r in reports if not r.passed)
    _summary(len(reports) - failed, failed)
    return EXIT_VERIFICATION_FAILED if failed else EXIT_OK


def _cmd_construct(args) -> int:
    q = _load_quad(args.input)
    print(json.dumps(result_to_json(construct(q, args.ratio))))
    return EXIT_OK


def _cmd_classify(args) -> int:
    q = _load_quad(args.input)
    o = diagonal_intersection(q)
    doc = {
        "class": classify(q).value,
        "O": [format_scalar(o.x), format_scalar(o.y)],
        "signed_area": format_scalar(quad_signed_area(q)),
    }
    print(json.dumps(doc))
    return EXIT_OK


def _cmd_verify(args) -> int:
    q = _load_quad(args.input)
    ratios = tuple(args.ratios) if args.ratios else DEFAULT_VERIFY_RATIOS
    return _emit_reports(verify_quadrangle(q, ratios, args.claims))


def _cmd_campaign(args) -> int:
    cfg = GeneratorConfig(
        seed=args.seed,
        coordinate_range=args.coord_range,
        target_class=_CLASS_NAMES[args.target_class] if args.target_class else None,
    )
    ratios = tuple(args.ratios) if args.ratios else DEFAULT_VERIFY_RATIOS
    return _emit_reports(run_campaign(cfg, args.trials, ratios, args.claims))


def _cmd_sweep(args) -> int:
    if args.steps < 2:
        raise UsageError("--steps must be at least 2")
    if args.ratio_from == args.ratio_to:
        raise UsageError("--from and --to must differ")
    q = _load_quad(args.input)
    s = abs(quad_signed_area(q))
    span = args.ratio_to - args.ratio_from
    print("lambda\tarea\tside_sq_KL\tside_sq_LM\tside_sq_MN\tside_sq_NK\tperimeter")
    for i in range(args.steps):
        r = args.ratio_from + Fraction(i, args.steps - 1) * span
        area = 2 * (r - 1) ** 2 * s
        vs = result_vertices(q, r)
        side_sq = [(vs[(j + 1) % 4] - vs[j]).norm_sq() for j in range(4)]
        perimeter = sum(math.sqrt(v) for v in side_sq)
        cols = [format_scalar(r), format_scalar(area)]
        cols.extend(format_scalar(v) for v in side_sq)
        cols.append(f"{perimeter:.15g}")
        print("\t".join(cols))
    return EXIT_OK


def _cmd_render(args) -> int:
    q = _load_quad(args.input)
    ratios = tuple(args.ratios) if args.ratios else (Fraction(1, 2),)
    scene = Scene(
        quad=q,
        ratios=ratios,
        show_construction_lines=args.show_construction,
        show_perspective_rays=args.show_rays,
        show_labels=args.labels,
    )
    svg = render_svg(scene, RenderOptions(width_px=args.width))
    with open(args.output, "w", encoding="utf-8") as handle:
        handle.write(svg)
    return EXIT_OK


def _cmd_generate(args) -> int:
    cfg = GeneratorConfig(
        seed=args.seed,
        coordinate_range=args.coord_range,
        target_class=_CLASS_NAMES[args.target_class] if args.target_class else None,
    )
    doc = json.dumps(quad_to_json(generate_quadrangle(cfg)))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(doc + "\n")
    else:
        print(doc)
    return EXIT_OK


class UsageError(ValueError):
    pass


_DISPATCH = {
    "construct": _cmd_construct,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "campaign": _cmd_campaign,
    "sweep": _cmd_sweep,
    "render": _cmd_render,
    "generate": _cmd_generate,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except UsageError as exc:
        print(f"homquad: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidQuadrangle as exc:
        print(f"homquad: invalid quadrangle: {exc}", file=sys.stderr)
        return EXIT_INVALID_QUADRANGLE
    except GenerationExhausted as exc:
        print(f"homquad: {exc}", file=sys.stderr)
        return EXIT_GENERATION_EXHAUSTED
    except json.JSONDecodeError as exc:
        print(f"homquad: malformed JSON: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"homquad: {exc}", file=sys.stderr)
        return EXIT_IO


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
