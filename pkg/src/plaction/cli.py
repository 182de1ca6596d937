"""Command-line front end.

Exit statuses, per command:

=========  =================  ==============  =====================  ====================
command    0                  1               2                      3
=========  =================  ==============  =====================  ====================
classify   maps reported      -               input error            -
check      holds_on_ball      violated        input error            resource cap
witness    witness certified  -               precondition / input   missing auxiliary,
                                              / reduction failure    resource cap
transnum   order compatible   order violated  input error, not free  resource cap
theorem-a  classified         violation       input error            inconclusive
=========  =================  ==============  =====================  ====================
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import render
from .errors import (
    MissingAuxiliary,
    PreconditionError,
    ReductionFailed,
    ResourceError,
    ValidationError,
)
from .groups import DEFAULT_ELEMENT_CAP, build_ball, check_max_fixed
from .pl import fixed_set, inverse, rat
from .semiconj import (
    DEFAULT_ITERATIONS,
    DEFAULT_RESOLUTION,
    DEFAULT_WINDOW,
    DISCLAIMER,
    INCONCLUSIVE,
    VIOLATION,
    Caps,
    chart_monotonicity,
    theorem_a_report,
    translation_chart,
)
from .textio import parse_group_file, parse_map_file, parse_witness_request
from .witness import DEFAULT_EXPONENT_CAP, construct_witness

EXIT_OK, EXIT_VIOLATED, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3

DEFAULT_RADIUS = 4
DEFAULT_MAX_FIXED = 2
DEFAULT_CONTEXT_RADIUS = 2


def _non_negative(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def _positive(text):
    n = int(text)
    if n <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def _rational(text):
    try:
        return rat(text)
    except (ValidationError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _window(text):
    try:
        lo, hi = (rat(t.strip()) for t in text.split(","))
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError("expected lo,hi") from None
    if not lo < hi:
        raise argparse.ArgumentTypeError("need lo < hi")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="plaction",
        description="Exact analysis of PL homeomorphism groups of the line.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", type=Path, help="input file ('-' for standard input)")
    common.add_argument("--format", choices=("text", "json"), default="text")

    ball = argparse.ArgumentParser(add_help=False)
    ball.add_argument("--radius", type=_non_negative, default=None)
    ball.add_argument("--cap-elements", type=_positive, default=DEFAULT_ELEMENT_CAP)

    sub.add_parser("classify", parents=[common], help="orientation, fixed set and type of each map")

    c = sub.add_parser("check", parents=[common, ball], help="at most N fixed points on a ball")
    c.add_argument("--max-fixed", type=_non_negative, default=None)

    w = sub.add_parser("witness", parents=[common, ball], help="build a three-fixed-point witness")
    w.add_argument("--cap-exponent", type=_positive, default=DEFAULT_EXPONENT_CAP)

    t = sub.add_parser("transnum", parents=[common, ball], help="translation numbers of a free ball")
    t.add_argument("--iterations", type=_positive, default=DEFAULT_ITERATIONS)
    t.add_argument("--reference", default=None, help="generator name used as the unit")
    t.add_argument("--base-point", type=_rational, default=rat(0))

    a = sub.add_parser("theorem-a", parents=[common, ball], help="two-fixed-point classification")
    a.add_argument("--cap-exponent", type=_positive, default=DEFAULT_EXPONENT_CAP)
    a.add_argument("--window", type=_window, default=DEFAULT_WINDOW)
    a.add_argument("--resolution", type=_rational, default=DEFAULT_RESOLUTION)
    return p


def _pick(flag, setting, default):
    """Command-line flag, else file setting, else default."""
    for value in (flag, setting):
        if value is not None:
            return value
    return default


def _read(path: Path) -> str:
    if str(path) == "-":
        return sys.stdin.read()
    return path.read_text(encoding="utf-8")


def _emit(args, text: str, obj) -> None:
    sys.stdout.write(render.dumps(obj) if args.format == "json" else text)


def cmd_classify(args) -> int:
    mf = parse_map_file(_read(args.input))
    if not mf.maps:
        raise ValidationError("no maps in input")
    text = "".join(render.classify_text(n, g) + "\n" for n, g in mf.maps.items())
    obj = {"maps": [render.classify_json(n, g) for n, g in mf.maps.items()]}
    _emit(args, text, obj)
    return EXIT_OK


def cmd_check(args) -> int:
    group = parse_group_file(_read(args.input))
    radius = _pick(args.radius, group.radius, DEFAULT_RADIUS)
    n = _pick(args.max_fixed, group.max_fixed, DEFAULT_MAX_FIXED)
    ball = build_ball(group.maps, radius, group.names, cap=args.cap_elements)
    v = check_max_fixed(ball, n)
    _emit(args, render.verdict_text(v, ball, DISCLAIMER), render.verdict_json(v, ball, DISCLAIMER))
    return EXIT_OK if v.holds else EXIT_VIOLATED


def cmd_witness(args) -> int:
    req = parse_witness_request(_read(args.input))
    context = None
    if req.context:
        radius = _pick(args.radius, req.radius, DEFAULT_CONTEXT_RADIUS)
        context = build_ball(tuple(req.context.values()), radius, tuple(req.context), cap=args.cap_elements)
    report = construct_witness(req.g, req.f, context, cap=args.cap_exponent)
    _emit(args, render.witness_text(report), render.witness_json(report))
    return EXIT_OK


def _default_reference(ball, x0):
    for g in ball.generators:
        if g.preserving and fixed_set(g).is_empty:
            return g if g(x0) > x0 else inverse(g)
    raise PreconditionError("no fixed-point-free orientation-preserving generator to use as reference")


def cmd_transnum(args) -> int:
    group = parse_group_file(_read(args.input))
    radius = _pick(args.radius, group.radius, DEFAULT_RADIUS)
    ball = build_ball(group.maps, radius, group.names, cap=args.cap_elements)
    x0 = args.base_point
    if args.reference is None:
        g0 = _default_reference(ball, x0)
    else:
        if args.reference not in group.generators:
            raise ValidationError(f"unknown generator {args.reference!r}")
        g0 = group.generators[args.reference]
        if g0.preserving and g0(x0) < x0:
            g0 = inverse(g0)
    chart = translation_chart(ball, g0, x0, args.iterations)
    order = chart_monotonicity(chart)
    text = render.chart_text(chart, ball, order) + DISCLAIMER + "\n"
    obj = render.chart_json(chart, ball, order)
    obj["radius"] = radius
    obj["disclaimer"] = DISCLAIMER
    _emit(args, text, obj)
    return EXIT_OK if order.compatible else EXIT_VIOLATED


def cmd_theorem_a(args) -> int:
    group = parse_group_file(_read(args.input))
    radius = _pick(args.radius, group.radius, DEFAULT_RADIUS)
    caps = Caps(args.cap_elements, args.cap_exponent, args.window, args.resolution)
    report = theorem_a_report(group.maps, radius, caps, group.certificate, group.names)
    _emit(args, render.report_text(report), render.report_json(report))
    if report.verdict == VIOLATION:
        return EXIT_VIOLATED
    if report.verdict == INCONCLUSIVE:
        return EXIT_RESOURCE
    return EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "check": cmd_check,
    "witness": cmd_witness,
    "transnum": cmd_transnum,
    "theorem-a": cmd_theorem_a,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ResourceError, MissingAuxiliary) as exc:
        print(f"plaction: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValidationError, PreconditionError, ReductionFailed, OSError) as exc:
        print(f"plaction: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
