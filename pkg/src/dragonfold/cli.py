"""Command-line interface.

Four subcommands: generate curves (by unfolding, folding, paper-strip
simulation, or the infinite stream), verify the construction laws, render a
curve file to SVG, and print a stream prefix. Output is deterministic byte
for byte. Exit status: 0 on success, 1 when verification finds a
counterexample, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import construct, laws
from .core import parse_curve
from .geometry import curve_to_path
from .paperfold import creases
from .render import CornerStyle, RenderOptions, path_to_svg


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("must not be negative")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _nonneg_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("must not be negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dragonfold",
        description="Generalized dragon curves: construct, verify, render.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="construct a curve and print or save it")
    gen.add_argument("--method", required=True,
                     choices=("unfold", "fold", "paperfold", "stream"),
                     help="construction to run")
    gen.add_argument("--rots", metavar="CA...",
                     help="instruction string for unfold/fold (C/A, any case)")
    gen.add_argument("--order", type=_nonneg_int, metavar="N",
                     help="shorthand for N clockwise instructions (or N folds)")
    gen.add_argument("--count", type=_nonneg_int, metavar="M",
                     help="prefix length for --method stream")
    gen.add_argument("--format", dest="fmt", default="turns",
                     choices=("turns", "points", "svg"),
                     help="output form (default: turns)")
    gen.add_argument("--json", action="store_true",
                     help="with --format points, emit a JSON array instead of CSV")
    gen.add_argument("--out", type=Path, metavar="FILE",
                     help="write to FILE instead of stdout")
    gen.set_defaults(func=_cmd_generate)

    ver = sub.add_parser("verify", help="run the construction-law checks")
    ver.add_argument("--law", default="all", choices=("all",) + laws.LAW_IDS,
                     help="single law to run (default: all)")
    ver.add_argument("--max-len", type=_nonneg_int, default=12, metavar="N",
                     help="instruction-list bound for the exhaustive equivalence "
                          f"law, at most {laws.EQUIVALENCE_MAX_LEN} (default: 12)")
    ver.add_argument("--cases", type=_nonneg_int, default=1000, metavar="K",
                     help="random cases per seeded law (default: 1000)")
    ver.add_argument("--seed", type=int, default=42,
                     help="PRNG seed for the random cases (default: 42)")
    ver.add_argument("--json", action="store_true", help="machine-readable report")
    ver.set_defaults(func=_cmd_verify)

    ren = sub.add_parser("render", help="render a curve file to SVG")
    ren.add_argument("--in", dest="infile", required=True, type=Path, metavar="FILE",
                     help="curve file (L/R characters)")
    ren.add_argument("--out", required=True, type=Path, metavar="FILE",
                     help="SVG file to write")
    ren.add_argument("--scale", type=_positive_float, default=10.0,
                     help="pixels per lattice unit (default: 10)")
    ren.add_argument("--margin", type=_nonneg_float, default=10.0,
                     help="padding around the drawing (default: 10)")
    ren.add_argument("--stroke", type=_positive_float, default=1.0,
                     help="stroke width (default: 1)")
    ren.add_argument("--rounded", action="store_true",
                     help="round corners instead of mitered")
    ren.set_defaults(func=_cmd_render)

    stm = sub.add_parser("stream", help="print a prefix of the infinite dragon curve")
    stm.add_argument("--count", required=True, type=_nonneg_int, metavar="M",
                     help="number of turns to print")
    stm.add_argument("--out", type=Path, metavar="FILE",
                     help="write to FILE instead of stdout")
    stm.set_defaults(func=_cmd_stream)

    return parser


def _write_output(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def _emit_curve(curve: str, fmt: str, as_json: bool, out: Path | None) -> None:
    if fmt == "turns":
        text = curve + "\n"
    elif fmt == "points":
        path = curve_to_path(curve)
        if as_json:
            text = json.dumps([[p.x, p.y] for p in path]) + "\n"
        else:
            text = "".join(f"{p.x},{p.y}\n" for p in path)
    else:
        text = path_to_svg(curve_to_path(curve))
    _write_output(text, out)


def _cmd_generate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.json and args.fmt != "points":
        parser.error("--json only applies to --format points")
    method = args.method
    if method in ("unfold", "fold"):
        if (args.order is None) == (args.rots is None):
            parser.error(f"--method {method} needs exactly one of --order/--rots")
        if args.count is not None:
            parser.error("--count only applies to --method stream")
        if args.rots is None:
            rs = construct.classic_instructions(args.order)
        else:
            try:
                rs = construct.parse_instructions(args.rots)
            except ValueError as exc:
                parser.error(str(exc))
        curve = construct.dragon_unfold(rs) if method == "unfold" else construct.dragon_fold(rs)
    elif method == "paperfold":
        if args.order is None or args.rots is not None or args.count is not None:
            parser.error("--method paperfold takes --order and nothing else")
        try:
            curve = creases(args.order)
        except ValueError as exc:
            parser.error(str(exc))
    else:
        if args.count is None or args.order is not None or args.rots is not None:
            parser.error("--method stream takes --count and nothing else")
        curve = construct.stream_prefix(args.count)
    _emit_curve(curve, args.fmt, args.json, args.out)
    return 0


def _cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    wants_equivalence = args.law in ("all", "equivalence")
    if wants_equivalence and args.max_len > laws.EQUIVALENCE_MAX_LEN:
        parser.error(f"--max-len is capped at {laws.EQUIVALENCE_MAX_LEN}")
    selected = None if args.law == "all" else (args.law,)
    reports = laws.run_all(seed=args.seed, cases=args.cases,
                           max_len=args.max_len, laws=selected)
    if args.json:
        payload = {
            "passed": all(r.passed for r in reports),
            "laws": [r.to_json() for r in reports],
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(laws.render_text(reports))
    return 0 if all(r.passed for r in reports) else 1


def _cmd_render(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        text = args.infile.read_text(encoding="utf-8")
    except OSError as exc:
        parser.error(f"cannot read {args.infile}: {exc}")
    try:
        curve = parse_curve(text)
    except ValueError as exc:
        parser.error(f"{args.infile}: {exc}")
    style = CornerStyle.ROUNDED if args.rounded else CornerStyle.MITER
    options = RenderOptions(scale=args.scale, margin=args.margin,
                            stroke_width=args.stroke, corner_style=style)
    args.out.write_text(path_to_svg(curve_to_path(curve), options), encoding="utf-8")
    return 0


def _cmd_stream(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    _write_output(construct.stream_prefix(args.count) + "\n", args.out)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
