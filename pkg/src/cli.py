#!/usr/bin/env python3
"""
G2(2) MULTIPLET ENGINE - COMMAND LINE
Subcommands: roots, weyl, multiplet, classify, parabolics, dim, verify.

Exit codes: 0 success, 1 fixture failure, 2 usage or parse error,
3 arithmetic overflow.
"""

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple

from . import output_formats as fmt
from .multiplets import build, classify, verify_paper_fixtures
from .parabolic import ParabolicName, catalog, nilradical
from .rational import RationalOverflowError, RationalParseError, format_rational, is_natural, parse_rational
from .rootsys import default_root_system, weyl_group
from .weights import WeightLabels, weyl_dim

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_OVERFLOW = 3

FORMATS = ("table", "json", "dot")


class UsageError(Exception):
    """A well-formed command asked for something it does not support"""


def rational_arg(text: str) -> Fraction:
    """argparse type for "p" / "p/q"; negatives need the --m1=-1/2 spelling"""
    try:
        return parse_rational(text)
    except RationalParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_common(parser: argparse.ArgumentParser, formats=FORMATS[:2]):
    parser.add_argument("--format", choices=FORMATS, default="table", help=f"output format ({', '.join(formats)})")
    parser.add_argument("--out", type=Path, help="write the document to this file instead of stdout")
    parser.set_defaults(allowed_formats=formats)


def _add_parameters(parser: argparse.ArgumentParser, parabolic: bool = True):
    parser.add_argument("--m1", type=rational_arg, required=True, help="first label, p or p/q")
    parser.add_argument("--m2", type=rational_arg, required=True, help="second label, p or p/q")
    if parabolic:
        parser.add_argument(
            "--parabolic",
            choices=[p.value for p in ParabolicName],
            default=ParabolicName.P0.value,
            help="inducing parabolic (default P0)",
        )


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="g2mult",
        description="Exact multiplets of elementary representations of G2(2)",
    )
    parser.add_argument("--verbose", action="store_true", help="DEBUG logging on stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)

    roots = subparsers.add_parser("roots", help="positive roots, coroots and lengths")
    _add_common(roots)
    roots.set_defaults(handler=cmd_roots)

    weyl = subparsers.add_parser("weyl", help="the twelve Weyl group elements")
    _add_common(weyl)
    weyl.set_defaults(handler=cmd_weyl)

    multiplet = subparsers.add_parser("multiplet", help="full multiplet graph")
    _add_parameters(multiplet)
    _add_common(multiplet, FORMATS)
    multiplet.set_defaults(handler=cmd_multiplet)

    classify_parser = subparsers.add_parser("classify", help="case label of a parameter pair")
    _add_parameters(classify_parser)
    _add_common(classify_parser)
    classify_parser.set_defaults(handler=cmd_classify)

    parabolics = subparsers.add_parser("parabolics", help="cuspidal parabolics and nilradicals")
    _add_common(parabolics)
    parabolics.set_defaults(handler=cmd_parabolics)

    dim = subparsers.add_parser("dim", help="Weyl dimension for positive integer labels")
    _add_parameters(dim, parabolic=False)
    _add_common(dim)
    dim.set_defaults(handler=cmd_dim)

    verify = subparsers.add_parser("verify", help="run the tabulated fixture suite")
    _add_common(verify)
    verify.set_defaults(handler=cmd_verify)

    return parser


# ----------------------------------------------------------------------
# Commands: each returns (exit code, document text)


def cmd_roots(args) -> tuple:
    rs = default_root_system()
    if args.format == "json":
        return EXIT_OK, fmt.render_json(fmt.roots_document(rs))
    return EXIT_OK, fmt.render_roots_table(rs)


def cmd_weyl(args) -> tuple:
    elements = list(weyl_group())
    if args.format == "json":
        return EXIT_OK, fmt.render_json(fmt.weyl_document(elements))
    return EXIT_OK, fmt.render_weyl_table(elements)


def cmd_multiplet(args) -> tuple:
    graph = build(args.m1, args.m2, args.parabolic)
    if args.format == "json":
        return EXIT_OK, fmt.render_json(graph.to_dict())
    if args.format == "dot":
        return EXIT_OK, fmt.render_multiplet_dot(graph)
    return EXIT_OK, fmt.render_multiplet_table(graph)


def cmd_classify(args) -> tuple:
    case = classify(args.m1, args.m2, args.parabolic)
    if case.name == "Unlisted":
        logger.warning("⚠️ (%s, %s, %s) matches no tabulated case", args.m1, args.m2, args.parabolic)
    if args.format == "json":
        document = {
            "parameters": {"m1": format_rational(args.m1), "m2": format_rational(args.m2)},
            "parabolic": args.parabolic,
            "case": case.name,
        }
        return EXIT_OK, fmt.render_json(document)
    return EXIT_OK, case.name + "\n"


def cmd_parabolics(args) -> tuple:
    entries = catalog()
    reports = [nilradical(desc) for desc in entries]
    if args.format == "json":
        return EXIT_OK, fmt.render_json(fmt.parabolics_document(entries, reports))
    return EXIT_OK, fmt.render_parabolics_table(entries, reports)


def cmd_dim(args) -> tuple:
    if not (is_natural(args.m1) and is_natural(args.m2)):
        raise UsageError("dim needs positive integer --m1 and --m2")
    dim = weyl_dim(WeightLabels(args.m1, args.m2))
    if args.format == "json":
        document = {"m1": format_rational(args.m1), "m2": format_rational(args.m2), "dim": format_rational(dim)}
        return EXIT_OK, fmt.render_json(document)
    return EXIT_OK, format_rational(dim) + "\n"


def cmd_verify(args) -> tuple:
    report = verify_paper_fixtures()
    code = EXIT_OK if report.all_passed else EXIT_VERIFY_FAILED
    if args.format == "json":
        return code, fmt.render_json(report.to_list())
    return code, fmt.render_verify_table(report)


# ----------------------------------------------------------------------


def _configure_logging(verbose: bool) -> Tuple[logging.Handler, int]:
    """Attach a stderr handler for this run; returns it with the previous root level"""
    root = logging.getLogger()
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    previous = root.level
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)
    return handler, previous


def _restore_logging(handler: logging.Handler, level: int):
    root = logging.getLogger()
    root.removeHandler(handler)
    handler.close()
    root.setLevel(level)


def _emit(text: str, out: Optional[Path]):
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(out, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except RationalOverflowError as exc:
        sys.stderr.write(f"g2mult: {exc}\n")
        return EXIT_OVERFLOW

    handler, level = _configure_logging(args.verbose)
    try:
        return _run(args)
    finally:
        _restore_logging(handler, level)


def _run(args) -> int:
    if args.format not in args.allowed_formats:
        sys.stderr.write(f"g2mult {args.command}: format {args.format!r} is not supported here\n")
        return EXIT_USAGE

    try:
        code, text = args.handler(args)
    except UsageError as exc:
        sys.stderr.write(f"g2mult {args.command}: {exc}\n")
        return EXIT_USAGE
    except RationalOverflowError as exc:
        sys.stderr.write(f"g2mult {args.command}: {exc}\n")
        return EXIT_OVERFLOW

    try:
        _emit(text, args.out)
    except OSError as exc:
        sys.stderr.write(f"g2mult {args.command}: cannot write {args.out}: {exc}\n")
        return EXIT_USAGE
    return code


if __name__ == "__main__":
    sys.exit(main())
