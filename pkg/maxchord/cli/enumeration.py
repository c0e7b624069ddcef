from __future__ import annotations

import argparse
import json
from itertools import islice
from typing import Callable, Iterator, TextIO

from ..diagram import ChordDiagram, format_diagram, genus, is_fixed_by, is_maximal, type_one_axis, type_two_axis
from ..errors import InvalidInputError
from ..oracle import enumerate_diagrams
from ..schemas import EnumerationSummary
from .shared import EXIT_OK, CommandResult, add_global_flags, emit


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("enumerate", help="stream diagrams in search order")
    add_global_flags(parser)
    parser.add_argument("--chords", type=int, required=True)
    parser.add_argument("--maximal", action="store_true")
    parser.add_argument("--genus", type=int)
    parser.add_argument("--type1", action="store_true", help="maximal and fixed by i -> -i")
    parser.add_argument("--type2", action="store_true", help="maximal and fixed by i -> 2n-1-i")
    parser.add_argument("--limit", type=int)
    parser.add_argument("--count-only", action="store_true")
    parser.set_defaults(handler=handle)


def _filters(args: argparse.Namespace) -> list[Callable[[ChordDiagram], bool]]:
    n = args.chords
    wants_maximal = args.maximal or args.type1 or args.type2
    if args.genus is not None and wants_maximal and 2 * args.genus != n:
        raise InvalidInputError(f"--genus {args.genus} contradicts a maximal filter on {n} chords")
    if args.limit is not None and args.limit < 0:
        raise InvalidInputError(f"--limit must be non-negative, got {args.limit}")

    checks: list[Callable[[ChordDiagram], bool]] = []
    if wants_maximal:
        checks.append(is_maximal)
    if args.genus is not None:
        checks.append(lambda d: genus(d) == args.genus)
    if args.type1:
        sigma = type_one_axis(2 * n)
        checks.append(lambda d: is_fixed_by(d, sigma))
    if args.type2:
        rho = type_two_axis(2 * n)
        checks.append(lambda d: is_fixed_by(d, rho))
    return checks


def _selected(args: argparse.Namespace) -> Iterator[ChordDiagram]:
    checks = _filters(args)
    stream = (d for d in enumerate_diagrams(args.chords, force=args.force) if all(c(d) for c in checks))
    return islice(stream, args.limit) if args.limit is not None else stream


def handle(args: argparse.Namespace, out: TextIO) -> CommandResult:
    selected = _selected(args)
    if args.count_only:
        summary = EnumerationSummary(chords=args.chords, count=str(sum(1 for _ in selected)))
        return CommandResult(EXIT_OK, emit(summary, args.format))
    if args.format == "json":
        document = {"chords": args.chords, "diagrams": [format_diagram(d) for d in selected]}
        return CommandResult(EXIT_OK, json.dumps(document, indent=2))
    for d in selected:
        out.write(format_diagram(d) + "\n")
    return CommandResult(EXIT_OK)
