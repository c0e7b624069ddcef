from __future__ import annotations

import argparse
from typing import TextIO

from ..bijection import format_matching, from_quotient, glue, orientable_split, parse_matching, to_quotient
from ..diagram import format_diagram, parse_diagram
from ..schemas import BijectionResponse, GluingReportResponse
from .shared import EXIT_OK, CommandResult, add_global_flags, emit


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("bijection", help="fold a type II maximal diagram or unfold a signed matching")
    add_global_flags(parser)
    direction = parser.add_mutually_exclusive_group(required=True)
    direction.add_argument("--fold", metavar="DIAGRAM", help="mate sequence or pair list, e.g. '2 3 0 1'")
    direction.add_argument("--unfold", metavar="MATCHING", help="signed matching, e.g. '1; 0-1:1'")
    parser.add_argument(
        "--split",
        action="store_true",
        help="also count orientable / non-orientable unicellular maps with the same number of edges",
    )
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, out: TextIO) -> CommandResult:
    if args.fold is not None:
        d = parse_diagram(args.fold)
        sm = to_quotient(d)
        direction, source, image = "fold", format_diagram(d), format_matching(sm)
    else:
        sm = parse_matching(args.unfold)
        d = from_quotient(sm)
        direction, source, image = "unfold", format_matching(sm), format_diagram(d)
    split = {}
    if args.split:
        orientable, non_orientable = orientable_split(sm.g, force=args.force)
        split = {"orientable": str(orientable), "non_orientable": str(non_orientable)}
    response = BijectionResponse(
        direction=direction,
        input=source,
        output=image,
        gluing=GluingReportResponse.from_report(glue(sm)),
        split=split,
    )
    return CommandResult(EXIT_OK, emit(response, args.format))
