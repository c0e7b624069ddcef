from __future__ import annotations

import argparse
from typing import TextIO

from ..diagram import AxisType, parse_diagram
from ..render import render_svg
from .shared import EXIT_OK, CommandResult, add_global_flags


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("render", help="write a diagram as SVG")
    add_global_flags(parser)
    parser.add_argument("diagram", help="mate sequence or pair list")
    parser.add_argument("--output", "-o", required=True)
    parser.add_argument("--axis", choices=[a.value for a in AxisType])
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, out: TextIO) -> CommandResult:
    d = parse_diagram(args.diagram)
    path = render_svg(d, args.output, axis=args.axis)
    return CommandResult(EXIT_OK, f"wrote {path}")
