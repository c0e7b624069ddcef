from __future__ import annotations

import logging
import sys
from typing import Sequence

from .. import config
from . import bijection, count, enumeration, oracles, render, verify
from .shared import EXIT_INVALID, CommandLineParser, add_global_flags, run
from ..errors import InvalidInputError

COMMANDS = (count, verify, oracles, enumeration, bijection, render)


def build_parser() -> CommandLineParser:
    parser = CommandLineParser(prog="maxchord", description="Count and enumerate maximal chord diagrams.")
    add_global_flags(parser, top_level=True)
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(
        level=config.LOG_LEVEL,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        args = build_parser().parse_args(argv)
    except InvalidInputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    return run(args)
