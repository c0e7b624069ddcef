from __future__ import annotations

import argparse
from typing import TextIO

from ..counting import count_row, count_table
from ..errors import PreconditionError
from ..schemas import CountRowResponse, CountTableResponse
from .shared import EXIT_OK, CommandResult, add_global_flags, emit


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("count", help="closed-form counts for one genus or a range")
    add_global_flags(parser)
    which = parser.add_mutually_exclusive_group(required=True)
    which.add_argument("--genus", type=int, help="a single genus g >= 1")
    which.add_argument("--through", type=int, help="every genus 1..G")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, out: TextIO) -> CommandResult:
    if args.genus is not None:
        if args.genus < 1:
            raise PreconditionError(f"--genus must be >= 1, got {args.genus}")
        model = CountRowResponse.from_row(count_row(args.genus))
    else:
        if args.through < 1:
            raise PreconditionError(f"--through must be >= 1, got {args.through}")
        model = CountTableResponse(rows=[CountRowResponse.from_row(r) for r in count_table(args.through)])
    return CommandResult(EXIT_OK, emit(model, args.format))
