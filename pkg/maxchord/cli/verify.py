from __future__ import annotations

import argparse
from typing import TextIO

from .. import reference
from ..errors import PreconditionError
from ..schemas import CellMismatch, VerifyTableReport
from .shared import EXIT_MISMATCH, EXIT_OK, CommandResult, add_global_flags, emit


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify-table", help="recompute the reference table and diff it")
    add_global_flags(parser)
    parser.add_argument("--max-genus", type=int, default=12)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, out: TextIO) -> CommandResult:
    if args.max_genus < 1:
        raise PreconditionError(f"--max-genus must be >= 1, got {args.max_genus}")
    checked, diffs = reference.compare_with_reference(args.max_genus, reference.REFERENCE_TABLE)
    report = VerifyTableReport(
        max_genus=args.max_genus,
        checked=checked,
        mismatches=[CellMismatch(g=d.g, column=d.column, expected=d.expected, computed=d.computed) for d in diffs],
    )
    return CommandResult(EXIT_OK if report.ok else EXIT_MISMATCH, emit(report, args.format))
