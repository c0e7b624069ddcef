from __future__ import annotations

import argparse
from typing import TextIO

from .. import counting, oracle
from ..bijection import orientable_split
from ..diagram import AxisType
from ..schemas import OracleCheck, OracleReport
from .shared import EXIT_MISMATCH, EXIT_OK, CommandResult, add_global_flags, emit

ORDER = ("dstar", "d1", "d2", "dcircle")


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("oracle", help="brute-force counts next to the closed forms")
    add_global_flags(parser)
    parser.add_argument("--genus", type=int, required=True)
    parser.add_argument("--which", choices=[*ORDER, "all"], default="all")
    parser.add_argument("--split", action="store_true", help="with d2: orientable / non-orientable quotients")
    parser.set_defaults(handler=handle)


def _check(name: str, g: int, force: bool, split: bool) -> OracleCheck:
    if name == "dstar":
        counts = oracle.rotation_fixed_counts(g, force=force)
        return OracleCheck(
            name=name,
            g=g,
            oracle=str(oracle.rotation_orbit_count(g, counts)),
            formula=str(counting.d_star(g)),
            details={"rotation_fixed": ",".join(str(c) for c in counts)},
        )
    if name == "d1":
        found = oracle.reflection_fixed_oracle(g, AxisType.TYPE_I, force=force)
        return OracleCheck(name=name, g=g, oracle=str(found), formula=str(counting.d_vertical(g)))
    if name == "d2":
        details = {}
        if split:
            orientable, non_orientable = orientable_split(g, force=force)
            details = {"orientable": str(orientable), "non_orientable": str(non_orientable)}
        found = oracle.reflection_fixed_oracle(g, AxisType.TYPE_II, force=force)
        return OracleCheck(name=name, g=g, oracle=str(found), formula=str(counting.d_parallel(g)), details=details)
    result = oracle.d_circle_oracle(g, force=force)
    return OracleCheck(
        name=name,
        g=g,
        oracle=str(result.value),
        formula=str(counting.d_circle(g)),
        details={"burnside": str(result.burnside), "canonical": str(result.canonical)},
    )


def handle(args: argparse.Namespace, out: TextIO) -> CommandResult:
    names = ORDER if args.which == "all" else (args.which,)
    report = OracleReport(checks=[_check(name, args.genus, args.force, args.split) for name in names])
    return CommandResult(EXIT_OK if report.ok else EXIT_MISMATCH, emit(report, args.format))
