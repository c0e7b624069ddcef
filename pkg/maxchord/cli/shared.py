from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from typing import TextIO

from pydantic import BaseModel

from ..errors import (
    GuardExceededError,
    InvalidInputError,
    InvariantViolationError,
    PreconditionError,
    VerificationMismatchError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_MISMATCH = 2


@dataclass
class CommandResult:
    exit_code: int
    payload: str = ""


class CommandLineParser(argparse.ArgumentParser):
    """Usage errors exit with 1 like any other invalid input, leaving 2 for mismatches."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise InvalidInputError(f"{self.prog}: {message}")


def add_global_flags(parser: argparse.ArgumentParser, *, top_level: bool = False) -> None:
    # Subcommands repeat the flags with SUPPRESS so they only override when given.
    default_format = "plain" if top_level else argparse.SUPPRESS
    default_force = False if top_level else argparse.SUPPRESS
    parser.add_argument("--format", choices=["plain", "json"], default=default_format, help="output format")
    parser.add_argument("--force", action="store_true", default=default_force, help="lift desk-scale guards")


def emit(model: BaseModel, fmt: str) -> str:
    if fmt == "json":
        return model.model_dump_json(indent=2)
    return model.to_plain()  # type: ignore[attr-defined]


def run(args: argparse.Namespace, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    try:
        result: CommandResult = args.handler(args, out)
    except (InvalidInputError, PreconditionError, GuardExceededError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except (VerificationMismatchError, InvariantViolationError) as e:
        logger.error(f"verification failed: {e}")
        print(f"mismatch: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    if result.payload:
        print(result.payload, file=out)
    return result.exit_code
