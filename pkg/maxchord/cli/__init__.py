"""Command registration.

Each command lives in its own module with a `register(subparsers)` function;
`router.py` combines them into one parser and exposes `main`.
"""

from .router import build_parser, main
