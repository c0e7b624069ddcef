from __future__ import annotations

import os

from .errors import GuardExceededError

# Read at import time; `python -m maxchord` loads .env before importing this module.
MAX_STREAM_CHORDS = int(os.getenv("MAXCHORD_MAX_STREAM_CHORDS") or "10")
MAX_FULL_CHORDS = int(os.getenv("MAXCHORD_MAX_FULL_CHORDS") or "8")  # 2,027,025 diagrams
MAX_SYMMETRIC_GENUS = int(os.getenv("MAXCHORD_MAX_SYMMETRIC_GENUS") or "7")
MAX_DIHEDRAL_GENUS = int(os.getenv("MAXCHORD_MAX_DIHEDRAL_GENUS") or "3")
MAX_SPLIT_GENUS = int(os.getenv("MAXCHORD_MAX_SPLIT_GENUS") or "6")  # 665,280 signed matchings

WORKERS = max(1, int(os.getenv("MAXCHORD_WORKERS") or "1"))
LOG_LEVEL = (os.getenv("MAXCHORD_LOG_LEVEL") or "WARNING").upper()


def check_guard(name: str, value: int, limit: int, *, force: bool = False) -> None:
    if force or value <= limit:
        return
    raise GuardExceededError(f"{name}={value} exceeds the desk-scale limit {limit} (use --force to lift it)")
