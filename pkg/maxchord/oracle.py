"""Brute-force enumerators used to check every closed form at desk scale.

All searches share one depth-first core: take the smallest free point p, try
each larger free partner q, and place the whole orbit of chord {p, q} under the
symmetry being imposed (just {p, q} itself when none is). Maximal-only searches
also drop a branch as soon as a face walk closes without covering every point.
"""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence, TypeVar

from . import config
from .config import check_guard
from .counting import catalan, double_factorial, exact_div
from .diagram import (
    AxisType,
    ChordDiagram,
    SymmetryElement,
    axes_of_type,
    canonical_axis,
    canonical_form,
    dihedral_group,
    genus,
    is_fixed_by,
    is_maximal,
    rotation,
)
from .errors import InvariantViolationError, PreconditionError, VerificationMismatchError

logger = logging.getLogger(__name__)

T = TypeVar("T")


def _undo(mate: list[int], placed: Sequence[int]) -> None:
    for x in placed:
        mate[x] = -1


def _place_orbit(mate: list[int], s: SymmetryElement | None, p: int, q: int) -> list[int] | None:
    placed: list[int] = []
    a, b = p, q
    while True:
        if mate[a] >= 0 or mate[b] >= 0:
            _undo(mate, placed)
            return None
        mate[a], mate[b] = b, a
        placed += (a, b)
        if s is None:
            return placed
        a, b = s(a), s(b)
        if {a, b} == {p, q}:
            return placed


def _closes_early(mate: list[int], placed: Sequence[int]) -> bool:
    points = len(mate)
    for start in placed:
        i, steps = start, 0
        while mate[i] >= 0:
            i = (mate[i] + 1) % points
            steps += 1
            if i == start:
                if steps < points:
                    return True
                break
    return False


def _search(mate: list[int], s: SymmetryElement | None, prune: bool, start: int) -> Iterator[tuple[int, ...]]:
    points = len(mate)
    p = start
    while p < points and mate[p] >= 0:
        p += 1
    if p == points:
        yield tuple(mate)
        return
    for q in range(p + 1, points):
        if mate[q] >= 0:
            continue
        placed = _place_orbit(mate, s, p, q)
        if placed is None:
            continue
        if not (prune and _closes_early(mate, placed)):
            yield from _search(mate, s, prune, p + 1)
        _undo(mate, placed)


def _search_partition(points: int, s: SymmetryElement | None, prune: bool, partner: int) -> Iterator[tuple[int, ...]]:
    """Only the diagrams in which point 0 is joined to ``partner``."""
    mate = [-1] * points
    placed = _place_orbit(mate, s, 0, partner)
    if placed is None or (prune and _closes_early(mate, placed)):
        return
    yield from _search(mate, s, prune, 1)


def iter_pairings(points: int) -> Iterator[tuple[int, ...]]:
    """Every perfect matching of 0..points-1 as a mate tuple, in search order. No guard."""
    yield from _search([-1] * points, None, False, 0)


def _run_partitions(worker: Callable[[tuple], T], jobs: list[tuple], workers: int | None) -> list[T]:
    workers = config.WORKERS if workers is None else workers
    if workers <= 1 or len(jobs) <= 1:
        return [worker(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(worker, jobs))


def _check_g(g: int) -> None:
    if g < 1:
        raise PreconditionError(f"genus must be >= 1, got {g}")


# ----- labelled enumeration -----

def enumerate_diagrams(n: int, *, force: bool = False) -> Iterator[ChordDiagram]:
    """Each of the (2n-1)!! diagrams once: smallest free point joined to each larger free point in turn."""
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    check_guard("chords", n, config.MAX_STREAM_CHORDS, force=force)
    return (ChordDiagram(mate) for mate in iter_pairings(2 * n))


@dataclass(frozen=True)
class GenusTally:
    n: int
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def _tally_partition(job: tuple[int, int]) -> Counter:
    points, partner = job
    return Counter(genus(ChordDiagram(mate)) for mate in _search_partition(points, None, False, partner))


def genus_tally(n: int, *, force: bool = False, workers: int | None = None) -> GenusTally:
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    check_guard("chords", n, config.MAX_FULL_CHORDS, force=force)
    points = 2 * n
    merged: Counter = Counter()
    for part in _run_partitions(_tally_partition, [(points, q) for q in range(1, points)], workers):
        merged.update(part)
    tally = GenusTally(n=n, counts=dict(sorted(merged.items())))
    if tally.total != double_factorial(2 * n - 1) or tally.counts.get(0) != catalan(n):
        raise InvariantViolationError(f"genus tally for n={n} is inconsistent: {tally.counts}")
    logger.info(f"genus tally n={n}: {tally.counts}")
    return tally


def enumerate_maximal(g: int, *, force: bool = False) -> Iterator[ChordDiagram]:
    """All maximal diagrams with 2g chords, in search order."""
    _check_g(g)
    check_guard("chords", 2 * g, config.MAX_FULL_CHORDS, force=force)
    for mate in _search([-1] * (4 * g), None, True, 0):
        d = ChordDiagram(mate)
        if is_maximal(d):
            yield d


# ----- symmetric enumeration -----

def enumerate_symmetric(points: int, s: SymmetryElement, *, maximal_only: bool = False) -> Iterator[ChordDiagram]:
    """Diagrams on ``points`` points fixed by ``s``, built orbit by orbit."""
    if s.points != points:
        raise PreconditionError(f"symmetry acts on {s.points} points, not {points}")
    for mate in _search([-1] * points, s, maximal_only, 0):
        d = ChordDiagram(mate)
        if not maximal_only or is_maximal(d):
            yield d


def _fixed_partition(job: tuple[int, SymmetryElement, int, bool]) -> int:
    points, s, partner, maximal_only = job
    count = 0
    for mate in _search_partition(points, s, maximal_only, partner):
        if not maximal_only or is_maximal(ChordDiagram(mate)):
            count += 1
    return count


def fixed_count(
    g: int,
    s: SymmetryElement,
    *,
    maximal_only: bool = True,
    force: bool = False,
    workers: int | None = None,
) -> int:
    """Number of (maximal) diagrams with 2g chords fixed by ``s``."""
    _check_g(g)
    check_guard("genus", g, config.MAX_SYMMETRIC_GENUS, force=force)
    points = 4 * g
    if s.points != points:
        raise PreconditionError(f"symmetry acts on {s.points} points, not {points}")
    jobs = [(points, s, q, maximal_only) for q in range(1, points)]
    return sum(_run_partitions(_fixed_partition, jobs, workers))


def fixed_count_bruteforce(g: int, s: SymmetryElement, *, force: bool = False) -> int:
    """Same as fixed_count, by filtering the full diagram space with is_fixed_by."""
    _check_g(g)
    check_guard("chords", 2 * g, config.MAX_FULL_CHORDS, force=force)
    count = 0
    for mate in iter_pairings(4 * g):
        d = ChordDiagram(mate)
        if is_fixed_by(d, s) and is_maximal(d):
            count += 1
    return count


# ----- Burnside oracles -----

def rotation_fixed_counts(g: int, *, force: bool = False, workers: int | None = None) -> list[int]:
    """|Fix(r^k)| over maximal diagrams for k = 0..4g-1."""
    _check_g(g)
    check_guard("chords", 2 * g, config.MAX_FULL_CHORDS, force=force)
    points = 4 * g
    return [fixed_count(g, rotation(k, points), force=True, workers=workers) for k in range(points)]


def rotation_orbit_count(g: int, counts: Sequence[int]) -> int:
    """Burnside average of the per-rotation fixed counts."""
    return exact_div(sum(counts), 4 * g, what=f"rotation Burnside sum at g={g}")


def d_star_oracle(g: int, *, force: bool = False, workers: int | None = None) -> int:
    counts = rotation_fixed_counts(g, force=force, workers=workers)
    logger.info(f"rotation fixed counts at g={g}: {counts}")
    return rotation_orbit_count(g, counts)


def reflection_fixed_oracle(
    g: int,
    axis_type: AxisType | str,
    *,
    force: bool = False,
    workers: int | None = None,
) -> int:
    """Maximal diagrams fixed by the canonical axis of one type, via symmetric-only search."""
    _check_g(g)
    check_guard("genus", g, config.MAX_SYMMETRIC_GENUS, force=force)
    return fixed_count(g, canonical_axis(axis_type, 4 * g), force=True, workers=workers)


@dataclass(frozen=True)
class DihedralOracleResult:
    g: int
    burnside: int
    canonical: int

    @property
    def value(self) -> int:
        return self.burnside


def d_circle_oracle(g: int, *, force: bool = False, workers: int | None = None) -> DihedralOracleResult:
    """Maximal diagrams up to D_4g, by Burnside over all 8g elements and by distinct canonical forms."""
    _check_g(g)
    check_guard("genus", g, config.MAX_DIHEDRAL_GENUS, force=force)
    points = 4 * g
    fixed = [fixed_count(g, s, force=True, workers=workers) for s in dihedral_group(points)]
    burnside = exact_div(sum(fixed), 2 * points, what=f"dihedral Burnside sum at g={g}")
    canonical = len({canonical_form(d) for d in enumerate_maximal(g, force=True)})
    if burnside != canonical:
        raise VerificationMismatchError(
            f"g={g}: Burnside gives {burnside} but {canonical} distinct canonical forms",
            cells=[f"d_all[g={g}]"],
        )
    logger.info(f"dihedral classes at g={g}: {burnside}")
    return DihedralOracleResult(g=g, burnside=burnside, canonical=canonical)


def axis_fixed_counts(g: int, axis_type: AxisType | str, *, force: bool = False) -> list[int]:
    _check_g(g)
    check_guard("genus", g, config.MAX_DIHEDRAL_GENUS, force=force)
    return [fixed_count(g, s, force=True) for s in axes_of_type(axis_type, 4 * g)]


def axis_independence_check(g: int, axis_type: AxisType | str, *, force: bool = False) -> bool:
    counts = axis_fixed_counts(g, axis_type, force=force)
    logger.info(f"{AxisType(axis_type).value} axes at g={g} fix {counts}")
    return len(set(counts)) == 1
