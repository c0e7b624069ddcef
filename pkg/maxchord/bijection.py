"""Type II maximal diagrams <-> rooted one-vertex one-face maps.

A type II diagram with 2g chords is folded along its axis into a (2g+1)-gon:
sides 0..2g-1 glued in pairs, each pair with or without a twist, plus one
boundary side (the axis). Keeping the side labels roots the map.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator

from networkx.utils import UnionFind

from . import config
from .config import check_guard
from .diagram import (
    Chord,
    ChordDiagram,
    axis_chord_classes,
    crosses,
    format_diagram,
    is_fixed_by,
    is_maximal,
    new_diagram,
    type_one_axis,
    type_two_axis,
)
from .errors import InvalidInputError, InvariantViolationError, PreconditionError
from .oracle import iter_pairings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignedMatching:
    g: int
    mate: tuple[int, ...]
    twist: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "mate", tuple(self.mate))
        object.__setattr__(self, "twist", tuple(self.twist))
        size = 2 * self.g
        if self.g < 0:
            raise InvalidInputError(f"g must be non-negative, got {self.g}")
        if len(self.mate) != size or len(self.twist) != size:
            raise InvalidInputError(f"a matching with g={self.g} needs {size} sides")
        for i, j in enumerate(self.mate):
            if not 0 <= j < size or j == i or self.mate[j] != i:
                raise InvalidInputError(f"side {i} has invalid partner {j}")
            if self.twist[i] not in (0, 1):
                raise InvalidInputError(f"side {i} has twist {self.twist[i]}, expected 0 or 1")
            if self.twist[i] != self.twist[j]:
                raise InvalidInputError(f"sides {i} and {j} disagree on the twist bit")

    def pairs(self) -> list[tuple[int, int, int]]:
        return [(u, v, self.twist[u]) for u, v in enumerate(self.mate) if u < v]

    @property
    def orientable(self) -> bool:
        return not any(self.twist)

    def __str__(self) -> str:
        return format_matching(self)


@dataclass(frozen=True)
class GluingReport:
    vertex_count: int
    face_count: int
    orientable: bool
    euler_genus: int


def signed_matching(g: int, pairs: list[tuple[int, int, int]]) -> SignedMatching:
    size = 2 * g
    mate = [-1] * size
    twist = [0] * size
    for u, v, t in pairs:
        for x in (u, v):
            if not 0 <= x < size:
                raise InvalidInputError(f"side {x} outside 0..{size - 1}")
            if mate[x] != -1:
                raise InvalidInputError(f"side {x} appears in more than one pair")
        if u == v:
            raise InvalidInputError(f"side {u} is paired with itself")
        mate[u], mate[v] = v, u
        twist[u] = twist[v] = t
    for i, j in enumerate(mate):
        if j == -1:
            raise InvalidInputError(f"side {i} is not paired")
    return SignedMatching(g, tuple(mate), tuple(twist))


def parse_matching(text: str) -> SignedMatching:
    """Parse ``g; u-v:t ...``, e.g. ``1; 0-1:1``."""
    head, sep, body = text.partition(";")
    if not sep or not head.strip().isdecimal():
        raise InvalidInputError(f"expected 'g; u-v:t ...', got {text!r}")
    g = int(head)
    pairs = []
    for idx, token in enumerate(body.split()):
        ends, colon, bit = token.partition(":")
        u, dash, v = ends.partition("-")
        if not (colon and dash and u.isdecimal() and v.isdecimal() and bit in ("0", "1")):
            raise InvalidInputError(f"pair {idx} ({token!r}) is not like 0-1:1")
        pairs.append((int(u), int(v), int(bit)))
    if len(pairs) != g:
        raise InvalidInputError(f"g={g} needs {g} pairs, got {len(pairs)}")
    return signed_matching(g, pairs)


def format_matching(sm: SignedMatching) -> str:
    body = " ".join(f"{u}-{v}:{t}" for u, v, t in sm.pairs())
    return f"{sm.g}; {body}" if body else f"{sm.g};"


def glue(sm: SignedMatching) -> GluingReport:
    """Glue the (2g+1)-gon and contract its boundary side to a point.

    Corner c sits between sides c-1 and c; side s runs from corner s to
    corner s+1 (mod 2g+1). Side 2g is the boundary.
    """
    corners = 2 * sm.g + 1
    boundary = 2 * sm.g
    uf = UnionFind(range(corners))

    def tail(s: int) -> int:
        return s

    def head(s: int) -> int:
        return (s + 1) % corners

    for u, v, t in sm.pairs():
        if t:
            uf.union(tail(u), tail(v))
            uf.union(head(u), head(v))
        else:
            uf.union(head(u), tail(v))
            uf.union(tail(u), head(v))
    uf.union(tail(boundary), head(boundary))

    vertices = len(list(uf.to_sets()))
    faces = 1
    return GluingReport(
        vertex_count=vertices,
        face_count=faces,
        orientable=sm.orientable,
        euler_genus=2 - vertices + sm.g - faces,
    )


def is_unicellular_map(sm: SignedMatching) -> bool:
    return glue(sm).vertex_count == 1


def _quotient_side(i: int, g: int) -> int:
    return i if i < 2 * g else 4 * g - 1 - i


def to_quotient(d: ChordDiagram) -> SignedMatching:
    """Fold a type II maximal diagram along rho(i) = 4g-1-i."""
    if not is_maximal(d):
        raise PreconditionError(f"{format_diagram(d)} is not maximal")
    g = d.n // 2
    if g == 0:
        return SignedMatching(0, (), ())
    rho = type_two_axis(d.points)
    if not is_fixed_by(d, rho):
        raise PreconditionError(f"{format_diagram(d)} is not fixed by the type II axis")
    classes = axis_chord_classes(d, rho)
    if classes.horizontal or classes.vertical:
        raise InvariantViolationError(
            f"type II maximal diagram {format_diagram(d)} has horizontal {classes.horizontal} "
            f"and vertical {classes.vertical} chords"
        )
    pairs = []
    for (a, b), _mirror in classes.mirror_orbits:
        twist = int((a < 2 * g) != (b < 2 * g))
        u, v = sorted((_quotient_side(a, g), _quotient_side(b, g)))
        pairs.append((u, v, twist))
    return signed_matching(g, pairs)


def from_quotient(sm: SignedMatching) -> ChordDiagram:
    """Unfold a rooted one-vertex one-face map into its type II maximal diagram."""
    report = glue(sm)
    if report.vertex_count != 1:
        raise PreconditionError(
            f"{format_matching(sm)} is not unicellular: it glues to {report.vertex_count} vertices, not 1"
        )
    points = 4 * sm.g

    def rho(i: int) -> int:
        return points - 1 - i

    chords: list[Chord] = []
    for u, v, t in sm.pairs():
        if t:
            chords.extend([(u, rho(v)), (v, rho(u))])
        else:
            chords.extend([(u, v), (rho(u), rho(v))])
    return new_diagram(chords)


def mirror_chords_cross(d: ChordDiagram) -> list[bool]:
    """For each mirror orbit under the type II axis, whether the two chords cross."""
    classes = axis_chord_classes(d, type_two_axis(d.points))
    return [crosses(c, image) for c, image in classes.mirror_orbits]


def strip_type1(d: ChordDiagram) -> tuple[ChordDiagram, Chord, Chord]:
    """Remove the vertical and the horizontal chord of a type I maximal diagram.

    The remaining points keep their circular order and are relabelled from
    point 1 onwards, which puts the induced axis at the canonical type II place.
    """
    if not is_maximal(d) or d.n == 0:
        raise PreconditionError(f"{format_diagram(d)} is not a non-empty maximal diagram")
    sigma = type_one_axis(d.points)
    if not is_fixed_by(d, sigma):
        raise PreconditionError(f"{format_diagram(d)} is not fixed by the type I axis")
    classes = axis_chord_classes(d, sigma)
    if len(classes.vertical) != 1 or len(classes.horizontal) != 1:
        raise InvariantViolationError(
            f"type I maximal diagram {format_diagram(d)} has vertical {classes.vertical} "
            f"and horizontal {classes.horizontal} chords"
        )
    vertical, horizontal = classes.vertical[0], classes.horizontal[0]
    removed = set(vertical) | set(horizontal)
    kept = [p for p in range(1, d.points) if p not in removed]
    label = {p: r for r, p in enumerate(kept)}
    chords = [(label[a], label[b]) for a, b in d.chords() if a not in removed]
    return new_diagram(chords), vertical, horizontal


def insert_type1(d: ChordDiagram, slot: int) -> ChordDiagram:
    """Insert a vertical chord {0, 2g} and a horizontal chord {slot, 4g-slot}.

    ``d`` is a type II maximal diagram with 2(g-1) chords; ``slot`` is one of
    the 2g-1 positions 1..2g-1.
    """
    if not is_maximal(d):
        raise PreconditionError(f"{format_diagram(d)} is not maximal")
    if d.n and not is_fixed_by(d, type_two_axis(d.points)):
        raise PreconditionError(f"{format_diagram(d)} is not fixed by the type II axis")
    g = d.n // 2 + 1
    points = 4 * g
    if not 1 <= slot <= 2 * g - 1:
        raise PreconditionError(f"slot must be in 1..{2 * g - 1}, got {slot}")
    vertical = (0, 2 * g)
    horizontal = (slot, points - slot)
    taken = set(vertical) | set(horizontal)
    positions = [p for p in range(1, points) if p not in taken]
    chords = [(positions[a], positions[b]) for a, b in d.chords()]
    chords.extend([vertical, horizontal])
    return new_diagram(chords)


def all_signed_matchings(g: int) -> Iterator[SignedMatching]:
    """Every matching of 2g sides with every twist assignment, low pair's bit first."""
    for mate in iter_pairings(2 * g):
        base = SignedMatching(g, mate, (0,) * (2 * g))
        pairs = base.pairs()
        for bits in range(2**g):
            twisted = [(u, v, (bits >> j) & 1) for j, (u, v, _) in enumerate(pairs)]
            yield signed_matching(g, twisted)


def unicellular_matchings(g: int) -> Iterator[SignedMatching]:
    return (sm for sm in all_signed_matchings(g) if is_unicellular_map(sm))


def orientable_split(g: int, *, force: bool = False) -> tuple[int, int]:
    """(orientable, non-orientable) counts of rooted one-vertex one-face maps with g edges."""
    if g < 0:
        raise PreconditionError(f"g must be non-negative, got {g}")
    check_guard("genus", g, config.MAX_SPLIT_GENUS, force=force)
    orientable = non_orientable = 0
    for sm in unicellular_matchings(g):
        if sm.orientable:
            orientable += 1
        else:
            non_orientable += 1
    logger.info(f"g={g}: {orientable} orientable and {non_orientable} non-orientable unicellular maps")
    return orientable, non_orientable
