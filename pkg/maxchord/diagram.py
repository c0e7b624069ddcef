"""Chord diagrams, face walks, genus and the dihedral action on the circle.

Points are labelled 0..2n-1 clockwise. A diagram is stored as its mate
sequence: ``mate[i]`` is the other end of the chord at point ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .errors import InvalidInputError, InvariantViolationError, PreconditionError

Chord = tuple[int, int]


@dataclass(frozen=True)
class ChordDiagram:
    mate: tuple[int, ...]

    def __post_init__(self) -> None:
        mate = tuple(self.mate)
        object.__setattr__(self, "mate", mate)
        size = len(mate)
        if size % 2:
            raise InvalidInputError(f"odd point count {size}")
        for i, j in enumerate(mate):
            if not 0 <= j < size:
                raise InvalidInputError(f"point {i} is paired with {j}, outside 0..{size - 1}")
            if j == i:
                raise InvalidInputError(f"point {i} is paired with itself")
            if mate[j] != i:
                raise InvalidInputError(f"point {i} -> {j} but point {j} -> {mate[j]}")

    @property
    def n(self) -> int:
        return len(self.mate) // 2

    @property
    def points(self) -> int:
        return len(self.mate)

    def chords(self) -> list[Chord]:
        return [(i, j) for i, j in enumerate(self.mate) if i < j]

    def __str__(self) -> str:
        return format_diagram(self)


class SymmetryKind(str, Enum):
    ROTATION = "rotation"
    POINT_REFLECTION = "reflection-through-points"
    ARC_REFLECTION = "reflection-through-arcs"


class AxisType(str, Enum):
    TYPE_I = "type1"
    TYPE_II = "type2"


@dataclass(frozen=True)
class SymmetryElement:
    """A rotation or reflection of a circle with ``points`` evenly spaced points.

    rotation(k):                    i -> i + k
    reflection through point p:     i -> 2p - i
    reflection through arc (p,p+1): i -> 2p + 1 - i

    all taken mod ``points``. The parameter is normalised so that equal
    maps compare equal.
    """

    kind: SymmetryKind
    parameter: int
    points: int

    def __post_init__(self) -> None:
        if self.points < 2 or self.points % 2:
            raise InvalidInputError(f"a symmetry acts on a positive even number of points, got {self.points}")
        object.__setattr__(self, "kind", SymmetryKind(self.kind))
        modulus = self.points if self.kind is SymmetryKind.ROTATION else self.points // 2
        object.__setattr__(self, "parameter", self.parameter % modulus)

    @property
    def sign(self) -> int:
        return 1 if self.kind is SymmetryKind.ROTATION else -1

    @property
    def offset(self) -> int:
        if self.kind is SymmetryKind.ROTATION:
            return self.parameter
        if self.kind is SymmetryKind.POINT_REFLECTION:
            return 2 * self.parameter
        return 2 * self.parameter + 1

    @property
    def is_reflection(self) -> bool:
        return self.kind is not SymmetryKind.ROTATION

    def __call__(self, i: int) -> int:
        return (self.sign * i + self.offset) % self.points

    def as_permutation(self) -> tuple[int, ...]:
        return tuple(self(i) for i in range(self.points))


def affine_element(sign: int, offset: int, points: int) -> SymmetryElement:
    """Build the element i -> sign*i + offset (mod points)."""
    offset %= points
    if sign == 1:
        return SymmetryElement(SymmetryKind.ROTATION, offset, points)
    if offset % 2 == 0:
        return SymmetryElement(SymmetryKind.POINT_REFLECTION, offset // 2, points)
    return SymmetryElement(SymmetryKind.ARC_REFLECTION, (offset - 1) // 2, points)


def rotation(k: int, points: int) -> SymmetryElement:
    return SymmetryElement(SymmetryKind.ROTATION, k, points)


def compose(s: SymmetryElement, t: SymmetryElement) -> SymmetryElement:
    """Return s after t, i.e. i -> s(t(i))."""
    if s.points != t.points:
        raise PreconditionError(f"cannot compose elements on {s.points} and {t.points} points")
    return affine_element(s.sign * t.sign, s.sign * t.offset + s.offset, s.points)


def inverse(s: SymmetryElement) -> SymmetryElement:
    if s.is_reflection:
        return s
    return rotation(-s.parameter, s.points)


def dihedral_group(points: int) -> list[SymmetryElement]:
    """All 2*points elements: rotations k = 0..points-1, then reflections i -> c - i."""
    group = [rotation(k, points) for k in range(points)]
    group.extend(affine_element(-1, c, points) for c in range(points))
    return group


def type_one_axis(points: int) -> SymmetryElement:
    """sigma(i) = -i: the axis through points 0 and points/2."""
    return SymmetryElement(SymmetryKind.POINT_REFLECTION, 0, points)


def type_two_axis(points: int) -> SymmetryElement:
    """rho(i) = points - 1 - i: the axis through the arcs (points-1, 0) and (points/2-1, points/2)."""
    return affine_element(-1, points - 1, points)


def canonical_axis(axis_type: AxisType | str, points: int) -> SymmetryElement:
    if AxisType(axis_type) is AxisType.TYPE_I:
        return type_one_axis(points)
    return type_two_axis(points)


def axes_of_type(axis_type: AxisType | str, points: int) -> list[SymmetryElement]:
    kind = SymmetryKind.POINT_REFLECTION if AxisType(axis_type) is AxisType.TYPE_I else SymmetryKind.ARC_REFLECTION
    return [SymmetryElement(kind, p, points) for p in range(points // 2)]


@dataclass(frozen=True)
class FaceWalkDecomposition:
    walks: tuple[tuple[int, ...], ...]
    count: int

    def lengths(self) -> list[int]:
        return [len(w) for w in self.walks]


@dataclass(frozen=True)
class AxisChordClasses:
    vertical: list[Chord] = field(default_factory=list)
    horizontal: list[Chord] = field(default_factory=list)
    mirror_orbits: list[tuple[Chord, Chord]] = field(default_factory=list)


def _norm(a: int, b: int) -> Chord:
    return (a, b) if a < b else (b, a)


def new_diagram(pairs: Iterable[Sequence[int]]) -> ChordDiagram:
    pairs = [tuple(p) for p in pairs]
    size = 2 * len(pairs)
    mate = [-1] * size
    for pair in pairs:
        if len(pair) != 2:
            raise InvalidInputError(f"chord {pair!r} does not have two ends")
        a, b = pair
        if a == b:
            raise InvalidInputError(f"point {a} is paired with itself")
        for x in (a, b):
            if not 0 <= x < size:
                raise InvalidInputError(f"point {x} outside 0..{size - 1}")
            if mate[x] != -1:
                raise InvalidInputError(f"point {x} appears in more than one chord")
        mate[a] = b
        mate[b] = a
    return ChordDiagram(tuple(mate))


def parse_diagram(text: str) -> ChordDiagram:
    """Parse ``2 3 0 1`` (mate sequence) or ``0-2 1-3`` (pair list)."""
    tokens = text.split()
    if any("-" in t for t in tokens):
        pairs = []
        for idx, token in enumerate(tokens):
            parts = token.split("-")
            if len(parts) != 2 or not all(p.isdecimal() for p in parts):
                raise InvalidInputError(f"token {idx} ({token!r}) is not a pair like 0-2")
            pairs.append((int(parts[0]), int(parts[1])))
        return new_diagram(pairs)
    mate = []
    for idx, token in enumerate(tokens):
        if not token.isdecimal():
            raise InvalidInputError(f"token {idx} ({token!r}) is not a point index")
        mate.append(int(token))
    return ChordDiagram(tuple(mate))


def format_diagram(d: ChordDiagram) -> str:
    return " ".join(str(j) for j in d.mate)


def face_walks(d: ChordDiagram) -> FaceWalkDecomposition:
    """Cycles of i -> mate[i] + 1: cross a chord, then follow the next arc clockwise."""
    size = d.points
    if size == 0:
        return FaceWalkDecomposition(walks=(), count=1)
    seen = [False] * size
    walks = []
    for start in range(size):
        if seen[start]:
            continue
        walk = []
        i = start
        while not seen[i]:
            seen[i] = True
            walk.append(i)
            i = (d.mate[i] + 1) % size
        walks.append(tuple(walk))
    return FaceWalkDecomposition(walks=tuple(walks), count=len(walks))


def face_count(d: ChordDiagram) -> int:
    return face_walks(d).count


def genus(d: ChordDiagram) -> int:
    excess = d.n + 1 - face_count(d)
    if excess < 0 or excess % 2:
        raise InvariantViolationError(f"n + 1 - F = {excess} for {format_diagram(d)}")
    return excess // 2


def is_maximal(d: ChordDiagram) -> bool:
    return face_count(d) == 1


def _check_size(d: ChordDiagram, s: SymmetryElement) -> None:
    if d.points != s.points:
        raise PreconditionError(f"diagram has {d.points} points but the symmetry acts on {s.points}")


def apply_symmetry(d: ChordDiagram, s: SymmetryElement) -> ChordDiagram:
    _check_size(d, s)
    mate = [0] * d.points
    for i, j in enumerate(d.mate):
        mate[s(i)] = s(j)
    return ChordDiagram(tuple(mate))


def is_fixed_by(d: ChordDiagram, s: SymmetryElement) -> bool:
    _check_size(d, s)
    return all(d.mate[s(i)] == s(j) for i, j in enumerate(d.mate))


def axis_chord_classes(d: ChordDiagram, s: SymmetryElement) -> AxisChordClasses:
    if not s.is_reflection:
        raise PreconditionError(f"{s.kind.value} is not a reflection")
    if not is_fixed_by(d, s):
        raise PreconditionError(f"{format_diagram(d)} is not fixed by {s.kind.value} {s.parameter}")
    classes = AxisChordClasses()
    done: set[Chord] = set()
    for a, b in d.chords():
        if (a, b) in done:
            continue
        if s(a) == a and s(b) == b:
            classes.vertical.append((a, b))
        elif s(a) == b:
            classes.horizontal.append((a, b))
        else:
            image = _norm(s(a), s(b))
            classes.mirror_orbits.append(((a, b), image))
            done.add(image)
    return classes


def canonical_form(d: ChordDiagram) -> ChordDiagram:
    """Lexicographically least mate sequence over the 4n images under D_2n."""
    if d.points == 0:
        return d
    best = min(apply_symmetry(d, s).mate for s in dihedral_group(d.points))
    return ChordDiagram(best)


def crosses(c1: Chord, c2: Chord) -> bool:
    """Chords cross iff exactly one end of c2 lies strictly between the ends of c1."""
    a, b = _norm(*c1)
    c, d = c2
    return (a < c < b) != (a < d < b)
