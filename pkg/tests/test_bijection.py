import pytest

from maxchord.bijection import (
    SignedMatching,
    all_signed_matchings,
    format_matching,
    from_quotient,
    glue,
    insert_type1,
    is_unicellular_map,
    mirror_chords_cross,
    orientable_split,
    parse_matching,
    signed_matching,
    strip_type1,
    to_quotient,
    unicellular_matchings,
)
from maxchord.counting import d_parallel, double_factorial
from maxchord.diagram import (
    ChordDiagram,
    axis_chord_classes,
    is_fixed_by,
    is_maximal,
    new_diagram,
    type_one_axis,
    type_two_axis,
)
from maxchord.errors import InvalidInputError, InvariantViolationError, PreconditionError
from maxchord.oracle import enumerate_symmetric

CROSSING = ChordDiagram((2, 3, 0, 1))


def type_two_maximal(g):
    return list(enumerate_symmetric(4 * g, type_two_axis(4 * g), maximal_only=True))


def type_one_maximal(g):
    return list(enumerate_symmetric(4 * g, type_one_axis(4 * g), maximal_only=True))


def test_glue_examples():
    twisted = glue(parse_matching("1; 0-1:1"))
    assert (twisted.vertex_count, twisted.face_count, twisted.orientable, twisted.euler_genus) == (1, 1, False, 1)
    flat = glue(parse_matching("1; 0-1:0"))
    assert flat.vertex_count == 2
    assert flat.euler_genus == 0


def test_glue_g2_has_five_unicellular_of_twelve():
    matchings = list(all_signed_matchings(2))
    assert len(matchings) == 12
    assert sum(is_unicellular_map(sm) for sm in matchings) == 5


def test_orientable_torus_at_g2():
    report = glue(parse_matching("2; 0-2:0 1-3:0"))
    assert report.vertex_count == 1
    assert report.orientable and report.euler_genus == 2


def test_is_unicellular_examples():
    assert is_unicellular_map(parse_matching("1; 0-1:1"))
    assert not is_unicellular_map(parse_matching("1; 0-1:0"))
    assert is_unicellular_map(SignedMatching(0, (), ()))


def test_euler_relation_holds_everywhere():
    for g in range(1, 4):
        for sm in all_signed_matchings(g):
            report = glue(sm)
            assert report.face_count == 1
            assert report.vertex_count - g + report.face_count == 2 - report.euler_genus
            assert report.euler_genus >= 0
            if report.orientable:
                assert report.euler_genus % 2 == 0


def test_to_quotient_examples():
    assert format_matching(to_quotient(CROSSING)) == "1; 0-1:1"
    assert glue(to_quotient(CROSSING)).vertex_count == 1
    assert to_quotient(ChordDiagram(())) == SignedMatching(0, (), ())


def test_to_quotient_preconditions():
    with pytest.raises(PreconditionError, match="not maximal"):
        to_quotient(new_diagram([(0, 1), (2, 3)]))
    # maximal but not fixed by the type II axis
    d = new_diagram([(0, 2), (1, 5), (3, 6), (4, 7)])
    assert is_maximal(d) and not is_fixed_by(d, type_two_axis(8))
    with pytest.raises(PreconditionError, match="type II"):
        to_quotient(d)


def test_from_quotient_examples():
    assert from_quotient(parse_matching("1; 0-1:1")) == new_diagram([(0, 2), (1, 3)])
    with pytest.raises(PreconditionError, match="not unicellular"):
        from_quotient(parse_matching("1; 0-1:0"))


@pytest.mark.parametrize("g", range(1, 6))
def test_fold_is_a_bijection_onto_unicellular_matchings(g):
    diagrams = type_two_maximal(g)
    folded = [to_quotient(d) for d in diagrams]
    unicellular = set(unicellular_matchings(g))
    assert len(diagrams) == d_parallel(g)
    assert len(set(folded)) == len(diagrams)
    assert set(folded) == unicellular
    for d, sm in zip(diagrams, folded):
        assert from_quotient(sm) == d
    for sm in unicellular:
        assert to_quotient(from_quotient(sm)) == sm


@pytest.mark.slow
def test_unicellular_count_g6():
    assert sum(1 for _ in unicellular_matchings(6)) == d_parallel(6)


def test_all_signed_matchings_count():
    for g in range(1, 5):
        assert sum(1 for _ in all_signed_matchings(g)) == double_factorial(2 * g - 1) * 2**g


@pytest.mark.parametrize("g", range(1, 6))
def test_no_axis_chords_in_type_two(g):
    rho = type_two_axis(4 * g)
    for d in type_two_maximal(g):
        classes = axis_chord_classes(d, rho)
        assert classes.horizontal == [] and classes.vertical == []


@pytest.mark.parametrize("g", range(1, 6))
def test_type_one_has_one_vertical_and_one_horizontal(g):
    sigma = type_one_axis(4 * g)
    for d in type_one_maximal(g):
        classes = axis_chord_classes(d, sigma)
        assert len(classes.vertical) == 1 and len(classes.horizontal) == 1
        rest, vertical, horizontal = strip_type1(d)
        assert vertical == (0, 2 * g)
        assert horizontal[0] + horizontal[1] == 4 * g
        assert rest.n == 2 * (g - 1)
        assert is_maximal(rest)
        if rest.n:
            assert is_fixed_by(rest, type_two_axis(rest.points))


def test_strip_type1_base_case():
    rest, vertical, horizontal = strip_type1(CROSSING)
    assert rest == ChordDiagram(())
    assert vertical == (0, 2) and horizontal == (1, 3)


def test_strip_type1_g2_lands_on_the_unique_g1_diagram():
    stripped = {strip_type1(d)[0] for d in type_one_maximal(2)}
    assert len(type_one_maximal(2)) == 3
    assert stripped == {CROSSING}


def test_strip_type1_preconditions():
    with pytest.raises(PreconditionError):
        strip_type1(new_diagram([(0, 1), (2, 3)]))
    with pytest.raises(PreconditionError):
        strip_type1(new_diagram([(0, 2), (1, 5), (3, 6), (4, 7)]))


@pytest.mark.parametrize("g", range(1, 6))
def test_type_one_count_is_multiplier_times_type_two(g):
    assert len(type_one_maximal(g)) == (2 * g - 1) * d_parallel(g - 1)


@pytest.mark.slow
def test_type_one_count_g6():
    assert sum(1 for _ in enumerate_symmetric(24, type_one_axis(24), maximal_only=True)) == 11 * d_parallel(5)


@pytest.mark.parametrize("g", range(1, 5))
def test_insert_then_strip_round_trip(g):
    smaller = type_two_maximal(g - 1) if g > 1 else [ChordDiagram(())]
    produced = set()
    for d in smaller:
        for slot in range(1, 2 * g):
            bigger = insert_type1(d, slot)
            assert is_maximal(bigger)
            assert is_fixed_by(bigger, type_one_axis(4 * g))
            assert strip_type1(bigger) == (d, (0, 2 * g), (slot, 4 * g - slot))
            produced.add(bigger)
    assert produced == set(type_one_maximal(g))


def test_insert_type1_rejects_bad_slot():
    with pytest.raises(PreconditionError):
        insert_type1(CROSSING, 0)
    with pytest.raises(PreconditionError):
        insert_type1(CROSSING, 4)


@pytest.mark.parametrize("g", range(1, 5))
def test_twist_bit_matches_mirror_crossing(g):
    for d in type_two_maximal(g):
        sm = to_quotient(d)
        twists = [t for _, _, t in sm.pairs()]
        assert sorted(twists) == sorted(int(c) for c in mirror_chords_cross(d))
        if sm.orientable:
            assert not any(mirror_chords_cross(d))


def test_orientable_split():
    assert orientable_split(1) == (0, 1)
    assert orientable_split(2) == (1, 4)
    for g in range(1, 6):
        orientable, non_orientable = orientable_split(g)
        assert orientable + non_orientable == d_parallel(g)
        if g % 2:
            assert orientable == 0


def test_matching_text_format():
    sm = signed_matching(2, [(1, 3, 0), (0, 2, 1)])
    assert format_matching(sm) == "2; 0-2:1 1-3:0"
    assert parse_matching("2; 0-2:1 1-3:0") == sm
    assert format_matching(SignedMatching(0, (), ())) == "0;"
    assert parse_matching("0;") == SignedMatching(0, (), ())


@pytest.mark.parametrize(
    "text",
    ["1 0-1:1", "1; 0-1", "1; 0-1:2", "2; 0-1:1", "1; 0-0:1", "2; 0-1:1 1-2:0", "1; 0-2:1", "1; 0-¹:1", "¹; 0-1:1"],
)
def test_matching_text_rejects(text):
    with pytest.raises(InvalidInputError):
        parse_matching(text)


def test_signed_matching_validation():
    with pytest.raises(InvalidInputError, match="twist"):
        SignedMatching(1, (1, 0), (0, 1))
    with pytest.raises(InvalidInputError, match="partner"):
        SignedMatching(1, (0, 1), (0, 0))


def test_to_quotient_surfaces_axis_chords_as_bug(monkeypatch):
    from maxchord import bijection
    from maxchord.diagram import AxisChordClasses

    monkeypatch.setattr(
        bijection,
        "axis_chord_classes",
        lambda d, s: AxisChordClasses(horizontal=[(0, 3)], mirror_orbits=[]),
    )
    with pytest.raises(InvariantViolationError):
        to_quotient(CROSSING)


def test_orientable_split_guard(monkeypatch):
    from maxchord import config
    from maxchord.errors import GuardExceededError

    monkeypatch.setattr(config, "MAX_SPLIT_GENUS", 1)
    with pytest.raises(GuardExceededError):
        orientable_split(2)
    assert orientable_split(2, force=True) == (1, 4)
    with pytest.raises(PreconditionError):
        orientable_split(-1)
