import pytest

from maxchord import config, oracle
from maxchord.counting import catalan, d_circle, d_circle_from_fixed, d_parallel, d_star, d_vertical, mu
from maxchord.diagram import AxisType, dihedral_group, format_diagram, rotation, type_two_axis
from maxchord.errors import GuardExceededError, PreconditionError, VerificationMismatchError
from maxchord.oracle import (
    axis_independence_check,
    d_circle_oracle,
    d_star_oracle,
    enumerate_diagrams,
    enumerate_maximal,
    enumerate_symmetric,
    fixed_count,
    fixed_count_bruteforce,
    genus_tally,
    reflection_fixed_oracle,
    rotation_fixed_counts,
)


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 3), (4, 105)])
def test_enumerate_diagrams_counts(n, expected):
    assert sum(1 for _ in enumerate_diagrams(n)) == expected


def test_enumerate_diagrams_order():
    assert [format_diagram(d) for d in enumerate_diagrams(2)] == ["1 0 3 2", "2 3 0 1", "3 2 1 0"]


def test_enumerate_diagrams_has_no_duplicates():
    for n in range(1, 7):
        seen = [d.mate for d in enumerate_diagrams(n)]
        assert len(seen) == len(set(seen))


def test_genus_tally_examples():
    assert genus_tally(2).counts == {0: 2, 1: 1}
    tally = genus_tally(4)
    assert tally.counts == {0: 14, 1: 70, 2: 21}
    assert tally.total == 105


@pytest.mark.parametrize("n", range(1, 8))
def test_genus_tally_top_genus(n):
    tally = genus_tally(n)
    assert tally.counts[0] == catalan(n)
    if n % 2 == 0:
        assert tally.counts[n // 2] == mu(n // 2)
    else:
        assert max(tally.counts) == (n - 1) // 2


def test_enumerate_maximal_matches_mu():
    assert [format_diagram(d) for d in enumerate_maximal(1)] == ["2 3 0 1"]
    assert sum(1 for _ in enumerate_maximal(2)) == mu(2)
    assert sum(1 for _ in enumerate_maximal(3)) == mu(3)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_d_star_oracle(g):
    assert d_star_oracle(g) == d_star(g)


@pytest.mark.slow
def test_d_star_oracle_g4():
    assert d_star_oracle(4) == 14118


def test_rotation_fixed_counts():
    assert rotation_fixed_counts(1) == [1, 1, 1, 1]
    counts = rotation_fixed_counts(2)
    assert counts[0] == 21
    assert sum(counts) == 8 * d_star(2)


@pytest.mark.parametrize("g", range(1, 6))
def test_reflection_fixed_oracle(g):
    assert reflection_fixed_oracle(g, AxisType.TYPE_I) == d_vertical(g)
    assert reflection_fixed_oracle(g, "type2") == d_parallel(g)


@pytest.mark.slow
def test_reflection_fixed_oracle_g6():
    assert reflection_fixed_oracle(6, AxisType.TYPE_I) == 90519
    assert reflection_fixed_oracle(6, AxisType.TYPE_II) == 166377


@pytest.mark.parametrize("g, expected", [(1, 1), (2, 4), (3, 82)])
def test_d_circle_oracle(g, expected):
    result = d_circle_oracle(g)
    assert result.burnside == result.canonical == expected
    assert result.value == d_circle(g)


def test_d_circle_oracle_reports_disagreement(monkeypatch):
    monkeypatch.setattr(oracle, "enumerate_maximal", lambda g, force=False: iter(()))
    with pytest.raises(VerificationMismatchError) as info:
        d_circle_oracle(1)
    assert info.value.cells == ["d_all[g=1]"]


@pytest.mark.parametrize("g", [1, 2, 3])
def test_axes_of_one_type_fix_the_same_number(g):
    assert axis_independence_check(g, AxisType.TYPE_I)
    assert axis_independence_check(g, AxisType.TYPE_II)


@pytest.mark.parametrize("g", [1, 2])
def test_symmetric_search_agrees_with_filtering(g):
    for s in dihedral_group(4 * g):
        assert fixed_count(g, s) == fixed_count_bruteforce(g, s)


def test_fixed_count_without_maximal_filter():
    assert fixed_count(1, rotation(0, 4), maximal_only=False) == 3
    assert fixed_count(2, rotation(0, 8), maximal_only=False) == 105


def test_fixed_count_in_worker_processes():
    assert fixed_count(2, type_two_axis(8), workers=2) == 5
    assert fixed_count(3, type_two_axis(12), workers=2) == fixed_count(3, type_two_axis(12), workers=1)


def test_enumerate_symmetric_examples():
    found = [format_diagram(d) for d in enumerate_symmetric(4, type_two_axis(4), maximal_only=True)]
    assert found == ["2 3 0 1"]
    with pytest.raises(PreconditionError):
        list(enumerate_symmetric(6, type_two_axis(4)))


def test_d_circle_from_oracle_counts():
    for g in (1, 2, 3):
        rotation_sum = sum(rotation_fixed_counts(g))
        type1 = reflection_fixed_oracle(g, AxisType.TYPE_I)
        type2 = reflection_fixed_oracle(g, AxisType.TYPE_II)
        assert d_circle_from_fixed(g, rotation_sum, type1, type2) == d_circle(g)


def test_guards(monkeypatch):
    with pytest.raises(GuardExceededError, match="--force"):
        enumerate_diagrams(11)
    monkeypatch.setattr(config, "MAX_FULL_CHORDS", 2)
    with pytest.raises(GuardExceededError):
        list(enumerate_maximal(2))
    assert sum(1 for _ in enumerate_maximal(2, force=True)) == 21
    with pytest.raises(GuardExceededError):
        d_star_oracle(2)
    monkeypatch.setattr(config, "MAX_SYMMETRIC_GENUS", 1)
    with pytest.raises(GuardExceededError):
        reflection_fixed_oracle(2, AxisType.TYPE_II)
    assert reflection_fixed_oracle(2, AxisType.TYPE_II, force=True) == 5
    monkeypatch.setattr(config, "MAX_DIHEDRAL_GENUS", 1)
    with pytest.raises(GuardExceededError):
        d_circle_oracle(2)


def test_preconditions():
    with pytest.raises(PreconditionError):
        enumerate_diagrams(0)
    with pytest.raises(PreconditionError):
        fixed_count(0, rotation(0, 4))
    with pytest.raises(PreconditionError):
        fixed_count(1, rotation(0, 8))


def test_rotation_orbit_count():
    assert oracle.rotation_orbit_count(2, rotation_fixed_counts(2)) == 4
