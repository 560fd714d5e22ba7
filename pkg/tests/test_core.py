import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete_four, two_from_one, mixed_system
from transfersys.core import (
    UNIT,
    Composition,
    recursive_split,
    classify,
    complete,
    compositions,
    concat,
    concat_all,
    core,
    core_blocks,
    decompose_wrapped,
    enumerate_all,
    fixed_points,
    generate_from,
    hull,
    is_saturated,
    leq,
    make_transfer_system,
    restrict,
    saturated_from_composition,
    trivial,
    wrap,
)
from transfersys.errors import BoundsError, EmptyPoset, NotTransitive, RestrictionViolated, SizeMismatch
from transfersys.oracles import brute_force_systems, saturated_systems


def subset_filter(n):
    """Pure-Python oracle: every relation subset that validates."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    found = []
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        rel = [p for p, b in zip(pairs, bits) if b]
        try:
            found.append(make_transfer_system(n, rel))
        except (NotTransitive, RestrictionViolated):
            pass
    return found


SYSTEMS = {n: list(enumerate_all(n)) for n in range(8)}


def systems(max_n=6, min_n=0):
    return st.integers(min_n, max_n).flatmap(lambda n: st.sampled_from(SYSTEMS[n]))


# --- validation ---------------------------------------------------------------


def test_valid_system_kept_verbatim():
    o = make_transfer_system(3, {(1, 3), (1, 2)})
    assert o.relations == ((1, 2), (1, 3))
    assert o in subset_filter(3)
    assert len(subset_filter(3)) == 5


def test_restriction_violation_names_pair():
    with pytest.raises(RestrictionViolated) as err:
        make_transfer_system(3, {(1, 3)})
    assert err.value.missing == (1, 2)


def test_transitivity_violation_names_pair():
    with pytest.raises(NotTransitive) as err:
        make_transfer_system(3, {(1, 2), (2, 3)})
    assert err.value.missing == (1, 3)


def test_trivial_system():
    o = make_transfer_system(2, set())
    assert o.relations == ()
    assert o == trivial(2)


@pytest.mark.parametrize("pair", [(0, 1), (2, 2), (3, 2), (1, 4)])
def test_bounds(pair):
    with pytest.raises(BoundsError):
        make_transfer_system(3, [pair])


def test_generate_from_closes():
    assert generate_from(3, [(1, 3)]) == make_transfer_system(3, [(1, 2), (1, 3)])
    assert generate_from(3, [(1, 2), (2, 3)]) == complete(3)
    assert generate_from(4, []) == trivial(4)


def test_json_round_trip(mixed):
    assert type(mixed).from_json(mixed.to_json()) == mixed
    assert mixed.to_json()["relations"][0] == [1, 2]


# --- order --------------------------------------------------------------------


def test_leq_examples():
    a = make_transfer_system(3, [(1, 2)])
    b = make_transfer_system(3, [(1, 2), (1, 3)])
    c = make_transfer_system(3, [(2, 3)])
    assert all(leq(trivial(3), o) for o in SYSTEMS[3])
    assert leq(a, b)
    assert not leq(c, b)
    with pytest.raises(SizeMismatch):
        leq(trivial(2), trivial(3))


# --- concatenation, restriction, fixed points --------------------------------


def test_concatenation_of_small_examples():
    o = concat(complete_four(), two_from_one())
    assert o.n == 7
    assert set(o.relations) == {(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (5, 6), (5, 7)}
    assert classify(complete_four()).wrapped and classify(two_from_one()).wrapped
    assert not classify(o).wrapped


def test_concat_unit_and_shift():
    o = make_transfer_system(2, [(1, 2)])
    assert concat(UNIT, o) == o == concat(o, UNIT)
    assert concat(o, o).relations == ((1, 2), (3, 4))


def test_mixed_example_restriction_and_fixed_points(mixed):
    assert restrict(mixed, 4) == complete(4)
    assert fixed_points(mixed, 4) == make_transfer_system(3, [(2, 3)])
    assert classify(mixed).wrapped and classify(restrict(mixed, 4)).wrapped
    assert not classify(fixed_points(mixed, 4)).wrapped


def test_restrict_and_fixed_points_small():
    o = make_transfer_system(3, [(1, 2), (1, 3)])
    assert restrict(o, 3) == o
    assert restrict(o, 2) == make_transfer_system(2, [(1, 2)])
    assert fixed_points(o, 0) == o
    assert fixed_points(o, 2) == trivial(1)
    with pytest.raises(BoundsError):
        restrict(o, 4)
    with pytest.raises(BoundsError):
        fixed_points(o, -1)


@settings(max_examples=200, deadline=None)
@given(systems(4), systems(3), systems(3))
def test_concat_associative(a, b, c):
    assert concat(concat(a, b), c) == concat(a, concat(b, c))


@settings(max_examples=200, deadline=None)
@given(systems(4), systems(4))
def test_concat_valid_and_coherent(a, b):
    o = concat(a, b)
    assert make_transfer_system(o.n, o.relations) == o
    assert restrict(o, a.n) == a
    assert fixed_points(o, a.n) == b


# --- wrap, complete, classify ------------------------------------------------


def test_wrap_examples():
    assert wrap(trivial(1)) == make_transfer_system(2, [(1, 2)])
    w = wrap(trivial(2))
    assert w == make_transfer_system(3, [(1, 2), (1, 3)])
    assert fixed_points(w, 1) == trivial(2)
    assert wrap(UNIT) == trivial(1)


@pytest.mark.parametrize("n", range(7))
def test_wrap_round_trip(n):
    for o in SYSTEMS[n]:
        w = wrap(o)
        assert fixed_points(w, 1) == o
        assert all(w.has(1, j) for j in range(2, n + 2))
        assert make_transfer_system(w.n, w.relations) == w


def test_complete():
    assert complete(3).relations == ((1, 2), (1, 3), (2, 3))
    assert complete(1).relations == ()
    for n in range(11):
        assert len(complete(n).relations) == n * (n - 1) // 2


def test_classify_examples():
    flags = classify(complete(3))
    assert flags.wrapped and flags.complete and flags.saturated
    flags = classify(make_transfer_system(3, [(1, 2), (1, 3)]))
    assert flags.wrapped and not flags.complete and not flags.saturated
    with pytest.raises(EmptyPoset):
        classify(UNIT)


@pytest.mark.parametrize("n", range(1, 7))
def test_classify_implications(n):
    for o in SYSTEMS[n]:
        f = classify(o)
        if f.complete:
            assert f.wrapped and f.saturated


# --- core, hull, decompositions ----------------------------------------------


def test_core_of_mixed_example(mixed):
    expected = concat_all([complete(4), trivial(1), complete(2)])
    assert core(mixed) == expected
    assert core_blocks(mixed) == Composition((4, 1, 2))


def test_core_and_hull_examples():
    o = make_transfer_system(3, [(1, 2), (1, 3)])
    assert core(o) == make_transfer_system(3, [(1, 2)])
    assert hull(o) == complete(3)
    assert hull(trivial(4)) == trivial(4)


@pytest.mark.parametrize("n", range(1, 7))
def test_core_hull_fixed_on_saturated(n):
    for s in saturated_systems(n):
        assert is_saturated(s)
        assert core(s) == s
        assert hull(s) == s


@pytest.mark.parametrize("n", range(1, 7))
def test_saturation_characterisations_agree(n):
    for o in SYSTEMS[n]:
        via_blocks = all(classify(wrap(p)).complete for p in decompose_wrapped(o))
        assert classify(o).saturated == via_blocks == (o in saturated_systems(n))


def test_decompose_wrapped_examples():
    o = make_transfer_system(4, [(1, 2), (3, 4)])
    assert decompose_wrapped(o) == [trivial(1), trivial(1)]
    assert decompose_wrapped(trivial(3)) == [UNIT, UNIT, UNIT]
    joined = concat(complete_four(), two_from_one())
    pieces = decompose_wrapped(joined)
    assert concat_all(wrap(p) for p in pieces) == joined
    assert [wrap(p) for p in pieces] == [complete_four(), two_from_one()]
    with pytest.raises(EmptyPoset):
        decompose_wrapped(UNIT)


@pytest.mark.parametrize("n", range(1, 8))
def test_decompositions_reassemble(n):
    for o in SYSTEMS[n]:
        assert concat_all(wrap(p) for p in decompose_wrapped(o)) == o
        left, inner = recursive_split(o)
        assert concat(left, wrap(inner)) == o


def test_saturated_from_composition():
    assert saturated_from_composition(Composition((2, 1))) == make_transfer_system(3, [(1, 2)])
    assert saturated_from_composition((3,)) == complete(3)


def test_compositions_lex_order():
    assert [c.parts for c in compositions(3)] == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert sum(1 for _ in compositions(10)) == 2 ** 9
    assert Composition((2, 1, 3)).partial_sums == (2, 3, 6)
    with pytest.raises(ValueError):
        Composition((1, 0))


# --- enumeration --------------------------------------------------------------


def test_enumerate_small():
    expected = {
        trivial(3),
        make_transfer_system(3, [(1, 2)]),
        make_transfer_system(3, [(2, 3)]),
        make_transfer_system(3, [(1, 2), (1, 3)]),
        complete(3),
    }
    assert set(SYSTEMS[3]) == expected == set(subset_filter(3))
    assert SYSTEMS[0] == [UNIT]
    assert len(SYSTEMS[4]) == 14
    assert len(SYSTEMS[7]) == 429


def test_enumeration_order_is_recursive_split():
    # split point 0 first: wrapped systems, then the rest
    assert SYSTEMS[2] == [complete(2), trivial(2)]
    assert SYSTEMS[3] == [
        complete(3),
        make_transfer_system(3, [(1, 2), (1, 3)]),
        make_transfer_system(3, [(2, 3)]),
        make_transfer_system(3, [(1, 2)]),
        trivial(3),
    ]


@pytest.mark.parametrize("n", range(0, 7))
def test_enumeration_matches_subset_filter(n):
    assert set(SYSTEMS[n]) == set(brute_force_systems(n))
    assert len(SYSTEMS[n]) == len(set(SYSTEMS[n]))
    if n <= 5:
        assert set(SYSTEMS[n]) == set(subset_filter(n))
