from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzcyl import (
    EMPTY_SET,
    WHOLE_J,
    Interval,
    IntervalSet,
    iv_complement_in_J,
    iv_contains,
    iv_intersect,
    iv_subset,
    iv_supremum,
    iv_union,
    make_interval,
    make_unit_interval,
    singleton,
)
from fuzzcyl.intervals import canonical, is_open_in_unit

F = Fraction


def iset(*descriptions):
    out = EMPTY_SET
    for lo, hi, lc, hc in descriptions:
        out = iv_union(out, make_interval(lo, hi, lc, hc))
    return out


def test_make_interval_degenerate_open_is_empty():
    assert make_interval(F(1, 3), F(1, 3), False, False) == EMPTY_SET


def test_make_interval_basic():
    s = make_interval(0, F(1, 3), True, False)
    assert s.parts == (Interval(F(0), F(1, 3), True, False),)


def test_make_interval_clips_closed_one():
    s = make_interval(F(1, 3), 1, False, True)
    assert s.parts == (Interval(F(1, 3), F(1), False, False),)


def test_make_unit_interval_keeps_closed_one():
    s = make_unit_interval(F(1, 2), 1, False, True)
    assert s.parts == (Interval(F(1, 2), F(1), False, True),)


def test_union_adjacent_merge():
    a = make_interval(0, F(1, 3), True, False)
    b = make_interval(F(1, 3), 1, True, False)
    assert iv_union(a, b) == WHOLE_J


def test_union_identity():
    a = iset((0, F(1, 4), True, False), (F(1, 2), F(3, 4), False, False))
    assert iv_union(EMPTY_SET, a) == a


def test_union_disjoint_preserved():
    a = make_interval(0, F(1, 4), True, False)
    b = make_interval(F(1, 2), F(3, 4), False, False)
    assert len(iv_union(a, b).parts) == 2


def test_intersect_endpoints():
    a = make_interval(0, F(1, 2), True, False)
    b = make_interval(F(1, 3), 1, True, False)
    assert iv_intersect(a, b) == make_interval(F(1, 3), F(1, 2), True, False)


def test_intersect_touching_open():
    a = make_interval(0, F(1, 2), True, False)
    b = make_interval(F(1, 2), 1, False, False)
    assert iv_intersect(a, b) == EMPTY_SET


def test_intersect_mixed_flags_with_grid_oracle():
    a = make_interval(0, F(5, 12), True, False)
    b = make_interval(F(1, 3), 1, False, False)
    got = iv_intersect(a, b)
    assert got == make_interval(F(1, 3), F(5, 12), False, False)
    for k in range(120):
        q = F(k, 120)
        brute = (0 <= q < F(5, 12)) and (F(1, 3) < q < 1)
        assert iv_contains(got, q) == brute


def test_complement_examples():
    assert iv_complement_in_J(make_interval(0, F(1, 3), True, False)) == \
        make_interval(F(1, 3), 1, True, False)
    assert iv_complement_in_J(EMPTY_SET) == WHOLE_J
    got = iv_complement_in_J(make_interval(F(1, 3), 1, False, False))
    assert got.parts == (Interval(F(0), F(1, 3), True, True),)


def test_contains_flags():
    assert not iv_contains(make_interval(0, F(1, 3), True, False), F(1, 3))
    closed = IntervalSet((Interval(F(0), F(1, 3), True, True),))
    assert iv_contains(closed, F(1, 3))
    assert not iv_contains(EMPTY_SET, 0)
    with pytest.raises(ValueError):
        iv_contains(EMPTY_SET, 1)


def test_supremum():
    assert iv_supremum(make_interval(0, F(1, 2), True, False)) == F(1, 2)
    two = iset((0, F(1, 2), True, False), (F(3, 4), F(7, 8), True, False))
    assert iv_supremum(two) == F(7, 8)
    assert iv_supremum(EMPTY_SET) is None


def test_is_open_in_unit():
    assert is_open_in_unit(make_unit_interval(0, 1, True, True))
    assert is_open_in_unit(make_unit_interval(F(1, 3), F(1, 2), False, False))
    assert not is_open_in_unit(make_unit_interval(F(1, 3), F(1, 2), True, False))
    assert is_open_in_unit(EMPTY_SET)


rationals = st.fractions(min_value=0, max_value=1, max_denominator=12)


@st.composite
def interval_sets(draw):
    out = EMPTY_SET
    for _ in range(draw(st.integers(0, 4))):
        a = draw(rationals)
        b = draw(rationals)
        lo, hi = min(a, b), max(a, b)
        out = iv_union(out, make_interval(lo, hi, draw(st.booleans()),
                                          draw(st.booleans())))
    return out


@given(interval_sets())
def test_canonical_idempotent(a):
    assert canonical(a.parts) == a


@given(interval_sets(), interval_sets())
def test_union_intersect_commutative(a, b):
    assert iv_union(a, b) == iv_union(b, a)
    assert iv_intersect(a, b) == iv_intersect(b, a)


@given(interval_sets(), interval_sets(), interval_sets())
@settings(max_examples=50)
def test_associativity_and_distribution(a, b, c):
    assert iv_union(iv_union(a, b), c) == iv_union(a, iv_union(b, c))
    assert iv_intersect(iv_intersect(a, b), c) == iv_intersect(a, iv_intersect(b, c))
    assert iv_intersect(a, iv_union(b, c)) == \
        iv_union(iv_intersect(a, b), iv_intersect(a, c))


@given(interval_sets())
def test_complement_involution(a):
    assert iv_complement_in_J(iv_complement_in_J(a)) == a


@given(interval_sets(), interval_sets())
def test_de_morgan(a, b):
    assert iv_complement_in_J(iv_union(a, b)) == \
        iv_intersect(iv_complement_in_J(a), iv_complement_in_J(b))
    assert iv_complement_in_J(iv_intersect(a, b)) == \
        iv_union(iv_complement_in_J(a), iv_complement_in_J(b))


@given(interval_sets(), interval_sets())
def test_subset_via_intersection(a, b):
    union = iv_union(a, b)
    assert iv_subset(a, union)
    assert iv_subset(iv_intersect(a, b), a)


@given(interval_sets())
@settings(max_examples=25)
def test_membership_coherence_on_grid(a):
    for k in range(240):
        q = F(k, 240)
        brute = any(p.contains(q) for p in a.parts)
        assert iv_contains(a, q) == brute
