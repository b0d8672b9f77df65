from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lspace.errors import SchemaError
from lspace.lattice import Box, HalfInt, LatticePoint, format_doubled, iterate_box, leq, minus_eB, subsets


def test_halfint_parse_and_format():
    assert HalfInt.parse("1/2").doubled == 1
    assert HalfInt.parse("-3/2").doubled == -3
    assert HalfInt.parse("2").doubled == 4
    assert str(HalfInt(-3)) == "-3/2"
    assert HalfInt(5).value == Fraction(5, 2)
    assert format_doubled(4) == "2"
    with pytest.raises(SchemaError):
        HalfInt.parse("1/3")


def test_point_basics():
    p = LatticePoint.of("1/2", -1)
    assert p.doubled == (1, -2)
    assert p.parity == (1, 0)
    assert p.doubled_sum() == -1
    assert str(p) == "(1/2,-1)"


def test_leq_rejects_mixed_parity():
    with pytest.raises(SchemaError):
        leq(LatticePoint((1, 0)), LatticePoint((2, 0)))
    with pytest.raises(SchemaError):
        leq(LatticePoint((0,)), LatticePoint((0, 0)))


def test_minus_eB_and_subsets():
    s = LatticePoint((1, 1))
    assert minus_eB(s, (0,)).doubled == (-1, 1)
    assert minus_eB(s, (0, 1)).doubled == (-1, -1)
    assert list(subsets(2)) == [(), (0,), (1,), (0, 1)]
    assert list(subsets(2, proper=True)) == [(), (0,), (1,)]


def test_box_order_is_descending():
    box = Box.from_doubled((0, 0), (2, 2))
    assert [p.doubled for p in iterate_box(box)] == [(2, 2), (0, 2), (2, 0), (0, 0)]
    assert len(box) == 4
    assert box.interior() == Box.from_doubled((2, 2), (2, 2))
    assert Box.from_doubled((0,), (0,)).interior() is None


def test_box_parity_mismatch():
    with pytest.raises(SchemaError):
        Box.from_doubled((0, 1), (2, 2))


coords = st.lists(st.integers(-20, 20), min_size=2, max_size=2)


@given(coords, coords, coords)
def test_leq_is_a_partial_order(a, b, c):
    a, b, c = (LatticePoint(tuple(2 * x for x in v)) for v in (a, b, c))
    assert leq(a, a)
    if leq(a, b) and leq(b, a):
        assert a == b
    if leq(a, b) and leq(b, c):
        assert leq(a, c)


@given(coords, st.sets(st.integers(0, 1)), st.sets(st.integers(0, 1)))
def test_minus_eB_composes(v, B, C):
    s = LatticePoint(tuple(2 * x + 1 for x in v))
    if B & C:
        return
    assert minus_eB(minus_eB(s, B), C) == minus_eB(s, B | C)
    assert leq(minus_eB(s, B), s)
