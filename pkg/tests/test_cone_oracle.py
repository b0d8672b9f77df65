import random

import pytest
from hypothesis import given, settings, strategies as st

from lspace import catalog
from lspace.cone_oracle import (
    boundary_squared_zero,
    build_cone,
    default_truncation,
    gf2_rank,
    homology,
    oracle_check,
    square_homology,
)
from lspace.errors import SchemaError
from lspace.hfl2 import CASE_PATTERNS, LocalSquare, hfl_from_case, local_case, valid_squares
from lspace.hfunction import solve_link


def test_gf2_rank():
    assert gf2_rank([0b11, 0b01, 0b10]) == 2
    assert gf2_rank([0, 0]) == 0
    assert gf2_rank([0b100, 0b010, 0b001]) == 3


def test_every_growth_valid_square_is_one_of_six_cases():
    for h in range(4):
        squares = valid_squares(h)
        assert len(squares) == 6
        assert {sq.normalized for sq in squares} == set(CASE_PATTERNS)


@pytest.mark.parametrize("h", range(4))
@pytest.mark.parametrize("pattern", sorted(CASE_PATTERNS))
def test_canonical_squares(pattern, h):
    sq = LocalSquare(*(h + x for x in pattern))
    cx = build_cone(sq, default_truncation(sq))
    assert boundary_squared_zero(cx)
    assert square_homology(sq) == hfl_from_case(local_case(sq), h)


def test_truncation_must_exceed_top():
    with pytest.raises(SchemaError):
        build_cone(LocalSquare(3, 4, 5, 4), 6)


def test_window_outside_trust_region():
    sq = LocalSquare(0, 1, 2, 1)
    cx = build_cone(sq, 10)
    with pytest.raises(SchemaError):
        homology(cx, (cx.trust_floor() - 1, cx.top_degree))


squares = st.integers(0, 6).flatmap(lambda h: st.sampled_from(valid_squares(h)))


@settings(max_examples=200, deadline=None)
@given(squares, st.integers(0, 3))
def test_truncation_stability(sq, extra):
    N = default_truncation(sq) + extra
    lo = build_cone(sq, N).trust_floor()
    small = homology(build_cone(sq, N), (lo, build_cone(sq, N).top_degree))
    big = homology(build_cone(sq, N + 3), (lo, build_cone(sq, N).top_degree))
    assert small == big


def test_random_squares_seeded():
    rng = random.Random(20261016)
    for _ in range(300):
        sq = rng.choice(valid_squares(rng.randint(0, 8)))
        assert square_homology(sq) == hfl_from_case(local_case(sq), sq.h)


@pytest.mark.parametrize("name", ["whitehead", "unlink2", "hopf_pos", "l7n1"])
def test_oracle_on_catalog_tables(name):
    e = catalog.get(name)
    rep = oracle_check(solve_link(e.input, e.box))
    assert rep["checked"] > 0
    assert rep["mismatches"] == []
