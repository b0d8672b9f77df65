import pytest
from hypothesis import given, settings, strategies as st

from lspace import catalog
from lspace.errors import BoxTooSmallError, NotLSpaceLinkError, SchemaError
from lspace.hfunction import (
    HTable,
    LinkInput,
    check_growth,
    derived_chi,
    knot_genus,
    residual_check,
    restrict_to_sublink,
    sign_outcomes,
    solve_knot,
    solve_link,
)
from lspace.laurent import LaurentSeries, coefficient, normalize_alexander
from lspace.lattice import Box, LatticePoint


def test_knot_staircase_matches_prefix_sums():
    delta = catalog.torus_knot_alexander(3, 4)
    tilde = normalize_alexander(delta, 1, -10)
    h = solve_knot(tilde, -10, 6)
    running = 0
    for s in range(5, -10, -1):
        running += coefficient(tilde, (2 * (s + 1),))
        assert h[(2 * s,)] == running
    assert knot_genus(h) == 3


@pytest.mark.parametrize("p,q", [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5)])
def test_torus_knot_genus(p, q):
    h = solve_link(catalog.torus_knot(p, q).input)
    assert knot_genus(h) == (p - 1) * (q - 1) // 2
    check_growth(h)


def test_knot_with_wrong_sign_is_rejected():
    tref = catalog.torus_knot_alexander(2, 3)
    with pytest.raises(NotLSpaceLinkError):
        solve_link(LinkInput("t", 1, ((0,),), alexander=tref), sign="minus")


def test_figure_eight_is_not_an_lspace_knot():
    fig8 = LaurentSeries(1, {(2,): -1, (0,): 3, (-2,): -1})
    with pytest.raises(NotLSpaceLinkError):
        solve_link(LinkInput("4_1", 1, ((0,),), alexander=fig8))


def test_whitehead_grid():
    e = catalog.get("whitehead")
    h = solve_link(e.input, e.box)
    assert h.as_grid() == catalog.WHITEHEAD_GRID
    assert h.sign == 1
    assert residual_check(h)


def test_whitehead_minus_sign_fails_at_origin():
    e = catalog.get("whitehead")
    out = sign_outcomes(e.input, e.box)
    assert isinstance(out[-1], NotLSpaceLinkError)
    assert isinstance(out[1], HTable)


def test_unlink_closed_form():
    e = catalog.get("unlink2")
    h = solve_link(e.input, Box.from_doubled((-8, -8), (8, 8)))
    for (x, y), v in h.values.items():
        assert v == max(0, -x // 2) + max(0, -y // 2)


def test_hopf_values():
    e = catalog.get("hopf_pos")
    h = solve_link(e.input)
    for k, v in e.expected["values2"].items():
        assert h[k] == v


def test_residual_check_localizes_perturbation():
    e = catalog.get("whitehead")
    h = solve_link(e.input, e.box)
    values = dict(h.values)
    values[(0, 0)] = 2
    bad = HTable(h.box, values, h.linking, h.sublinks, h.margin, h.sign, h.chi, h.name)
    r = residual_check(bad)
    assert not r
    assert r.point.doubled == (2, 2)


def test_box_below_support_is_too_small():
    e = catalog.get("whitehead")
    with pytest.raises(BoxTooSmallError):
        solve_link(e.input, Box.from_doubled((-4, -4), (0, 0)))


def test_box_parity_checked():
    e = catalog.get("hopf_pos")
    with pytest.raises(SchemaError):
        solve_link(e.input, Box.from_doubled((-4, -4), (4, 4)))


def test_linking_parity_mismatch():
    # lk = 0 forces half-integer exponents in Δ
    d = LaurentSeries(2, {(0, 0): 1})
    with pytest.raises(SchemaError):
        LinkInput("x", 2, ((0, 0), (0, 0)), alexander=d)


def test_restrict_to_sublink_gives_unknots():
    for name in ("whitehead", "unlink2", "hopf_pos"):
        e = catalog.get(name)
        h = solve_link(e.input, e.box)
        for drop in (0, 1):
            sub = restrict_to_sublink(h, drop)
            for p in sub.points():
                assert sub[p] == max(0, -p.doubled[0] // 2)


def test_l7n1_raw_table():
    h = solve_link(catalog.l7n1_with_external_data())
    assert h.as_grid() == catalog.L7N1_GRID
    chi = derived_chi(h)
    assert chi.terms == {(0, -2): 1, (2, 4): 1}
    # unshifting gives a symmetric polynomial
    assert chi.shift((-1, -1)).symmetry_sign() == 1
    trefoil = solve_link(catalog.get("trefoil").input)
    sub = restrict_to_sublink(h, 0)
    for p in trefoil.points():
        if p in sub.box:
            assert sub[p] == trefoil[p]


def test_raw_table_growth_violation():
    e = catalog.get("l7n1")
    values = dict(e.input.h_table.values)
    values[(-8, -8)] = 10
    link = LinkInput("bad", 2, None, h_table=HTable(e.input.h_table.box, values))
    with pytest.raises(NotLSpaceLinkError):
        solve_link(link)


def test_raw_table_without_stabilization():
    grid = catalog.grid_values(catalog.WHITEHEAD_GRID, (-4, -4))
    # drop the top two rows/columns so the ∞ slices are not witnessed
    vals = {k: v for k, v in grid.items() if k[0] <= 0 and k[1] <= 0}
    link = LinkInput("cut", 2, ((0, 0), (0, 0)), h_table=HTable(Box.from_doubled((-4, -4), (0, 0)), vals))
    with pytest.raises(BoxTooSmallError):
        solve_link(link)


def test_zero_polynomial_has_one_sign():
    out = sign_outcomes(catalog.get("unlink2").input)
    assert list(out) == [1]


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6))
def test_hopf_table_is_box_independent(k):
    # growing the box downward must not change the solved values
    e = catalog.get("hopf_pos")
    box = Box.from_doubled((-1 - 2 * k, -1 - 2 * k), (5, 5))
    h = solve_link(e.input, box)
    assert h[LatticePoint((1, 1))] == 0
    assert h[LatticePoint((-1, -1))] == 1
    assert residual_check(h)
