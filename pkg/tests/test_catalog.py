import pytest

from lspace import catalog
from lspace.errors import SchemaError
from lspace.hfunction import solve_link


def test_torus_knot_alexander_polynomials():
    assert catalog.torus_knot_alexander(2, 3).terms == {(2,): 1, (0,): -1, (-2,): 1}
    t34 = catalog.torus_knot_alexander(3, 4)
    assert t34.terms == {(6,): 1, (4,): -1, (0,): 1, (-4,): -1, (-6,): 1}
    assert t34.symmetry_sign() == 1


def test_grid_values_orientation():
    vals = catalog.grid_values([[1, 2], [3, 4]], (0, 0))
    assert vals == {(0, 2): 1, (2, 2): 2, (0, 0): 3, (2, 0): 4}


def test_lookup():
    assert catalog.get("torus_knot:2:5").expected["genus"] == 2
    assert catalog.get("torus_knot(3,5)").expected["genus"] == 4
    assert catalog.get_qp("two_bridge:4").tau == 4
    with pytest.raises(SchemaError):
        catalog.get("figure_eight")
    with pytest.raises(SchemaError):
        catalog.torus_knot(2, 4)
    with pytest.raises(SchemaError):
        catalog.two_bridge_tau(0)


def test_every_entry_has_provenance_and_solves():
    for e in catalog.link_entries():
        assert e.provenance in {"published-table", "derived"}
        assert e.provenance != "derived" or e.oracle
        solve_link(e.input, e.box)


@pytest.mark.parametrize("name", ["whitehead", "unlink2", "l7n1"])
def test_published_grids(name):
    e = catalog.get(name)
    h = solve_link(e.input, e.box)
    lo = e.expected["grid_lo2"]
    for k, v in catalog.grid_values(e.expected["grid"], lo).items():
        assert h[k] == v
