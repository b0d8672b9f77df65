"""Built-in links with their expected data.

``provenance`` says where the expected values come from: ``published-table``
(a transcribed H-table) or ``derived`` (computed here and checked by an
independent route, named in ``oracle``).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Any

from .classify import QPInput
from .errors import SchemaError
from .hfunction import HTable, LinkInput
from .laurent import LaurentSeries
from .lattice import Box


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    input: LinkInput
    provenance: str
    expected: dict[str, Any] = field(default_factory=dict)
    box: Box | None = None
    oracle: str = ""


def grid_values(rows: list[list[int]], lo: tuple[int, int]) -> dict[tuple[int, int], int]:
    """Rows drawn as printed (top row = largest s2) -> doubled-coordinate map."""
    height = len(rows)
    out = {}
    for r, row in enumerate(rows):
        y = lo[1] + 2 * (height - 1 - r)
        for c, v in enumerate(row):
            out[(lo[0] + 2 * c, y)] = v
    return out


WHITEHEAD_GRID = [
    [2, 1, 0, 0, 0],
    [2, 1, 0, 0, 0],
    [2, 1, 1, 0, 0],
    [3, 2, 1, 1, 1],
    [4, 3, 2, 2, 2],
]

L7N1_GRID = [
    [5, 4, 3, 2, 1, 0, 0, 0, 0],
    [5, 4, 3, 2, 1, 0, 0, 0, 0],
    [5, 4, 3, 2, 1, 0, 0, 0, 0],
    [5, 4, 3, 2, 1, 1, 1, 1, 1],
    [5, 4, 3, 2, 1, 1, 1, 1, 1],
    [6, 5, 4, 3, 2, 2, 2, 2, 2],
    [6, 5, 4, 3, 3, 3, 3, 3, 3],
    [7, 6, 5, 4, 4, 4, 4, 4, 4],
    [8, 7, 6, 5, 5, 5, 5, 5, 5],
]

UNLINK_GRID = [
    [4, 3, 2, 1, 0, 0, 0, 0, 0],
    [4, 3, 2, 1, 0, 0, 0, 0, 0],
    [4, 3, 2, 1, 0, 0, 0, 0, 0],
    [4, 3, 2, 1, 0, 0, 0, 0, 0],
    [4, 3, 2, 1, 0, 0, 0, 0, 0],
    [5, 4, 3, 2, 1, 1, 1, 1, 1],
    [6, 5, 4, 3, 2, 2, 2, 2, 2],
    [7, 6, 5, 4, 3, 3, 3, 3, 3],
    [8, 7, 6, 5, 4, 4, 4, 4, 4],
]

ZERO2 = ((0, 0), (0, 0))


def _poly_divide(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials, coefficient lists lowest degree first."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        q, r = divmod(num[k + len(den) - 1], den[-1])
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[k] = q
        for i, c in enumerate(den):
            num[k + i] -= q * c
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _t_power_minus_one(k: int) -> list[int]:
    return [-1] + [0] * (k - 1) + [1]


def torus_knot_alexander(p: int, q: int) -> LaurentSeries:
    """Symmetric Alexander polynomial of T(p,q): (t^pq-1)(t-1)/((t^p-1)(t^q-1)), centred."""
    p, q = abs(p), abs(q)
    if p < 1 or q < 1 or math.gcd(p, q) != 1:
        raise SchemaError(f"T({p},{q}) is not a knot")
    if p == 1 or q == 1:
        return LaurentSeries.one(1)
    num = _poly_mul(_t_power_minus_one(p * q), _t_power_minus_one(1))
    den = _poly_mul(_t_power_minus_one(p), _t_power_minus_one(q))
    coeffs = _poly_divide(num, den)
    shift = (len(coeffs) - 1) // 2
    return LaurentSeries(1, {(2 * (k - shift),): c for k, c in enumerate(coeffs)})


def torus_knot(p: int, q: int) -> CatalogEntry:
    delta = torus_knot_alexander(p, q)
    g = (abs(p) - 1) * (abs(q) - 1) // 2
    return CatalogEntry(
        f"torus_knot:{p}:{q}",
        LinkInput(f"T({p},{q})", 1, ((0,),), alexander=delta),
        "derived",
        {"genus": g, "tau": g, "kind": "TypeB", "corner2": (2 * g,), "special": True},
        oracle="zero set of H versus g3 = (p-1)(q-1)/2",
    )


def two_bridge_tau(k: int) -> QPInput:
    """τ data of the 2-bridge link b(4k^2+4k, -2k-1) and of its mirror."""
    if k < 1:
        raise SchemaError("k must be a positive integer")
    return QPInput(n=2, tau=k, mirror_tau=1 - k, components_unknotted=True, total_linking_zero=True)


def _whitehead() -> CatalogEntry:
    delta = LaurentSeries(2, {(1, 1): -1, (1, -1): 1, (-1, 1): 1, (-1, -1): -1})
    return CatalogEntry(
        "whitehead",
        LinkInput("whitehead", 2, ZERO2, alexander=delta),
        "published-table",
        {"grid": WHITEHEAD_GRID, "grid_lo2": (-4, -4), "kind": "TypeA", "fibered_and_sqp": "no"},
        Box.from_doubled((-4, -4), (4, 4)),
    )


def _unlink2() -> CatalogEntry:
    return CatalogEntry(
        "unlink2",
        LinkInput("unlink2", 2, ZERO2, alexander=LaurentSeries(2, {})),
        "published-table",
        {"grid": UNLINK_GRID, "grid_lo2": (-8, -8), "kind": "TypeB", "corner2": (0, 0),
         "special": False, "failures": ("eq2",)},
        Box.from_doubled((-8, -8), (8, 8)),
    )


# Not part of the published table: lk = 2 (unknot and trefoil components) is
# the linking number compatible with the table's lattice and ∞-slices.  Pass
# these explicitly to check the corner-position condition.
L7N1_LINKING = ((0, 2), (2, 0))
L7N1_GENERA = (0, 1)


def _l7n1_table() -> HTable:
    return HTable(Box.from_doubled((-8, -8), (8, 8)), grid_values(L7N1_GRID, (-8, -8)))


def _l7n1() -> CatalogEntry:
    table = _l7n1_table()
    return CatalogEntry(
        "l7n1", LinkInput("l7n1", 2, None, h_table=table), "published-table",
        {"grid": L7N1_GRID, "grid_lo2": (-8, -8), "kind": "TypeB", "corner2": (2, 4), "special": True,
         "tau": 3, "g3": 2, "s_top": 3},
        table.box,
    )


def l7n1_with_external_data() -> LinkInput:
    """The L7n1 table together with the externally supplied lk and genera."""
    return LinkInput("l7n1", 2, L7N1_LINKING, h_table=_l7n1_table(), component_genera=L7N1_GENERA)


def _hopf() -> CatalogEntry:
    return CatalogEntry(
        "hopf_pos",
        LinkInput("hopf_pos", 2, ((0, 1), (1, 0)), alexander=LaurentSeries.one(2)),
        "derived",
        {"kind": "TypeB", "corner2": (1, 1), "special": True, "tau": 1, "g3": 0, "s_top": 1,
         "values2": {(1, 1): 0, (-1, 1): 1, (1, -1): 1, (-1, -1): 1}},
        oracle="one step of inclusion-exclusion from unknot boundaries",
    )


def _unknot() -> CatalogEntry:
    return CatalogEntry(
        "unknot",
        LinkInput("unknot", 1, ((0,),), alexander=LaurentSeries.one(1)),
        "derived",
        {"genus": 0, "tau": 0, "kind": "TypeB", "corner2": (0,), "special": True},
        oracle="H(s) = max(0, -s) from the geometric series",
    )


_FIXED = {
    "unknot": _unknot,
    "unlink2": _unlink2,
    "hopf_pos": _hopf,
    "trefoil": lambda: torus_knot(2, 3),
    "whitehead": _whitehead,
    "l7n1": _l7n1,
}

NAMES = tuple(_FIXED) + ("torus_knot:P:Q", "two_bridge:K")


def get(name: str) -> CatalogEntry:
    """Look up a link by name; ``torus_knot:p:q`` is generated on demand."""
    if name in _FIXED:
        return _FIXED[name]()
    m = re.fullmatch(r"torus_knot[:(](-?\d+)[:,](-?\d+)\)?", name)
    if m:
        return torus_knot(int(m.group(1)), int(m.group(2)))
    raise SchemaError(f"unknown catalog entry {name!r}; known: {', '.join(NAMES)}")


def get_qp(name: str) -> QPInput:
    m = re.fullmatch(r"two_bridge(?:_tau)?[:(](\d+)\)?", name)
    if not m:
        raise SchemaError(f"unknown quasi-positivity entry {name!r}; use two_bridge:K")
    return two_bridge_tau(int(m.group(1)))


def link_entries() -> list[CatalogEntry]:
    """Every fixed link entry plus a few torus knots."""
    return [get(n) for n in _FIXED] + [torus_knot(2, 5), torus_knot(3, 4)]
