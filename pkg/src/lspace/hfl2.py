"""HFL⁻ of 2-component L-space links from the local shape of H.

At a point s the relevant square is

    b = H(s1-1, s2)      a = H(s1, s2)
    c = H(s1-1, s2-1)    d = H(s1, s2-1)

and, up to subtracting h = a, it is one of six patterns.  Each pattern
determines HFL⁻(s) with its Maslov gradings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import SchemaError
from .hfunction import HTable
from .lattice import Box, LatticePoint, iterate_box
from .classify import Tri


@dataclass(frozen=True)
class LocalSquare:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for hi, lo in ((self.b, self.a), (self.d, self.a), (self.c, self.b), (self.c, self.d)):
            if hi - lo not in (0, 1):
                raise SchemaError(f"impossible square {self}: steps must be 0 or 1")
        if self.a < 0:
            raise SchemaError(f"negative H in square {self}")

    @property
    def h(self) -> int:
        return self.a

    @property
    def normalized(self) -> tuple[int, int, int, int]:
        return (0, self.b - self.a, self.c - self.a, self.d - self.a)

    @classmethod
    def at(cls, table: HTable, s: LatticePoint) -> "LocalSquare":
        x, y = s.doubled
        try:
            return cls(table.values[(x, y)], table.values[(x - 2, y)], table.values[(x - 2, y - 2)], table.values[(x, y - 2)])
        except KeyError:
            raise SchemaError(f"the square below {s} leaves the box") from None


# normalized (a, b, c, d) -> case number
CASE_PATTERNS: Mapping[tuple[int, int, int, int], int] = {
    (0, 0, 0, 0): 1,
    (0, 0, 1, 1): 2,
    (0, 1, 1, 0): 3,
    (0, 0, 1, 0): 4,
    (0, 1, 1, 1): 5,
    (0, 1, 2, 1): 6,
}


def valid_squares(h: int) -> list[LocalSquare]:
    """Every square with H(s) = h whose steps are all 0 or 1."""
    out = []
    for b in (h, h + 1):
        for d in (h, h + 1):
            for c in sorted({max(b, d), min(b, d) + 1}):
                out.append(LocalSquare(h, b, c, d))
    return out


def local_case(sq: LocalSquare) -> int:
    try:
        return CASE_PATTERNS[sq.normalized]
    except KeyError:
        raise SchemaError(f"square {sq} matches none of the six cases") from None


@dataclass(frozen=True)
class GradedDim:
    """Maslov grading -> dimension over F_2."""

    dims: tuple[tuple[int, int], ...] = ()

    @classmethod
    def of(cls, mapping: Mapping[int, int]) -> "GradedDim":
        return cls(tuple(sorted((int(g), int(d)) for g, d in mapping.items() if d)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.dims)

    @property
    def total(self) -> int:
        return sum(d for _, d in self.dims)

    @property
    def euler(self) -> int:
        return sum((-1) ** (g % 2) * d for g, d in self.dims)

    def __bool__(self):
        return bool(self.dims)


def hfl_from_case(case: int, h: int) -> GradedDim:
    if case in (1, 2, 3):
        return GradedDim()
    if case == 4:
        return GradedDim.of({-2 * h + 1: 1})
    if case == 5:
        return GradedDim.of({-2 * h: 1})
    if case == 6:
        return GradedDim.of({-2 * h: 1, -2 * h - 1: 1})
    raise SchemaError(f"no case {case}")


def hfl_minus_point(table: HTable, s: LatticePoint) -> GradedDim:
    if table.n != 2:
        raise SchemaError("HFL⁻ from H is implemented for 2 components only")
    sq = LocalSquare.at(table, s)
    return hfl_from_case(local_case(sq), sq.h)


def hfl_domain(table: HTable) -> Box | None:
    """Points whose whole square lies in the box."""
    return table.box.interior()


def hfl_minus_table(table: HTable) -> dict[LatticePoint, GradedDim]:
    """Nonzero HFL⁻ at every point of the box whose square is available."""
    dom = hfl_domain(table)
    if dom is None:
        return {}
    out = {}
    for s in iterate_box(dom):
        g = hfl_minus_point(table, s)
        if g:
            out[s] = g
    return out


@dataclass(frozen=True)
class TopReport:
    s_top: int | None
    fibered: Tri
    hat_dim: int | None
    points: tuple[LatticePoint, ...]
    certified: bool
    note: str = ""


def s_top_and_fibered(table: HTable, hflm: Mapping[LatticePoint, GradedDim] | None = None) -> TopReport:
    """Top collapsed Alexander grading of ĤFL and the fiberedness verdict.

    ĤFL(s) is known to equal HFL⁻(s) when HFL⁻(s + e_B) vanishes for every
    nonempty B.  Every nonzero point of maximal s1 + s2 has this property.
    Outside the box, HFL⁻ vanishes on the stabilized top slices, so the top
    grading is certified once it beats every unexplored point below the box.
    """
    if hflm is None:
        hflm = hfl_minus_table(table)
    dom = hfl_domain(table)
    if not hflm or dom is None:
        return TopReport(None, Tri.UNKNOWN, None, (), False, "no nonzero HFL⁻ in the box")
    top = max(p.doubled_sum() for p in hflm)
    at_top = tuple(sorted(p for p in hflm if p.doubled_sum() == top))

    def degenerate(p):
        for B in ((0,), (1,), (0, 1)):
            q = LatticePoint(tuple(x + 2 if i in B else x for i, x in enumerate(p.doubled)))
            if q in dom and q in hflm:
                return False
        return True

    if not all(degenerate(p) for p in at_top):
        return TopReport(top // 2, Tri.UNKNOWN, None, at_top, False, "non-degenerate point at the top grading")

    lo, hi = table.box.lo.doubled, table.box.hi.doubled
    # points outside the domain that might carry HFL⁻: some s_i <= lo_i, all s_j <= hi_j - 1
    reach = max(lo[i] + sum(hi[j] - 2 for j in range(2) if j != i) for i in range(2))
    certified = top > reach
    dim = sum(hflm[p].total for p in at_top)
    if not certified:
        return TopReport(top // 2, Tri.UNKNOWN, dim, at_top, False, "box too small to certify the top grading")
    return TopReport(top // 2, Tri.YES if dim == 1 else Tri.NO, dim, at_top, True)
