"""Brute-force homology of the square of four F[U]-towers, over F_2.

This is deliberately independent of the case table in ``hfl2``: it builds
the truncated complex from the four H values, forms the boundary matrices
grading by grading and takes ranks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import SchemaError
from .hfl2 import GradedDim, LocalSquare, hfl_domain, hfl_minus_point
from .hfunction import HTable, check_growth
from .lattice import iterate_box

CUBE = {"a": 0, "b": 1, "d": 1, "c": 2}
# source -> targets of the cube differential
EDGES = {"c": ("b", "d"), "b": ("a",), "d": ("a",), "a": ()}


@dataclass(frozen=True)
class TruncatedTower:
    generator_h: int
    cube: int
    truncation: int

    def __post_init__(self):
        if self.truncation < 1:
            raise SchemaError("truncation must be positive")

    def maslov(self, j: int) -> int:
        return -2 * self.generator_h - 2 * j + self.cube


@dataclass(frozen=True)
class ConeComplex:
    towers: Mapping[str, TruncatedTower]
    powers: Mapping[tuple[str, str], int]  # (source, target) -> U exponent
    truncation: int

    def generators(self):
        for name, t in self.towers.items():
            for j in range(t.truncation):
                yield (name, j), t.maslov(j)

    def boundary(self, gen):
        name, j = gen
        out = []
        for tgt in EDGES[name]:
            k = j + self.powers[(name, tgt)]
            if k < self.truncation:
                out.append((tgt, k))
        return out

    @property
    def h_max(self) -> int:
        return max(t.generator_h for t in self.towers.values())

    @property
    def top_degree(self) -> int:
        return max(t.maslov(0) for t in self.towers.values())

    def trust_floor(self) -> int:
        """Lowest Maslov grading unaffected by truncation."""
        # truncation errors sit at or below (top generator degree) - 2N + 1
        return max(-2 * self.truncation + 2 * self.h_max + 2, self.top_degree - 2 * self.truncation + 2)


def build_cone(sq: LocalSquare, N: int) -> ConeComplex:
    vals = {"a": sq.a, "b": sq.b, "c": sq.c, "d": sq.d}
    if N <= sq.c + 2:
        raise SchemaError(f"truncation N={N} must exceed h_max + 2 = {sq.c + 2}")
    towers = {k: TruncatedTower(v, CUBE[k], N) for k, v in vals.items()}
    powers = {}
    for src, tgts in EDGES.items():
        for tgt in tgts:
            delta = vals[src] - vals[tgt]
            if delta not in (0, 1):
                raise SchemaError(f"edge {src}->{tgt} has U-power {delta}")
            powers[(src, tgt)] = delta
    return ConeComplex(towers, powers, N)


def gf2_rank(rows: list[int]) -> int:
    """Rank over F_2 of vectors packed into ints."""
    rank = 0
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top in pivots:
                r ^= pivots[top]
            else:
                pivots[top] = r
                rank += 1
                break
    return rank


def boundary_squared_zero(cx: ConeComplex) -> bool:
    for gen, _ in cx.generators():
        counts: dict = {}
        for mid in cx.boundary(gen):
            for tgt in cx.boundary(mid):
                counts[tgt] = counts.get(tgt, 0) ^ 1
        if any(counts.values()):
            return False
    return True


def homology(cx: ConeComplex, window: tuple[int, int] | None = None) -> GradedDim:
    """Graded dimensions of H_*(cx) on ``window = (lowest, highest)`` Maslov grading."""
    floor, top = cx.trust_floor(), cx.top_degree
    lo, hi = (floor, top) if window is None else window
    if lo < floor or hi > top:
        raise SchemaError(f"window {lo}..{hi} exceeds the trust region {floor}..{top}")
    by_degree: dict[int, list] = {}
    for gen, m in cx.generators():
        by_degree.setdefault(m, []).append(gen)
    index = {m: {g: i for i, g in enumerate(gens)} for m, gens in by_degree.items()}

    def rank_from(m):
        gens = by_degree.get(m, [])
        tgt_index = index.get(m - 1, {})
        rows = []
        for g in gens:
            v = 0
            for t in cx.boundary(g):
                v ^= 1 << tgt_index[t]
            rows.append(v)
        return gf2_rank(rows)

    out = {}
    for m in range(lo, hi + 1):
        dim = len(by_degree.get(m, [])) - rank_from(m) - rank_from(m + 1)
        if dim:
            out[m] = dim
    return GradedDim.of(out)


def default_truncation(sq: LocalSquare) -> int:
    # room for the trust window to reach 4 gradings below the top generator
    return 2 * sq.c + 8


def square_homology(sq: LocalSquare, N: int | None = None) -> GradedDim:
    return homology(build_cone(sq, N or default_truncation(sq)))


def oracle_check(table: HTable) -> dict:
    """Compare the case table with brute-force homology at every interior point."""
    if table.n != 2:
        raise SchemaError("the cone oracle handles 2-component tables only")
    check_growth(table)
    dom = hfl_domain(table)
    mismatches = []
    checked = 0
    if dom is not None:
        for s in iterate_box(dom):
            sq = LocalSquare.at(table, s)
            brute = square_homology(sq)
            fast = hfl_minus_point(table, s)
            checked += 1
            if brute != fast:
                mismatches.append({"point": s, "oracle": brute.as_dict(), "cases": fast.as_dict()})
    return {"checked": checked, "mismatches": mismatches}
