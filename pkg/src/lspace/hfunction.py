"""The H-function of an L-space link on a finite box.

Values are filled from the top of the box downward using the
inclusion-exclusion relation between H and the Euler characteristics
χ(HFL⁻(s)), with the values "at infinity" taken from recursively solved
sublinks.  Every filled value is checked against the growth constraints
(H >= 0, each unit step down an axis raises H by 0 or 1).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from .errors import BoxTooSmallError, NotLSpaceLinkError, SchemaError
from .laurent import LaurentSeries, coefficient, normalize_alexander
from .lattice import Box, LatticePoint, iterate_box, subsets

log = logging.getLogger(__name__)

Coords = tuple  # doubled coordinates, possibly with None meaning +infinity

DEFAULT_MARGIN = 2


@dataclass(frozen=True)
class HTable:
    """H restricted to a box.

    ``values`` maps doubled coordinates to H.  Points above ``box.hi`` on some
    axis are read from ``sublinks`` (keyed by the dropped axis) when present,
    otherwise by clamping to the top slice, which is legitimate once the top
    slices have been checked for stabilization.
    """

    box: Box
    values: Mapping[tuple[int, ...], int]
    linking: tuple[tuple[int, ...], ...] | None = None
    sublinks: Mapping[int, "HTable"] = field(default_factory=dict)
    margin: int = DEFAULT_MARGIN
    sign: int | None = None
    chi: LaurentSeries | None = None
    name: str = ""

    @property
    def n(self) -> int:
        return self.box.n

    def points(self) -> Iterator[LatticePoint]:
        return iterate_box(self.box)

    def lk(self, i: int, j: int) -> int:
        if self.linking is None:
            raise SchemaError("linking numbers are required for this operation")
        return self.linking[i][j]

    def __getitem__(self, p) -> int:
        d = p.doubled if isinstance(p, LatticePoint) else tuple(p)
        return self.value(d)

    def value(self, coords: Coords) -> int:
        """H at ``coords``; entries that are None or above the box count as infinity."""
        lo, hi = self.box.lo.doubled, self.box.hi.doubled
        if len(coords) != self.n:
            raise SchemaError(f"point {coords} has wrong dimension for n={self.n}")
        inf = [i for i, x in enumerate(coords) if x is None or x > hi[i]]
        if not inf:
            try:
                return self.values[tuple(coords)]
            except KeyError:
                raise BoxTooSmallError(f"point {coords} lies outside the box {_fmt_box(self.box)}") from None
        if len(inf) == self.n:
            return 0
        i = inf[0]
        if i in self.sublinks:
            rest = tuple(
                None if (x is None or x > hi[j]) else x - self.lk(j, i)
                for j, x in enumerate(coords)
                if j != i
            )
            return self.sublinks[i].value(rest)
        if self.n == 1:
            if self.values[hi] != 0:
                raise BoxTooSmallError(f"H({hi[0]}/2) != 0 at the top of a knot table")
            return 0
        clamped = list(coords)
        for j in inf:
            clamped[j] = hi[j]
        for j, x in enumerate(clamped):
            if x < lo[j]:
                raise BoxTooSmallError(f"point {coords} lies below the box {_fmt_box(self.box)}")
        return self.values[tuple(clamped)]

    def zero_set(self) -> list[LatticePoint]:
        return [p for p in self.points() if self.values[p.doubled] == 0]

    def as_grid(self) -> list[list[int]]:
        """2-component tables as rows, top row = largest s2, columns ascending s1."""
        if self.n == 1:
            return [[self.values[(x,)] for x in self.box.axis(0)]]
        if self.n != 2:
            raise SchemaError("grids are only drawn for n <= 2")
        return [[self.values[(x, y)] for x in self.box.axis(0)] for y in reversed(self.box.axis(1))]


@dataclass(frozen=True)
class LinkInput:
    """A link: either a symmetric Alexander polynomial or a raw H-table.

    ``linking`` holds integer linking numbers (zero diagonal).  ``sublinks``
    maps a sorted tuple of kept component indices to that sublink's input;
    missing single components default to the unknot.
    """

    name: str
    n: int
    linking: tuple[tuple[int, ...], ...] | None
    alexander: LaurentSeries | None = None
    h_table: HTable | None = None
    component_genera: tuple[int, ...] | None = None
    sublinks: Mapping[tuple[int, ...], "LinkInput"] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise SchemaError("n must be at least 1")
        if (self.alexander is None) == (self.h_table is None):
            raise SchemaError("exactly one of alexander / h_table must be given")
        if self.linking is None:
            if self.h_table is None and self.n > 1:
                raise SchemaError("a linking matrix is required with an Alexander polynomial")
        else:
            lk = tuple(tuple(int(x) for x in row) for row in self.linking)
            object.__setattr__(self, "linking", lk)
            if len(lk) != self.n or any(len(r) != self.n for r in lk):
                raise SchemaError(f"linking matrix must be {self.n}x{self.n}")
            for i in range(self.n):
                if lk[i][i] != 0:
                    raise SchemaError("linking matrix must have zero diagonal")
                for j in range(self.n):
                    if lk[i][j] != lk[j][i]:
                        raise SchemaError("linking matrix must be symmetric")
        if self.component_genera is not None and len(self.component_genera) != self.n:
            raise SchemaError("component_genera must have one entry per component")
        parity = self.lattice_parity()
        if self.alexander is not None:
            if self.alexander.n != self.n:
                raise SchemaError("polynomial dimension does not match n")
            p = self.alexander.parity
            if p is not None:
                expected = parity if self.n == 1 else tuple((x + 1) % 2 for x in parity)
                if p != expected:
                    raise SchemaError(
                        f"exponent parity {p} inconsistent with linking numbers (expected {expected})"
                    )
        if self.h_table is not None:
            if self.h_table.n != self.n:
                raise SchemaError("table dimension does not match n")
            if parity is not None and self.h_table.box.lo.parity != parity:
                raise SchemaError("table origin parity inconsistent with linking numbers")

    def lattice_parity(self) -> tuple[int, ...] | None:
        """Doubled-coordinate parity of each axis, i.e. lk(L_i, L - L_i) mod 2."""
        if self.linking is None:
            return None if self.n > 1 else (0,)
        return tuple(sum(row) % 2 for row in self.linking)

    def sublink(self, kept: Sequence[int]) -> "LinkInput":
        kept = tuple(sorted(kept))
        if kept in self.sublinks:
            return self.sublinks[kept]
        if len(kept) == 1:
            return LinkInput(f"{self.name}[{kept[0]}]", 1, ((0,),), alexander=LaurentSeries.one(1))
        raise SchemaError(f"sublink data for components {list(kept)} is required when n > 2")


def _fmt_box(box: Box) -> str:
    return f"[{box.lo}, {box.hi}]"


# --------------------------------------------------------------------------- knots


def solve_knot(series: LaurentSeries, floor: int, ceiling: int | None = None, *, name="", sign=None) -> HTable:
    """H of a knot from its normalized series, on ``[floor, max(top + 1, ceiling)]``.

    ``floor`` and ``ceiling`` are actual (integer) values.  H vanishes from the
    top exponent on and otherwise ``H(s-1) = H(s) + χ(s)``.
    """
    if series.n != 1:
        raise SchemaError("solve_knot expects a one-variable series")
    bounds = series.support_bounds()
    if bounds is None:
        raise NotLSpaceLinkError("zero series cannot come from a knot")
    top = bounds[1][0] // 2
    hi = max(top + 1, floor if ceiling is None else ceiling)
    values = {}
    for s in range(hi, top - 1, -1):
        values[(2 * s,)] = 0
    h = 0
    for s in range(top, floor, -1):
        step = coefficient(series, (2 * s,))
        h += step
        if step not in (0, 1) or h < 0:
            raise NotLSpaceLinkError(
                f"H({s - 1}) - H({s}) = {step}: not an L-space knot, or wrong sign",
                point=LatticePoint((2 * (s - 1),)),
            )
        values[(2 * (s - 1),)] = h
    values = {k: values[k] for k in values if k[0] >= 2 * floor}
    box = Box.from_doubled((2 * min(floor, hi),), (2 * hi,))
    return HTable(box, values, ((0,),), {}, 1, sign, series, name)


def knot_genus(h: HTable) -> int:
    """The least s with H(s) = 0 (Seifert genus for L-space knots)."""
    if h.n != 1:
        raise SchemaError("knot_genus expects a one-dimensional table")
    zeros = [d[0] for d, v in h.values.items() if v == 0]
    if not zeros:
        raise BoxTooSmallError("no zero of H inside the knot table")
    g = min(zeros)
    if g == h.box.lo.doubled[0]:
        raise BoxTooSmallError("zero set reaches the bottom of the knot table")
    return g // 2


# --------------------------------------------------------------------------- links


def _support_top(series: LaurentSeries) -> tuple[int, ...] | None:
    b = series.support_bounds()
    return None if b is None else b[1]


def default_box(link: LinkInput, margin: int = DEFAULT_MARGIN) -> Box:
    """Support of the normalized polynomial widened by ``margin`` units, at least 5 wide."""
    if link.h_table is not None:
        return link.h_table.box
    n = link.n
    parity = link.lattice_parity()
    if n == 1:
        chi = normalize_alexander(link.alexander, 1)
    else:
        chi = link.alexander.shift((1,) * n)
    b = chi.support_bounds()
    if b is None:
        lo = list(parity)
        hi = list(parity)
    else:
        lo, hi = list(b[0]), list(b[1])
    lo = [x - 2 * margin for x in lo]
    hi = [x + 2 * margin for x in hi]
    for i in range(n):
        while (hi[i] - lo[i]) // 2 + 1 < 5:
            lo[i] -= 2
    return Box.from_doubled(lo, hi)


def _sublink_box(box: Box, link: LinkInput, drop: int, margin: int) -> tuple[LinkInput, Box]:
    kept = [j for j in range(link.n) if j != drop]
    sub = link.sublink(kept)
    lo = [box.lo.doubled[j] - link.linking[j][drop] for j in kept]
    hi = [box.hi.doubled[j] + 2 - link.linking[j][drop] for j in kept]
    if sub.alexander is not None and len(kept) > 1:
        own = default_box(sub, margin)
        hi = [max(a, b) for a, b in zip(hi, own.hi.doubled)]
    return sub, Box.from_doubled(lo, hi)


def _solve_sublinks(link: LinkInput, box: Box, margin: int) -> dict[int, HTable]:
    out = {}
    for i in range(link.n):
        sub, sbox = _sublink_box(box, link, i, margin)
        out[i] = solve_link(sub, sbox, margin=margin)
    return out


def _fill(link: LinkInput, box: Box, chi: LaurentSeries, sublinks: dict[int, HTable], margin: int, sign: int) -> HTable:
    n = link.n
    hi = box.hi.doubled
    proper = list(subsets(n, proper=True))
    values: dict[tuple[int, ...], int] = {}
    table = HTable(box, values, link.linking, sublinks, margin, sign, chi, link.name)

    def H(q):
        if all(x <= h for x, h in zip(q, hi)):
            return values[q]
        return table.value(q)

    top_sign = -1 if n % 2 == 0 else 1
    for p in iterate_box(box):
        s = tuple(x + 2 for x in p.doubled)
        rest = 0
        for B in proper:
            q = tuple(x - 2 if i in B else x for i, x in enumerate(s))
            rest += (-1) ** (len(B) - 1) * H(q) if B else -H(q)
        val = top_sign * (coefficient(chi, s) - rest)
        if val < 0:
            raise NotLSpaceLinkError(f"H{p} = {val} < 0", point=p)
        for i in range(n):
            up = list(p.doubled)
            up[i] += 2
            step = val - H(tuple(up))
            if step not in (0, 1):
                raise NotLSpaceLinkError(f"H jumps by {step} between {p} and its neighbour on axis {i + 1}", point=p)
        values[p.doubled] = val
    _check_stabilization(table, margin, use_sublinks=True)
    return table


def _check_stabilization(h: HTable, margin: int, use_sublinks: bool) -> None:
    """Top ``margin`` slices of each axis must agree with the value at infinity."""
    hi = h.box.hi.doubled
    for i in range(h.n):
        for k in range(min(margin, h.box.shape[i])):
            level = hi[i] - 2 * k
            for p in h.points():
                if p.doubled[i] != level:
                    continue
                at_inf = list(p.doubled)
                at_inf[i] = None
                if use_sublinks:
                    expected = h.value(tuple(at_inf))
                else:
                    top = list(p.doubled)
                    top[i] = hi[i]
                    expected = h.values[tuple(top)]
                if h.values[p.doubled] != expected:
                    raise BoxTooSmallError(
                        f"no stabilization on axis {i + 1}: H{p} = {h.values[p.doubled]}, value at infinity {expected}"
                    )
    if h.n == 1 and h.values[hi] != 0:
        raise BoxTooSmallError("knot table does not reach the zero set of H")


def _sign_candidates(delta: LaurentSeries, policy: str) -> list[int]:
    if policy == "plus":
        return [1]
    if policy == "minus":
        return [-1]
    if policy != "auto":
        raise SchemaError(f"unknown sign policy {policy!r}")
    # 0 and -0 are the same polynomial: a single candidate
    return [1] if delta.is_zero() else [1, -1]


def sign_outcomes(link: LinkInput, box: Box | None = None, margin: int = DEFAULT_MARGIN) -> dict[int, object]:
    """Try every distinct sign of Δ; map sign -> solved table or the raised error."""
    if link.alexander is None:
        raise SchemaError("sign resolution needs an Alexander polynomial")
    out = {}
    for sign in _sign_candidates(link.alexander, "auto"):
        try:
            out[sign] = solve_link(link, box, sign="plus" if sign == 1 else "minus", margin=margin)
        except (NotLSpaceLinkError, BoxTooSmallError) as exc:
            out[sign] = exc
    return out


def solve_link(link: LinkInput, box: Box | None = None, sign: str = "auto", margin: int = DEFAULT_MARGIN) -> HTable:
    """Solve for H on ``box`` (default: support plus margin).

    With ``sign="auto"`` both signs of Δ are tried and the unique one giving a
    valid table is kept.
    """
    if link.h_table is not None:
        return validate_raw(link, margin)
    if box is None:
        box = default_box(link, margin)
    if box.n != link.n:
        raise SchemaError("box dimension does not match the link")
    if box.lo.parity != link.lattice_parity():
        raise SchemaError(f"box parity {box.lo.parity} does not match the lattice {link.lattice_parity()}")

    if link.n == 1:
        floor = box.lo.doubled[0] // 2
        ceiling = box.hi.doubled[0] // 2

        def attempt(sgn):
            series = normalize_alexander(link.alexander if sgn > 0 else -link.alexander, 1, floor)
            h = solve_knot(series, floor, ceiling, name=link.name, sign=sgn)
            return h
    else:
        chi0 = normalize_alexander(link.alexander, link.n)
        top = _support_top(chi0)
        if top is not None:
            short = [i + 1 for i in range(link.n) if top[i] + 2 > box.hi.doubled[i]]
            if short:
                raise BoxTooSmallError(f"box must extend past the polynomial support on axes {short}")
        sublinks = _solve_sublinks(link, box, margin)

        def attempt(sgn):
            chi = chi0 if sgn > 0 else -chi0
            return _fill(link, box, chi, sublinks, margin, sgn)

    passed, failures = [], []
    for sgn in _sign_candidates(link.alexander, sign):
        try:
            passed.append(attempt(sgn))
        except (NotLSpaceLinkError, BoxTooSmallError) as exc:
            log.debug("sign %+d rejected for %s: %s", sgn, link.name, exc)
            failures.append(exc)
    if len(passed) == 1:
        return passed[0]
    if len(passed) > 1:
        raise NotLSpaceLinkError("both signs of the Alexander polynomial give valid tables; cannot resolve")
    box_errors = [e for e in failures if isinstance(e, BoxTooSmallError)]
    if box_errors:
        raise box_errors[0]
    raise NotLSpaceLinkError(
        "input is not consistent with an L-space link on this box: " + "; ".join(str(e) for e in failures),
        point=failures[0].point if failures else None,
    )


# --------------------------------------------------------------------------- raw tables


def check_growth(h: HTable) -> None:
    """H >= 0 and every axis step inside the box is 0 or 1."""
    for p in h.points():
        v = h.values[p.doubled]
        if v < 0:
            raise NotLSpaceLinkError(f"H{p} = {v} < 0", point=p)
        for i in range(h.n):
            up = list(p.doubled)
            up[i] += 2
            up = tuple(up)
            if up in h.values and v - h.values[up] not in (0, 1):
                raise NotLSpaceLinkError(f"H jumps by {v - h.values[up]} between {p} and axis-{i + 1} neighbour", point=p)


def validate_raw(link: LinkInput, margin: int = DEFAULT_MARGIN) -> HTable:
    """Validate a raw-table payload: growth, stabilization, and H = 0 at the top corner."""
    raw = link.h_table
    h = HTable(raw.box, dict(raw.values), link.linking, {}, margin, None, None, link.name)
    if len(h.values) != len(h.box) or any(p.doubled not in h.values for p in h.points()):
        raise SchemaError("raw table does not cover its box densely")
    check_growth(h)
    _check_stabilization(h, margin, use_sublinks=False)
    if h.values[h.box.hi.doubled] != 0:
        raise BoxTooSmallError("H is nonzero at the top corner: the box does not reach infinity")
    if link.linking is not None and link.n > 1:
        # only sublinks the user actually supplied are compared
        for i in range(link.n):
            kept = tuple(j for j in range(link.n) if j != i)
            if kept not in link.sublinks:
                continue
            sub = restrict_to_sublink(h, i)
            expected = solve_link(link.sublinks[kept], sub.box, margin=margin)
            for p in sub.points():
                if sub[p] != expected[p]:
                    raise NotLSpaceLinkError(f"table disagrees with supplied sublink {list(kept)} at {p}", point=p)
    return h


def derived_chi(h: HTable) -> LaurentSeries:
    """Read χ(HFL⁻(s)) off the table at every interior point."""
    inner = h.box.interior()
    terms = {}
    if inner is not None:
        for s in iterate_box(inner):
            terms[s.doubled] = _alternating_sum(h, s.doubled)
    return LaurentSeries(h.n, terms)


def _alternating_sum(h: HTable, s: tuple[int, ...]) -> int:
    total = 0
    for B in subsets(h.n):
        q = tuple(x - 2 if i in B else x for i, x in enumerate(s))
        total += h.value(q) * (-1 if not B else (-1) ** (len(B) - 1))
    return total


@dataclass(frozen=True)
class Residual:
    ok: bool
    point: LatticePoint | None = None
    expected: int | None = None
    got: int | None = None

    def __bool__(self):
        return self.ok


def residual_check(h: HTable, chi: LaurentSeries | None = None) -> Residual:
    """Plug H back into inclusion-exclusion at every interior point."""
    chi = h.chi if chi is None else chi
    if chi is None:
        raise SchemaError("no χ series available for this table")
    inner = h.box.interior()
    if inner is None:
        return Residual(True)
    for s in iterate_box(inner):
        want = coefficient(chi, s.doubled)
        got = _alternating_sum(h, s.doubled)
        if want != got:
            return Residual(False, s, want, got)
    return Residual(True)


def restrict_to_sublink(h: HTable, drop: int) -> HTable:
    """Read the top slice of axis ``drop`` and undo the linking shift on the others."""
    n = h.n
    if n < 2:
        raise SchemaError("cannot drop a component of a knot")
    if not 0 <= drop < n:
        raise SchemaError(f"component index {drop} out of range")
    hi = h.box.hi.doubled
    top = hi[drop]
    if h.box.shape[drop] < 2:
        raise BoxTooSmallError(f"axis {drop + 1} is too short to witness stabilization")
    kept = [j for j in range(n) if j != drop]
    for p in h.points():
        if p.doubled[drop] == top:
            below = list(p.doubled)
            below[drop] -= 2
            if h.values[tuple(below)] != h.values[p.doubled]:
                raise BoxTooSmallError(f"top margin of axis {drop + 1} is not stabilized at {p}")
    shift = [h.lk(j, drop) for j in kept]
    values = {}
    for p in h.points():
        if p.doubled[drop] == top:
            key = tuple(p.doubled[j] - s for j, s in zip(kept, shift))
            values[key] = h.values[p.doubled]
    lo = [h.box.lo.doubled[j] - s for j, s in zip(kept, shift)]
    hi_new = [hi[j] - s for j, s in zip(kept, shift)]
    linking = tuple(tuple(h.linking[a][b] for b in kept) for a in kept)
    return HTable(Box.from_doubled(lo, hi_new), values, linking, {}, h.margin, None, None, f"{h.name}-L{drop + 1}")


def component_tables(h: HTable) -> list[HTable]:
    """One knot table per component, read off the ∞-slices."""
    if h.n == 1:
        return [h]
    out = []
    for i in range(h.n):
        t = h
        # drop every other axis, highest index first so indices stay valid
        for j in sorted((j for j in range(h.n) if j != i), reverse=True):
            t = restrict_to_sublink(t, j)
        out.append(t)
    return out
