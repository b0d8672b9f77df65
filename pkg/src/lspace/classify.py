"""Type (A)/(B) detection, the special test, and what it implies.

A special L-space link is fibered and strongly quasi-positive, with
``tau = nu+ = g3 + n - 1 = sum of the corner coordinates``.  For two
components the converse holds too; for three or more nothing is claimed
about non-special links.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import BoxTooSmallError, SchemaError
from .hfunction import HTable, component_tables, knot_genus
from .lattice import LatticePoint, minus_eB, subsets


class Kind(str, Enum):
    TYPE_A = "TypeA"
    TYPE_B = "TypeB"


class Tri(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    corner: LatticePoint | None = None
    special: bool = False
    failures: tuple[str, ...] = ()
    eq1_checked: bool = False
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if (self.corner is not None) != (self.kind is Kind.TYPE_B):
            raise ValueError("a corner is present exactly for type (B)")
        if self.special and self.kind is not Kind.TYPE_B:
            raise ValueError("special links are type (B)")


@dataclass(frozen=True)
class InvariantReport:
    fibered: Tri = Tri.UNKNOWN
    sqp: Tri = Tri.UNKNOWN
    fibered_and_sqp: Tri = Tri.UNKNOWN
    g3_link: int | None = None
    tau: int | None = None
    nu_plus: int | None = None
    s_top: int | None = None
    component_genera: tuple[int, ...] = ()
    notes: tuple[str, ...] = field(default=())


@dataclass(frozen=True)
class QPInput:
    n: int
    tau: int
    mirror_tau: int
    components_unknotted: bool
    total_linking_zero: bool

    def __post_init__(self):
        if self.n != 2:
            raise SchemaError("the quasi-positivity obstruction is only available for 2-component links")


@dataclass(frozen=True)
class QPVerdict:
    obstructed: bool
    reason: str
    mirror_violated: bool
    self_linking_violated: bool | None  # None when the hypotheses do not apply


def classify_type(h: HTable) -> Classification:
    """TypeB iff the zero set in the box is exactly an upper orthant clipped to the box."""
    zeros = h.zero_set()
    if not zeros:
        raise BoxTooSmallError("H has no zero inside the box")
    corner = LatticePoint(tuple(min(p.doubled[i] for p in zeros) for i in range(h.n)))
    zero_keys = {p.doubled for p in zeros}
    orthant = {p.doubled for p in h.points() if all(a >= c for a, c in zip(p.doubled, corner.doubled))}
    if corner.doubled in zero_keys and orthant == zero_keys:
        return Classification(Kind.TYPE_B, corner)
    return Classification(Kind.TYPE_A)


def component_genera(h: HTable, override: tuple[int, ...] | None = None) -> tuple[int, ...] | None:
    """Genera of the components: the override, or min{s : H_component(s) = 0}.

    Returns None when the table carries no linking data (the ∞-slices cannot be
    un-shifted without it).
    """
    if override is not None:
        return tuple(override)
    if h.n > 1 and h.linking is None:
        return None
    if h.n > 1 and h.sublinks and all(s.n == 1 for s in h.sublinks.values()):
        # 2 components solved from sublink polynomials: the other component is L_{1-i}
        return tuple(knot_genus(h.sublinks[1 - i]) for i in range(2))
    return tuple(knot_genus(t) for t in component_tables(h))


def _value_at_infinity(h: HTable, x: tuple[int, ...], corner: tuple[int, ...]) -> int:
    coords = tuple(None if xi >= si else xi for xi, si in zip(x, corner))
    return h.value(coords)


def is_special(h: HTable, cls: Classification, genera: tuple[int, ...] | None = None) -> Classification:
    """Check the three conditions on a type (B) table.

    ``genera`` overrides the component genera read off the table.  Without
    linking data condition (1) is skipped and noted as unchecked.  Condition
    (3) is only checked on points of the box.
    """
    if cls.kind is not Kind.TYPE_B:
        raise SchemaError("the special test needs a type (B) classification")
    s = cls.corner.doubled
    n = h.n
    failures, notes = [], ["eq3 checked on inspected box only"]

    g = component_genera(h, genera)
    eq1_checked = g is not None and (h.linking is not None or n == 1)
    if eq1_checked:
        for i in range(n):
            lk_i = sum(h.linking[i]) if h.linking is not None else 0
            if s[i] != 2 * g[i] + lk_i:
                failures.append("eq1")
                notes.append(f"eq1: s_{i + 1} = {s[i]}/2 but g3 + lk/2 = {2 * g[i] + lk_i}/2")
                break
    else:
        notes.append("eq1 unchecked: requires linking numbers / component genera")

    below = minus_eB(cls.corner, range(n))
    try:
        v = h[below]
    except BoxTooSmallError:
        raise BoxTooSmallError(f"corner minus one {below} is outside the box") from None
    if v != 1:
        failures.append("eq2")
        notes.append(f"eq2: H{below} = {v} != 1")

    threshold = sum(s) - 2 * n
    for p in h.points():
        x = p.doubled
        if sum(x) < threshold:
            continue
        want = _value_at_infinity(h, x, s)
        if h.values[x] != want:
            failures.append("eq3")
            notes.append(f"eq3: H{p} = {h.values[x]} but the ∞-slice value is {want}")
            break

    return Classification(
        cls.kind, cls.corner, not failures, tuple(failures), eq1_checked, tuple(notes)
    )


def special_consequences_hold(h: HTable, cls: Classification) -> bool:
    """H(s) = 0 and H(s - e_B) = 1 for each nonempty B; implied by being special."""
    if not cls.special:
        return False
    if h[cls.corner] != 0:
        return False
    return all(h[minus_eB(cls.corner, B)] == 1 for B in subsets(h.n) if B)


def invariants_from_classification(
    h: HTable, cls: Classification, n: int | None = None, genera: tuple[int, ...] | None = None
) -> InvariantReport:
    n = h.n if n is None else n
    try:
        gen = component_genera(h, genera) or ()
    except BoxTooSmallError:
        gen = ()
    if cls.special:
        total = sum(cls.corner.doubled)
        assert total % 2 == 0
        total //= 2
        return InvariantReport(
            Tri.YES, Tri.YES, Tri.YES, total - (n - 1), total, total, total, tuple(gen),
            ("special: fibered and strongly quasi-positive",),
        )
    if n == 2:
        return InvariantReport(
            fibered_and_sqp=Tri.NO, component_genera=tuple(gen),
            notes=("2 components, not special: not both fibered and strongly quasi-positive",),
        )
    return InvariantReport(component_genera=tuple(gen), notes=("not special: no verdict for n != 2",))


def refine_with_fibered(report: InvariantReport, fibered: Tri, s_top: int | None, n: int) -> InvariantReport:
    """Fold in an independent fiberedness verdict (from ĤFL at the top grading)."""
    if report.fibered is Tri.YES or fibered is Tri.UNKNOWN:
        return report
    sqp = report.sqp
    notes = list(report.notes)
    if fibered is Tri.YES and report.fibered_and_sqp is Tri.NO:
        sqp = Tri.NO
        notes.append("fibered but not special: not strongly quasi-positive")
    g3 = report.g3_link
    if fibered is Tri.YES and s_top is not None and g3 is None:
        g3 = s_top - (n - 1)
        notes.append("fibered: g3 = s_top - (n - 1)")
    return InvariantReport(
        fibered, sqp, report.fibered_and_sqp, g3, report.tau, report.nu_plus,
        s_top if report.s_top is None else report.s_top, report.component_genera, tuple(notes),
    )


def qp_obstruction(q: QPInput) -> QPVerdict:
    """Obstruct quasi-positivity of a 2-component link or its mirror from τ.

    Mirror check: a quasi-positive mirror would need ``chi_4 = 2 - 2 tau(mirror)``,
    impossible above 2.  Self-linking check (unknotted components, total
    linking zero): a quasi-positive link has maximal self-linking
    ``2 tau - 2``, which must not exceed ``2 * SL(unknot) = -2``.
    """
    if q.n != 2:
        raise SchemaError("n must be 2")
    mirror = 2 * q.mirror_tau - 2 < -2
    applies = q.components_unknotted and q.total_linking_zero
    self_linking = (2 * q.tau - 2 > -2) if applies else None
    reasons = []
    if self_linking:
        reasons.append("self-linking bound")
    if mirror:
        reasons.append("mirror chi4 bound")
    return QPVerdict(
        bool(reasons), " + ".join(reasons) if reasons else "no obstruction applies", mirror, self_linking
    )
