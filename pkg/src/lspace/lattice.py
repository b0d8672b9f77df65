"""Half-integer affine lattices and boxes in them.

Every coordinate is stored doubled, so ``1/2`` is the integer ``1`` and a
unit step along an axis is ``2``.  Nothing here ever touches a float.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import SchemaError


@dataclass(frozen=True, order=True)
class HalfInt:
    """A number in ``Z/2``, stored as twice its value."""

    doubled: int

    @classmethod
    def parse(cls, text) -> "HalfInt":
        value = Fraction(str(text).strip())
        if (2 * value).denominator != 1:
            raise SchemaError(f"{text!r} is not a half-integer")
        return cls(int(2 * value))

    @property
    def value(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def __str__(self):
        return format_doubled(self.doubled)


def format_doubled(d: int) -> str:
    return str(d // 2) if d % 2 == 0 else f"{d}/2"


@dataclass(frozen=True, order=True)
class LatticePoint:
    """A point of the lattice, ``doubled[i]`` being twice the i-th coordinate."""

    doubled: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "doubled", tuple(int(x) for x in self.doubled))
        if not self.doubled:
            raise SchemaError("a lattice point needs at least one coordinate")

    @classmethod
    def of(cls, *values) -> "LatticePoint":
        """Build from actual coordinate values (ints, Fractions or "1/2" strings)."""
        return cls(tuple(HalfInt.parse(v).doubled for v in values))

    @property
    def n(self) -> int:
        return len(self.doubled)

    @property
    def coords(self) -> tuple[HalfInt, ...]:
        return tuple(HalfInt(d) for d in self.doubled)

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(d, 2) for d in self.doubled)

    @property
    def parity(self) -> tuple[int, ...]:
        return tuple(d % 2 for d in self.doubled)

    def doubled_sum(self) -> int:
        return sum(self.doubled)

    def shifted(self, delta: Sequence[int]) -> "LatticePoint":
        """Add a doubled offset vector."""
        return LatticePoint(tuple(a + b for a, b in zip(self.doubled, delta)))

    def __str__(self):
        return "(" + ",".join(format_doubled(d) for d in self.doubled) + ")"


def _check_compatible(a: LatticePoint, b: LatticePoint) -> None:
    if a.n != b.n:
        raise SchemaError(f"dimension mismatch: {a} vs {b}")
    if a.parity != b.parity:
        raise SchemaError(f"parity mismatch: {a} vs {b}")


def leq(a: LatticePoint, b: LatticePoint) -> bool:
    """Componentwise order ``a <= b``."""
    _check_compatible(a, b)
    return all(x <= y for x, y in zip(a.doubled, b.doubled))


def minus_eB(s: LatticePoint, B: Iterable[int]) -> LatticePoint:
    """Subtract one from every coordinate indexed by ``B`` (0-based)."""
    B = set(B)
    if any(i < 0 or i >= s.n for i in B):
        raise SchemaError(f"subset {sorted(B)} out of range for dimension {s.n}")
    return LatticePoint(tuple(d - 2 if i in B else d for i, d in enumerate(s.doubled)))


def subsets(n: int, proper: bool = False) -> Iterator[tuple[int, ...]]:
    """All subsets of ``range(n)`` by increasing size; ``proper`` drops the full set."""
    top = n if proper else n + 1
    for k in range(top):
        yield from itertools.combinations(range(n), k)


@dataclass(frozen=True)
class Box:
    """Closed box ``lo <= p <= hi`` of lattice points."""

    lo: LatticePoint
    hi: LatticePoint

    def __post_init__(self):
        _check_compatible(self.lo, self.hi)
        if not leq(self.lo, self.hi):
            raise SchemaError(f"box corners out of order: {self.lo} > {self.hi}")

    @classmethod
    def from_doubled(cls, lo: Sequence[int], hi: Sequence[int]) -> "Box":
        return cls(LatticePoint(tuple(lo)), LatticePoint(tuple(hi)))

    @property
    def n(self) -> int:
        return self.lo.n

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple((h - l) // 2 + 1 for l, h in zip(self.lo.doubled, self.hi.doubled))

    def axis(self, i: int) -> range:
        """Doubled coordinates along axis ``i``, ascending."""
        return range(self.lo.doubled[i], self.hi.doubled[i] + 1, 2)

    def __contains__(self, p: LatticePoint) -> bool:
        return (
            p.n == self.n
            and p.parity == self.lo.parity
            and all(l <= x <= h for l, x, h in zip(self.lo.doubled, p.doubled, self.hi.doubled))
        )

    def __len__(self):
        size = 1
        for k in self.shape:
            size *= k
        return size

    def interior(self) -> "Box | None":
        """Points ``s`` with ``s - 1`` still in the box, or None if there are none."""
        lo = self.lo.shifted([2] * self.n)
        if not all(l <= h for l, h in zip(lo.doubled, self.hi.doubled)):
            return None
        return Box(lo, self.hi)


def iterate_box(box: Box) -> Iterator[LatticePoint]:
    """Visit every point once, by descending coordinate sum then ascending lex order.

    A point is emitted only after every point of the box strictly above it.
    """
    pts = itertools.product(*(box.axis(i) for i in range(box.n)))
    for p in sorted(pts, key=lambda q: (-sum(q), q)):
        yield LatticePoint(p)
