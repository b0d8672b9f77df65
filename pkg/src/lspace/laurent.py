"""Exact Laurent polynomials and downward series in half-integer exponents.

Exponents are doubled integers (``t^{1/2}`` has exponent ``(1,)``).  A series
with a ``floor`` stands for a downward-infinite expansion of which only the
coefficients at exponents ``>= floor`` (componentwise) are known.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import SchemaError

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class LaurentSeries:
    n: int
    terms: Mapping[Exponent, int] = field(default_factory=dict)
    floor: Exponent | None = None

    def __post_init__(self):
        clean = {}
        for e, c in self.terms.items():
            e = tuple(int(x) for x in e)
            if len(e) != self.n:
                raise SchemaError(f"exponent {e} has wrong length for n={self.n}")
            if self.floor is not None and not _geq(e, self.floor):
                continue
            if c:
                clean[e] = int(c)
        parities = {tuple(x % 2 for x in e) for e in clean}
        if len(parities) > 1:
            raise SchemaError("exponent vectors do not share a per-axis parity")
        object.__setattr__(self, "terms", dict(sorted(clean.items())))
        if self.floor is not None:
            object.__setattr__(self, "floor", tuple(int(x) for x in self.floor))

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: int = 1) -> "LaurentSeries":
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def one(cls, n: int) -> "LaurentSeries":
        return cls(n, {(0,) * n: 1})

    @property
    def is_finite(self) -> bool:
        return self.floor is None

    @property
    def parity(self) -> tuple[int, ...] | None:
        for e in self.terms:
            return tuple(x % 2 for x in e)
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def support_bounds(self) -> tuple[Exponent, Exponent] | None:
        """Componentwise (min, max) of the stored exponents."""
        if not self.terms:
            return None
        exps = list(self.terms)
        lo = tuple(min(e[i] for e in exps) for i in range(self.n))
        hi = tuple(max(e[i] for e in exps) for i in range(self.n))
        return lo, hi

    def __neg__(self):
        return LaurentSeries(self.n, {e: -c for e, c in self.terms.items()}, self.floor)

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        _same_dim(self, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentSeries(self.n, out, _max_floor(self.floor, other.floor))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return multiply(self, other)

    def shift(self, delta: Sequence[int]) -> "LaurentSeries":
        """Multiply by the monomial with doubled exponent ``delta``."""
        floor = None if self.floor is None else _add(self.floor, delta)
        return LaurentSeries(self.n, {_add(e, delta): c for e, c in self.terms.items()}, floor)

    def symmetry_sign(self) -> int | None:
        """Return +1/-1 if ``f(t^-1) = ±f(t)``, None if neither (0 counts as +1)."""
        if self.floor is not None:
            return None
        for sign in (1, -1):
            if all(self.terms.get(tuple(-x for x in e), 0) == sign * c for e, c in self.terms.items()):
                return sign
        return None

    def to_terms(self) -> list[dict]:
        return [{"exp2": list(e), "coeff": c} for e, c in self.terms.items()]

    @classmethod
    def from_terms(cls, n: int, terms: Sequence[Mapping]) -> "LaurentSeries":
        out: dict[Exponent, int] = {}
        for t in terms:
            try:
                e = tuple(int(x) for x in t["exp2"])
                c = int(t["coeff"])
            except (KeyError, TypeError, ValueError) as exc:
                raise SchemaError(f"bad term {t!r}") from exc
            out[e] = out.get(e, 0) + c
        return cls(n, out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"t{i + 1}^{_fmt(x)}" if self.n > 1 else f"t^{_fmt(x)}" for i, x in enumerate(e) if x
            )
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        s = " + ".join(parts).replace("+ -", "- ")
        return s + (" + ..." if self.floor is not None else "")


def _fmt(d):
    return str(d // 2) if d % 2 == 0 else f"({d}/2)"


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _geq(a, b):
    return all(x >= y for x, y in zip(a, b))


def _max_floor(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return tuple(max(x, y) for x, y in zip(a, b))


def _same_dim(a, b):
    if a.n != b.n:
        raise SchemaError(f"dimension mismatch {a.n} vs {b.n}")


def multiply(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    """Exact convolution; at most one factor may be a downward series."""
    _same_dim(a, b)
    if a.floor is not None and b.floor is not None:
        raise SchemaError("product of two downward-infinite series is not defined termwise")
    if a.floor is not None:
        a, b = b, a
    floor = None
    if b.floor is not None:
        # a is finite; coefficients of the product are exact only where every
        # contributing b-exponent lies above b's floor.
        bounds = a.support_bounds()
        top = bounds[1] if bounds else (0,) * a.n
        floor = _add(b.floor, top)
    out: dict[Exponent, int] = {}
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            e = _add(ea, eb)
            out[e] = out.get(e, 0) + ca * cb
    return LaurentSeries(a.n, out, floor)


def normalize_alexander(delta: LaurentSeries, n: int | None = None, floor: int | None = None) -> LaurentSeries:
    """Turn a symmetric Alexander polynomial into the generating function of χ(HFL⁻).

    For links (``n > 1``) this multiplies by ``(t_1 ... t_n)^{1/2}``.  For knots it
    divides by ``1 - t^{-1}`` expanded in ``t^{-1}``; ``floor`` is the lowest
    exponent (actual value, not doubled) that will be read, defaulting to one
    below the polynomial's own lowest exponent.
    """
    n = delta.n if n is None else n
    if n != delta.n:
        raise SchemaError(f"polynomial has {delta.n} variables, expected {n}")
    if not delta.is_finite:
        raise SchemaError("expected a polynomial, got a truncated series")
    if delta.symmetry_sign() is None:
        raise SchemaError(f"Alexander polynomial is not symmetric about the origin: {delta}")
    if n > 1:
        return delta.shift((1,) * n)
    if any(e[0] % 2 for e in delta.terms):
        raise SchemaError("knot Alexander polynomial must have integer exponents")
    if floor is None:
        bounds = delta.support_bounds()
        floor = (bounds[0][0] // 2 if bounds else 0) - 1
    # coefficient at s is the tail sum of delta's coefficients at exponents >= s
    coeffs = {e[0] // 2: c for e, c in delta.terms.items()}
    top = max(coeffs, default=floor)
    out = {}
    running = 0
    for s in range(top, floor - 1, -1):
        running += coeffs.get(s, 0)
        out[(2 * s,)] = running
    return LaurentSeries(1, out, (2 * floor,))


def coefficient(series: LaurentSeries, e: Sequence[int]) -> int:
    """Coefficient at the doubled exponent ``e``; 0 if absent."""
    e = tuple(e)
    if len(e) != series.n:
        raise SchemaError(f"exponent {e} has wrong length for n={series.n}")
    if series.floor is not None and not _geq(e, series.floor):
        raise SchemaError(f"exponent {e} lies below the truncation floor {series.floor}")
    return series.terms.get(e, 0)


def geometric_series(floor: int) -> LaurentSeries:
    """``1 + t^{-1} + t^{-2} + ...`` known down to ``t^floor`` (floor <= 0)."""
    return LaurentSeries(1, {(2 * k,): 1 for k in range(floor, 1)}, (2 * floor,))
