"""Exact sparse polynomials in four variables and Cl(1,1)-valued polynomial maps."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Number, Rational
from typing import Callable, Iterable, Mapping, Sequence

from .algebra import SplitQuaternion, mul_coords

__all__ = [
    "CliffordPolyMap",
    "NULL_VARS",
    "NullForm",
    "Poly4",
    "X_VARS",
    "from_null_coordinates",
    "to_null_coordinates",
]

X_VARS = ("x0", "x1", "x2", "x3")
NULL_VARS = ("u0", "v0", "u1", "v1")

Exponent = tuple  # (e0, e1, e2, e3)


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)) and not isinstance(c, bool):
        return Fraction(c)
    if isinstance(c, float):
        return Fraction(c)
    raise TypeError(f"coefficient must be rational, got {c!r}")


def _grlex_key(exponent: Exponent):
    return (sum(exponent), exponent)


class Poly4:
    """Polynomial in four variables with exact rational coefficients.

    Stored as a mapping from exponent 4-tuples to nonzero ``Fraction``s.
    Values are treated as immutable. The zero polynomial has degree -1.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, object] | None = None):
        clean = {}
        for exp, coef in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != 4 or min(exp) < 0:
                raise ValueError(f"bad exponent {exp!r}")
            c = _frac(coef)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> Poly4:
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> Poly4:
        return cls({(0, 0, 0, 0): c})

    @classmethod
    def var(cls, axis: int) -> Poly4:
        exp = [0, 0, 0, 0]
        exp[axis] = 1
        return cls({tuple(exp): 1})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coef=1) -> Poly4:
        return cls({tuple(exponent): coef})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in graded-lex order, leading term first."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def variables(self) -> set[int]:
        return {k for e in self._terms for k in range(4) if e[k]}

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0, 0, 0, 0))

    # ring structure ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly4):
            return other
        if isinstance(other, Number) and not isinstance(other, bool):
            return Poly4.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return Poly4._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly4._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Number) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Poly4):
            return NotImplemented
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly4._raw(out)

    def __rmul__(self, other):
        if isinstance(other, Number) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> Poly4:
        c = _frac(c)
        if not c:
            return Poly4()
        return Poly4._raw({e: c * v for e, v in self._terms.items()})

    def __truediv__(self, c):
        return self.scale(1 / _frac(c))

    def __pow__(self, n: int) -> Poly4:
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly4.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # calculus and evaluation ------------------------------------------------

    def diff(self, axis: int, times: int = 1) -> Poly4:
        p = self
        for _ in range(times):
            out = {}
            for e, c in p._terms.items():
                k = e[axis]
                if k:
                    ne = list(e)
                    ne[axis] = k - 1
                    out[tuple(ne)] = c * k
            p = Poly4._raw(out)
        return p

    def evaluate(self, point: Sequence):
        """Evaluate at ``point``.

        Exact when every coordinate is an int or ``Fraction``; otherwise the
        coefficients are converted to float, which also allows numpy arrays.
        """
        if len(point) != 4:
            raise ValueError("point needs four coordinates")
        exact = all(isinstance(x, (int, Fraction)) and not isinstance(x, bool) for x in point)
        total = Fraction(0) if exact else 0.0
        powers: list[dict] = [{}, {}, {}, {}]
        for e, c in self._terms.items():
            term = c if exact else float(c)
            for k in range(4):
                if e[k]:
                    cache = powers[k]
                    if e[k] not in cache:
                        cache[e[k]] = point[k] ** e[k]
                    term = term * cache[e[k]]
            total = total + term
        return total

    def substitute(self, images: Sequence[Poly4]) -> Poly4:
        """Compose: replace variable k by the polynomial ``images[k]``."""
        result = Poly4()
        cache: list[dict] = [{}, {}, {}, {}]
        for e, c in self._terms.items():
            term = Poly4.const(c)
            for k in range(4):
                if e[k]:
                    if e[k] not in cache[k]:
                        cache[k][e[k]] = images[k] ** e[k]
                    term = term * cache[k][e[k]]
            result = result + term
        return result

    def restrict(self, values: Mapping[int, object]) -> Poly4:
        """Fix some variables to rational values, keeping the rest symbolic."""
        images = [Poly4.const(values[k]) if k in values else Poly4.var(k) for k in range(4)]
        return self.substitute(images)

    def map_coefficients(self, fn: Callable[[Fraction], object]) -> Poly4:
        return Poly4({e: fn(c) for e, c in self._terms.items()})

    # text ---------------------------------------------------------------------

    def to_string(self, names: Sequence[str] = X_VARS) -> str:
        from .syntax import format_poly

        return format_poly(self, names)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Poly4({self.to_string()!r})"


def _as_poly(p) -> Poly4:
    if isinstance(p, Poly4):
        return p
    return Poly4.const(p)


@dataclass(frozen=True)
class CliffordPolyMap:
    """F = f0 + f1 i + f2 j + f3 ij with polynomial components."""

    f0: Poly4
    f1: Poly4
    f2: Poly4
    f3: Poly4

    def __post_init__(self):
        for name in ("f0", "f1", "f2", "f3"):
            object.__setattr__(self, name, _as_poly(getattr(self, name)))

    @classmethod
    def from_components(cls, comps: Iterable) -> CliffordPolyMap:
        f0, f1, f2, f3 = comps
        return cls(f0, f1, f2, f3)

    @classmethod
    def zero(cls) -> CliffordPolyMap:
        return cls(Poly4(), Poly4(), Poly4(), Poly4())

    @classmethod
    def constant(cls, value: SplitQuaternion) -> CliffordPolyMap:
        return cls.from_components(Poly4.const(c) for c in value.coords)

    @classmethod
    def scalar(cls, p: Poly4) -> CliffordPolyMap:
        return cls(p, Poly4(), Poly4(), Poly4())

    @classmethod
    def identity(cls) -> CliffordPolyMap:
        """The map Z -> Z."""
        return cls.from_components(Poly4.var(k) for k in range(4))

    @property
    def components(self) -> tuple:
        return (self.f0, self.f1, self.f2, self.f3)

    def __iter__(self):
        return iter(self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def degree(self) -> int:
        return max(c.degree() for c in self.components)

    def variables(self) -> set[int]:
        return set().union(*(c.variables() for c in self.components))

    def __add__(self, other: CliffordPolyMap) -> CliffordPolyMap:
        return CliffordPolyMap.from_components(p + q for p, q in zip(self, other))

    def __sub__(self, other: CliffordPolyMap) -> CliffordPolyMap:
        return CliffordPolyMap.from_components(p - q for p, q in zip(self, other))

    def __neg__(self) -> CliffordPolyMap:
        return CliffordPolyMap.from_components(-p for p in self)

    def __mul__(self, other):
        """Right multiplication by a constant element, a scalar or another map."""
        if isinstance(other, SplitQuaternion):
            return CliffordPolyMap.from_components(mul_coords(self.components, other.coords))
        if isinstance(other, CliffordPolyMap):
            return CliffordPolyMap.from_components(mul_coords(self.components, other.components))
        if isinstance(other, (Poly4, Number)) and not isinstance(other, bool):
            return CliffordPolyMap.from_components(p * other for p in self)
        return NotImplemented

    def __rmul__(self, other):
        """Left multiplication by a constant element or a scalar."""
        if isinstance(other, SplitQuaternion):
            return CliffordPolyMap.from_components(mul_coords(other.coords, self.components))
        if isinstance(other, (Poly4, Number)) and not isinstance(other, bool):
            return CliffordPolyMap.from_components(other * p for p in self)
        return NotImplemented

    def diff(self, axis: int) -> CliffordPolyMap:
        return CliffordPolyMap.from_components(p.diff(axis) for p in self)

    def evaluate(self, point: Sequence) -> SplitQuaternion | tuple:
        """Value at ``point``; a tuple of arrays when the point holds arrays."""
        values = tuple(p.evaluate(point) for p in self)
        try:
            return SplitQuaternion.from_coords(values)
        except TypeError:
            return values

    def substitute(self, images: Sequence[Poly4]) -> CliffordPolyMap:
        return CliffordPolyMap.from_components(p.substitute(images) for p in self)

    def restrict(self, values: Mapping[int, object]) -> CliffordPolyMap:
        return CliffordPolyMap.from_components(p.restrict(values) for p in self)

    def __str__(self):
        from .syntax import format_map

        return format_map(self)


# x-coordinates in terms of null coordinates (u0, v0, u1, v1) and back.
_HALF = Fraction(1, 2)
_U0, _V0, _U1, _V1 = (Poly4.var(k) for k in range(4))
_X_OF_NULL = (
    (_U0 + _V0) * _HALF,  # x0
    (_U1 + _V1) * _HALF,  # x1
    (_U0 - _V0) * _HALF,  # x2
    (_U1 - _V1) * _HALF,  # x3
)
_X = [Poly4.var(k) for k in range(4)]
_NULL_OF_X = (_X[0] + _X[2], _X[0] - _X[2], _X[1] + _X[3], _X[1] - _X[3])


@dataclass(frozen=True)
class NullForm:
    """F = (F0 j+ + F1 j-) + i (F2 j+ + F3 j-), components in (u0, v0, u1, v1).

    With u0 = x0 + x2, v0 = x0 - x2, u1 = x1 + x3, v1 = x1 - x3 and
    F0 = f0 + f2, F1 = f0 - f2, F2 = f1 + f3, F3 = f1 - f3.
    """

    F0: Poly4
    F1: Poly4
    F2: Poly4
    F3: Poly4

    @property
    def components(self) -> tuple:
        return (self.F0, self.F1, self.F2, self.F3)

    def __str__(self):
        from .syntax import format_poly

        return " ; ".join(format_poly(p, NULL_VARS) for p in self.components)


def to_null_coordinates(F: CliffordPolyMap) -> NullForm:
    g = [p.substitute(_X_OF_NULL) for p in F]
    return NullForm(g[0] + g[2], g[0] - g[2], g[1] + g[3], g[1] - g[3])


def from_null_coordinates(N: NullForm) -> CliffordPolyMap:
    h = [p.substitute(_NULL_OF_X) for p in N.components]
    return CliffordPolyMap(
        (h[0] + h[1]) * _HALF,
        (h[2] + h[3]) * _HALF,
        (h[0] - h[1]) * _HALF,
        (h[2] - h[3]) * _HALF,
    )
