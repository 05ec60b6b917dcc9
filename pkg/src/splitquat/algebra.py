"""Split-quaternion arithmetic, i.e. the real Clifford algebra Cl(1,1).

Elements are written ``x0 + x1*i + x2*j + x3*ij`` with

    i*i = -1,   j*j = +1,   (ij)*(ij) = +1,   ij = -ji.

Coordinates may be exact (``int``/``Fraction``) or binary floats; every
operation is generic over the scalar type. The same product formula is shared
by the polynomial maps and the vectorised quadrature code through
:func:`mul_coords`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Number, Rational
from typing import Sequence

__all__ = [
    "BASIS_NAMES",
    "ComplexCl",
    "Matrix2",
    "NullElement",
    "SplitQuaternion",
    "conjugate",
    "from_matrix",
    "idempotent",
    "inverse",
    "mul_coords",
    "multiply",
    "quadratic_form",
    "to_matrix",
]

BASIS_NAMES = ("1", "i", "j", "k")


class NullElement(ZeroDivisionError):
    """Raised when inverting an element on the null cone Q(Z) = 0."""


def mul_coords(a: Sequence, b: Sequence) -> tuple:
    """Product of two coordinate 4-tuples under the Cl(1,1) table.

    Works for anything supporting ``+``, ``-`` and ``*``: rationals, floats,
    numpy arrays, complex numbers and polynomials.
    """
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 + a2 * b2 + a3 * b3,
        a0 * b1 + a1 * b0 - a2 * b3 + a3 * b2,
        a0 * b2 + a2 * b0 - a1 * b3 + a3 * b1,
        a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
    )


def _coerce(value):
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, (Fraction, float)):
        return value
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, Number):
        return float(value)
    raise TypeError(f"unsupported scalar {value!r}")


@dataclass(frozen=True)
class SplitQuaternion:
    """An element x0 + x1 i + x2 j + x3 ij of Cl(1,1)."""

    x0: Fraction | float = Fraction(0)
    x1: Fraction | float = Fraction(0)
    x2: Fraction | float = Fraction(0)
    x3: Fraction | float = Fraction(0)

    def __post_init__(self):
        for name in ("x0", "x1", "x2", "x3"):
            object.__setattr__(self, name, _coerce(getattr(self, name)))

    @classmethod
    def from_coords(cls, coords: Sequence) -> SplitQuaternion:
        x0, x1, x2, x3 = coords
        return cls(x0, x1, x2, x3)

    @classmethod
    def scalar(cls, value) -> SplitQuaternion:
        return cls(value, 0, 0, 0)

    @classmethod
    def basis(cls, index: int) -> SplitQuaternion:
        coords = [0, 0, 0, 0]
        coords[index] = 1
        return cls.from_coords(coords)

    @property
    def coords(self) -> tuple:
        return (self.x0, self.x1, self.x2, self.x3)

    def __iter__(self):
        return iter(self.coords)

    def is_exact(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other):
        other = _as_element(other)
        if other is NotImplemented:
            return other
        return SplitQuaternion.from_coords(
            [p + q for p, q in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return SplitQuaternion.from_coords([-c for c in self.coords])

    def __sub__(self, other):
        other = _as_element(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SplitQuaternion):
            return multiply(self, other)
        if isinstance(other, (Number,)) and not isinstance(other, bool):
            s = _coerce(other)
            return SplitQuaternion.from_coords([c * s for c in self.coords])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Number) and not isinstance(other, bool):
            s = _coerce(other)
            return SplitQuaternion.from_coords([s * c for c in self.coords])
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, SplitQuaternion):
            return self * inverse(other)
        s = _coerce(other)
        return SplitQuaternion.from_coords([c / s for c in self.coords])

    def __pow__(self, n: int):
        if n < 0:
            return inverse(self) ** (-n)
        result = SplitQuaternion.scalar(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> SplitQuaternion:
        return conjugate(self)

    def norm_q(self):
        return quadratic_form(self)

    def __float__(self):
        if any(c != 0 for c in self.coords[1:]):
            raise TypeError("only scalar elements convert to float")
        return float(self.x0)

    def to_float(self) -> SplitQuaternion:
        return SplitQuaternion.from_coords([float(c) for c in self.coords])

    def __str__(self):
        from .syntax import format_element

        return format_element(self)


def _as_element(value):
    if isinstance(value, SplitQuaternion):
        return value
    if isinstance(value, Number) and not isinstance(value, bool):
        return SplitQuaternion.scalar(value)
    return NotImplemented


def multiply(a: SplitQuaternion, b: SplitQuaternion) -> SplitQuaternion:
    """Bilinear Cl(1,1) product ``a*b`` (associative, not commutative)."""
    return SplitQuaternion.from_coords(mul_coords(a.coords, b.coords))


def conjugate(z: SplitQuaternion) -> SplitQuaternion:
    """Negate the i, j and ij parts, so that z * conj(z) = Q(z)."""
    return SplitQuaternion(z.x0, -z.x1, -z.x2, -z.x3)


def quadratic_form(z: SplitQuaternion):
    """The indefinite form x0^2 + x1^2 - x2^2 - x3^2 of signature (2, 2)."""
    return z.x0 * z.x0 + z.x1 * z.x1 - z.x2 * z.x2 - z.x3 * z.x3


def inverse(z: SplitQuaternion) -> SplitQuaternion:
    q = quadratic_form(z)
    if q == 0:
        raise NullElement(f"{z} lies on the null cone and has no inverse")
    return conjugate(z) / q


def idempotent(sign: str | int) -> SplitQuaternion:
    """Return j+ = (1 + j)/2 for ``sign`` in {'+', 1} and j- = (1 - j)/2 otherwise."""
    if sign in ("+", 1, "plus"):
        return SplitQuaternion(Fraction(1, 2), 0, Fraction(1, 2), 0)
    if sign in ("-", -1, "minus"):
        return SplitQuaternion(Fraction(1, 2), 0, Fraction(-1, 2), 0)
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


@dataclass(frozen=True)
class Matrix2:
    """Real 2x2 matrix [[y1, y2], [y3, y4]]."""

    y1: Fraction | float
    y2: Fraction | float
    y3: Fraction | float
    y4: Fraction | float

    def __post_init__(self):
        for name in ("y1", "y2", "y3", "y4"):
            object.__setattr__(self, name, _coerce(getattr(self, name)))

    def __matmul__(self, other: Matrix2) -> Matrix2:
        return Matrix2(
            self.y1 * other.y1 + self.y2 * other.y3,
            self.y1 * other.y2 + self.y2 * other.y4,
            self.y3 * other.y1 + self.y4 * other.y3,
            self.y3 * other.y2 + self.y4 * other.y4,
        )

    def det(self):
        return self.y1 * self.y4 - self.y2 * self.y3

    def rows(self) -> list[list]:
        return [[self.y1, self.y2], [self.y3, self.y4]]


# Images of 1, i, j; ij is sent to image(i) @ image(j) = [[-1, 0], [0, 1]].
def to_matrix(z: SplitQuaternion) -> Matrix2:
    """Algebra isomorphism Cl(1,1) -> M_2(R).

    1 -> I, i -> [[0, -1], [1, 0]], j -> [[0, 1], [1, 0]], ij -> [[-1, 0], [0, 1]].
    """
    x0, x1, x2, x3 = z.coords
    return Matrix2(x0 - x3, -x1 + x2, x1 + x2, x0 + x3)


def from_matrix(m: Matrix2) -> SplitQuaternion:
    """Two-sided inverse of :func:`to_matrix`."""
    half = Fraction(1, 2) if all(isinstance(y, Fraction) for y in (m.y1, m.y2, m.y3, m.y4)) else 0.5
    return SplitQuaternion(
        half * (m.y1 + m.y4),
        half * (m.y3 - m.y2),
        half * (m.y2 + m.y3),
        half * (m.y4 - m.y1),
    )


@dataclass(frozen=True)
class ComplexCl:
    """Cl(1,1) element with complex coordinates (eight real numbers).

    Needed where a commuting imaginary unit enters the scalars, as in the
    regularised Cauchy kernel. The commuting unit is unrelated to the algebra's
    ``i``.
    """

    z0: complex = 0j
    z1: complex = 0j
    z2: complex = 0j
    z3: complex = 0j

    @classmethod
    def from_parts(cls, real: SplitQuaternion, imag: SplitQuaternion | None = None) -> ComplexCl:
        imag = imag if imag is not None else SplitQuaternion()
        return cls(*(complex(float(r), float(m)) for r, m in zip(real.coords, imag.coords)))

    @property
    def coords(self) -> tuple:
        return (self.z0, self.z1, self.z2, self.z3)

    @property
    def real(self) -> SplitQuaternion:
        return SplitQuaternion.from_coords([c.real for c in self.coords])

    @property
    def imag(self) -> SplitQuaternion:
        return SplitQuaternion.from_coords([c.imag for c in self.coords])

    def to_split(self) -> SplitQuaternion:
        if any(c.imag != 0 for c in self.coords):
            raise ValueError("element has a nonzero imaginary part")
        return self.real

    def __add__(self, other: ComplexCl) -> ComplexCl:
        return ComplexCl(*(p + q for p, q in zip(self.coords, other.coords)))

    def __sub__(self, other: ComplexCl) -> ComplexCl:
        return ComplexCl(*(p - q for p, q in zip(self.coords, other.coords)))

    def __mul__(self, other):
        if isinstance(other, ComplexCl):
            return ComplexCl(*mul_coords(self.coords, other.coords))
        if isinstance(other, SplitQuaternion):
            return ComplexCl(*mul_coords(self.coords, [float(c) for c in other.coords]))
        if isinstance(other, Number):
            return ComplexCl(*(c * other for c in self.coords))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, SplitQuaternion):
            return ComplexCl(*mul_coords([float(c) for c in other.coords], self.coords))
        if isinstance(other, Number):
            return ComplexCl(*(other * c for c in self.coords))
        return NotImplemented
