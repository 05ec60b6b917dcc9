"""Constructors for Cl(1,1)-valued polynomial maps with known regularity."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Literal

from .algebra import SplitQuaternion
from .operators import apply_D, apply_operator, is_ultrahyperbolic, laplacian
from .polynomial import CliffordPolyMap, Poly4, to_null_coordinates, _NULL_OF_X

__all__ = [
    "AffineSpec",
    "NotUltrahyperbolic",
    "OneClassSpec",
    "VariableViolation",
    "affine",
    "ck_extend_2d",
    "ck_extend_3d",
    "grad_ultrahyperbolic",
    "oneclass_construct",
    "oneclass_detect",
]

# slots of (u0, v0, u1, v1) inside a null-coordinate Poly4
U_SLOTS = frozenset({0, 2})
V_SLOTS = frozenset({1, 3})


class VariableViolation(ValueError):
    """Input depends on a variable the construction does not allow."""


class NotUltrahyperbolic(ValueError):
    """Scalar input does not satisfy John's equation."""


@dataclass(frozen=True)
class AffineSpec:
    A: SplitQuaternion
    K: SplitQuaternion = SplitQuaternion()
    side: Literal["left_mul", "right_mul"] = "left_mul"


def affine(spec: AffineSpec) -> CliffordPolyMap:
    """A Z + K (``left_mul``) or Z A + K (``right_mul``)."""
    Z = CliffordPolyMap.identity()
    if spec.side == "left_mul":
        F = spec.A * Z
    elif spec.side == "right_mul":
        F = Z * spec.A
    else:
        raise ValueError(f"side must be 'left_mul' or 'right_mul', got {spec.side!r}")
    return F + CliffordPolyMap.constant(spec.K)


def grad_ultrahyperbolic(f: Poly4) -> CliffordPolyMap:
    """d f for an ultra-hyperbolic scalar f; the result is left and right regular."""
    if not is_ultrahyperbolic(f):
        raise NotUltrahyperbolic(f"{f} is not annihilated by the ultra-hyperbolic Laplacian")
    return apply_operator(CliffordPolyMap.scalar(f), "d", "left")


@dataclass(frozen=True)
class OneClassSpec:
    """Four bivariate polynomials written in null-coordinate slots (u0, v0, u1, v1).

    g1 and g4 may use only u0, u1; g2 and g3 only v0, v1.
    """

    g1: Poly4 = Poly4()
    g2: Poly4 = Poly4()
    g3: Poly4 = Poly4()
    g4: Poly4 = Poly4()

    def __post_init__(self):
        for name, allowed in (("g1", U_SLOTS), ("g2", V_SLOTS), ("g3", V_SLOTS), ("g4", U_SLOTS)):
            extra = getattr(self, name).variables() - allowed
            if extra:
                raise VariableViolation(f"{name} may only depend on "
                                        f"{'u0, u1' if allowed == U_SLOTS else 'v0, v1'}")


def oneclass_construct(spec: OneClassSpec) -> CliffordPolyMap:
    """Assemble (g1 + g2) + (g3 + g4) i + (g1 - g2) j + (g3 - g4) ij.

    Each g is evaluated at u0 = x0 + x2, u1 = x1 + x3 or v0 = x0 - x2, v1 = x1 - x3.
    The result is always left regular.
    """
    g1, g2, g3, g4 = (g.substitute(_NULL_OF_X) for g in (spec.g1, spec.g2, spec.g3, spec.g4))
    return CliffordPolyMap(g1 + g2, g3 + g4, g1 - g2, g3 - g4)


def oneclass_detect(F: CliffordPolyMap) -> bool:
    """Whether F has the null-coordinate separated form built by :func:`oneclass_construct`."""
    N = to_null_coordinates(F)
    return (
        N.F0.variables() <= U_SLOTS
        and N.F3.variables() <= U_SLOTS
        and N.F1.variables() <= V_SLOTS
        and N.F2.variables() <= V_SLOTS
    )


def oneclass_decompose(F: CliffordPolyMap) -> OneClassSpec | None:
    """Recover (g1, g2, g3, g4) from a map in the separated class, else None."""
    if not oneclass_detect(F):
        return None
    N = to_null_coordinates(F)
    half = Fraction(1, 2)
    return OneClassSpec(N.F0 * half, N.F1 * half, N.F2 * half, N.F3 * half)


def _as_map(g) -> CliffordPolyMap:
    return g if isinstance(g, CliffordPolyMap) else CliffordPolyMap.scalar(g)


def _require_variables(g: CliffordPolyMap, allowed: set[int]):
    extra = g.variables() - allowed
    if extra:
        names = ", ".join(f"x{k}" for k in sorted(extra))
        raise VariableViolation(f"input must not depend on {names}")


def ck_extend_2d(g) -> CliffordPolyMap:
    """Left-regular extension of g(x2, x3) off the plane x0 = x1 = 0.

    Sums d[(x0^(2k+1) + x1^(2k+1)) / (2k+1)! * Lap^k g] with Lap = d2^2 + d3^2,
    stopping once Lap^k g vanishes. On the plane the result equals g - i g.
    """
    g = _as_map(g)
    _require_variables(g, {2, 3})
    x0, x1 = Poly4.var(0), Poly4.var(1)
    cap = g.degree() + 2
    total = CliffordPolyMap.zero()
    lap_k = g
    k = 0
    while not lap_k.is_zero():
        if k > cap:
            raise RuntimeError("Laplacian powers failed to terminate")
        weight = (x0 ** (2 * k + 1) + x1 ** (2 * k + 1)) * Fraction(1, factorial(2 * k + 1))
        total = total + lap_k * weight
        lap_k = laplacian(lap_k, "plane_x2x3")
        k += 1
    return apply_operator(total, "d", "left")


def ck_extend_3d(g) -> CliffordPolyMap:
    """Cauchy-Kowalewski extension of g(x1, x2, x3) off the hyperplane x0 = 0.

    f = sum_k (-x0)^k / k! * D^k g with D = dbar - d/dx0. The series is finite
    for polynomial g; f is left regular and f(0, x1, x2, x3) = g.
    """
    g = _as_map(g)
    _require_variables(g, {1, 2, 3})
    minus_x0 = -Poly4.var(0)
    cap = g.degree() + 2
    total = CliffordPolyMap.zero()
    term = g
    k = 0
    while not term.is_zero():
        if k > cap:
            raise RuntimeError("powers of D failed to terminate")
        total = total + term * (minus_x0 ** k * Fraction(1, factorial(k)))
        term = apply_D(term)
        k += 1
    return total
