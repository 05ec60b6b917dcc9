"""Symbolic Cl(1,1) differential operators and regularity verdicts.

The two first-order operators are

    dbar = d/dx0 + i d/dx1 - j d/dx2 - ij d/dx3
    d    = d/dx0 - i d/dx1 + j d/dx2 + ij d/dx3

and either can act from the left (coefficient * dF) or from the right
(dF * coefficient). Both products dbar*d and d*dbar equal the ultra-hyperbolic
Laplacian with signature (+, +, -, -).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .algebra import SplitQuaternion
from .polynomial import CliffordPolyMap, Poly4

__all__ = [
    "DIFFERENTIABILITY_CHAINS",
    "OPERATOR_SIGNS",
    "REGULARITY_SYSTEMS",
    "RegularityReport",
    "apply_D",
    "apply_operator",
    "check_differentiable",
    "check_regularity",
    "directional_quotients",
    "is_ultrahyperbolic",
    "laplacian",
    "operator_for",
]

Op = Literal["dbar", "d"]
Side = Literal["left", "right"]

# Sign of the basis element e_m multiplying d/dx_m.
OPERATOR_SIGNS = {
    "dbar": (1, 1, -1, -1),
    "d": (1, -1, 1, 1),
}

_BASIS = [SplitQuaternion.basis(m) for m in range(4)]


def _check_choice(value, allowed, what):
    if value not in allowed:
        raise ValueError(f"{what} must be one of {sorted(allowed)}, got {value!r}")


def apply_operator(F: CliffordPolyMap, op: Op = "dbar", side: Side = "left") -> CliffordPolyMap:
    """Apply ``dbar`` or ``d`` to F from the left or from the right."""
    _check_choice(op, OPERATOR_SIGNS, "op")
    _check_choice(side, ("left", "right"), "side")
    result = CliffordPolyMap.zero()
    for m, sign in enumerate(OPERATOR_SIGNS[op]):
        dF = F.diff(m)
        if dF.is_zero():
            continue
        coef = _BASIS[m] * sign
        term = coef * dF if side == "left" else dF * coef
        result = result + term
    return result


def apply_D(g: CliffordPolyMap) -> CliffordPolyMap:
    """D = dbar - d/dx0 acting from the left: i d/dx1 - j d/dx2 - ij d/dx3."""
    return apply_operator(g, "dbar", "left") - g.diff(0)


_LAPLACE_SIGNS = {
    "four_dim": (1, 1, -1, -1),
    "plane_x2x3": (0, 0, 1, 1),
}


def laplacian(p, kind: str = "four_dim"):
    """Second-order operator on a polynomial or, componentwise, on a map.

    ``four_dim`` is d0^2 + d1^2 - d2^2 - d3^2; ``plane_x2x3`` is d2^2 + d3^2.
    """
    _check_choice(kind, _LAPLACE_SIGNS, "kind")
    if isinstance(p, CliffordPolyMap):
        return CliffordPolyMap.from_components(laplacian(c, kind) for c in p)
    out = Poly4()
    for axis, sign in enumerate(_LAPLACE_SIGNS[kind]):
        if sign:
            out = out + p.diff(axis, 2) * sign
    return out


def is_ultrahyperbolic(p: Poly4) -> bool:
    """True when p solves John's equation d0^2 p + d1^2 p - d2^2 p - d3^2 p = 0."""
    return laplacian(p, "four_dim").is_zero()


# Each equation is a list of (sign, component, axis): sum sign * d f_component / d x_axis.
REGULARITY_SYSTEMS = {
    "left_regular": (
        ((1, 0, 0), (-1, 1, 1), (-1, 2, 2), (-1, 3, 3)),
        ((1, 1, 0), (1, 0, 1), (1, 3, 2), (-1, 2, 3)),
        ((1, 2, 0), (-1, 3, 1), (-1, 0, 2), (-1, 1, 3)),
        ((1, 3, 0), (1, 2, 1), (1, 1, 2), (-1, 0, 3)),
    ),
    "right_regular": (
        ((1, 0, 0), (-1, 1, 1), (-1, 2, 2), (-1, 3, 3)),
        ((1, 1, 0), (1, 0, 1), (-1, 3, 2), (1, 2, 3)),
        ((1, 2, 0), (1, 3, 1), (-1, 0, 2), (1, 1, 3)),
        ((1, 3, 0), (-1, 2, 1), (-1, 1, 2), (-1, 0, 3)),
    ),
    "d_left": (
        ((1, 0, 0), (1, 1, 1), (1, 2, 2), (1, 3, 3)),
        ((1, 1, 0), (-1, 0, 1), (-1, 3, 2), (1, 2, 3)),
        # j part of d F carries +d f0/dx2
        ((1, 2, 0), (1, 3, 1), (1, 0, 2), (1, 1, 3)),
        ((1, 3, 0), (-1, 2, 1), (-1, 1, 2), (1, 0, 3)),
    ),
    "d_right": (
        ((1, 0, 0), (1, 1, 1), (1, 2, 2), (1, 3, 3)),
        ((1, 1, 0), (-1, 0, 1), (1, 3, 2), (-1, 2, 3)),
        ((1, 2, 0), (-1, 3, 1), (1, 0, 2), (-1, 1, 3)),
        ((1, 3, 0), (1, 2, 1), (1, 1, 2), (1, 0, 3)),
    ),
}

_NOTION_OPERATOR = {
    "left_regular": ("dbar", "left"),
    "right_regular": ("dbar", "right"),
    "d_left": ("d", "left"),
    "d_right": ("d", "right"),
}

# Chained equalities t0 = t1 = t2 = t3, one chain per basis component.
# Each entry is (sign, component, axis).
DIFFERENTIABILITY_CHAINS = {
    "right": (
        ((1, 0, 0), (1, 1, 1), (1, 2, 2), (1, 3, 3)),
        ((1, 1, 0), (-1, 0, 1), (1, 3, 2), (-1, 2, 3)),
        ((1, 2, 0), (-1, 3, 1), (1, 0, 2), (-1, 1, 3)),
        ((1, 3, 0), (1, 2, 1), (1, 1, 2), (1, 0, 3)),
    ),
    "left": (
        ((1, 0, 0), (1, 1, 1), (1, 2, 2), (1, 3, 3)),
        ((1, 1, 0), (-1, 0, 1), (-1, 3, 2), (1, 2, 3)),
        ((1, 2, 0), (1, 3, 1), (1, 0, 2), (1, 1, 3)),
        ((1, 3, 0), (-1, 2, 1), (-1, 1, 2), (1, 0, 3)),
    ),
}

_SYMBOL = ("f0", "f1", "f2", "f3")


def _term_label(sign, comp, axis, first):
    body = f"d{_SYMBOL[comp]}/dx{axis}"
    if first:
        return body if sign > 0 else "-" + body
    return (" + " if sign > 0 else " - ") + body


def _equation_label(eq) -> str:
    return "".join(_term_label(s, c, a, n == 0) for n, (s, c, a) in enumerate(eq))


@dataclass(frozen=True)
class RegularityReport:
    """Residual polynomials of a PDE system; the verdict holds iff all vanish."""

    notion: str
    residuals: tuple
    labels: tuple = field(default=())

    @property
    def verdict(self) -> bool:
        return all(r.is_zero() for r in self.residuals)

    def __bool__(self):
        return self.verdict

    def to_dict(self) -> dict:
        return {
            "notion": self.notion,
            "verdict": self.verdict,
            "residuals": [
                {"equation": label, "residual": str(r)}
                for label, r in zip(self.labels, self.residuals)
            ],
        }

    def to_text(self) -> str:
        lines = [f"notion: {self.notion}", f"verdict: {str(self.verdict).lower()}"]
        for label, r in zip(self.labels, self.residuals):
            lines.append(f"  {label} = {r}")
        return "\n".join(lines)


def _eval_terms(F: CliffordPolyMap, terms, cache) -> Poly4:
    out = Poly4()
    for sign, comp, axis in terms:
        key = (comp, axis)
        if key not in cache:
            cache[key] = F.components[comp].diff(axis)
        out = out + cache[key] * sign
    return out


def check_regularity(F: CliffordPolyMap, notion: str = "left_regular") -> RegularityReport:
    """Evaluate the four first-order equations for ``notion``.

    ``notion`` is one of left_regular, right_regular (dbar on either side),
    d_left, d_right (d on either side).
    """
    notion = notion.replace("-", "_")
    _check_choice(notion, REGULARITY_SYSTEMS, "notion")
    cache: dict = {}
    system = REGULARITY_SYSTEMS[notion]
    residuals = tuple(_eval_terms(F, eq, cache) for eq in system)
    labels = tuple(_equation_label(eq) for eq in system)
    return RegularityReport(notion, residuals, labels)


def check_differentiable(F: CliffordPolyMap, side: str = "right") -> RegularityReport:
    """Right (or left) Cl(1,1)-differentiability as twelve residuals.

    Every chain t0 = t1 = t2 = t3 contributes t0 - t1, t1 - t2 and t2 - t3.
    """
    _check_choice(side, DIFFERENTIABILITY_CHAINS, "side")
    cache: dict = {}
    residuals = []
    labels = []
    for chain in DIFFERENTIABILITY_CHAINS[side]:
        for a, b in zip(chain, chain[1:]):
            neg_b = (-b[0], b[1], b[2])
            residuals.append(_eval_terms(F, [a, neg_b], cache))
            labels.append(f"({_equation_label([a])}) - ({_equation_label([b])})")
    return RegularityReport(f"{side}_differentiable", tuple(residuals), tuple(labels))


def operator_for(notion: str) -> tuple[str, str]:
    """(op, side) whose kernel is described by the given regularity notion."""
    return _NOTION_OPERATOR[notion.replace("-", "_")]


def directional_quotients(F: CliffordPolyMap, side: str) -> list[CliffordPolyMap]:
    """Limits of the difference quotient along x0, i x1, j x2 and ij x3.

    Right side: dF/dx_m * e_m^{-1}; left side: e_m^{-1} * dF/dx_m. The map is
    differentiable exactly when the four agree.
    """
    _check_choice(side, ("left", "right"), "side")
    out = []
    for m in range(4):
        inv = _BASIS[m] ** -1
        dF = F.diff(m)
        out.append(dF * inv if side == "right" else inv * dF)
    return out

