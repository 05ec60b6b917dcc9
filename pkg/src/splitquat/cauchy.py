"""Numerical check of the Cauchy-type reproducing formula for left-regular maps.

For a ball U = B(c, R) and a point Z0 off the sphere the regularised integral

    I(eps) = -1/(2 pi^2) * int_{dU} K_eps(Z - Z0) * dZ * f(Z),
    K_eps(W) = conj(W) / (Q(W) + 1j * eps * |W|^2)^2,
    dZ = dx1^dx2^dx3 - (dx0^dx2^dx3) i - (dx0^dx1^dx3) j + (dx0^dx1^dx2) ij,

tends to f(Z0) inside the ball and to 0 outside, with dU oriented outward.
``1j`` is a commuting imaginary unit, so values live in the complexified
algebra. The kernel is the right derivative of the fundamental solution 1/Q
(conj(W)/Q^2 = -(1/2) (1/Q) d), and the signs of dZ make Stokes' theorem
produce the operator dbar, so ``formula="regular"`` is the default.
``formula="printed"`` keeps the single power in the denominator and the signs
dx1^dx2^dx3 - (dx0^dx2^dx3) i + (dx0^dx1^dx3) j - (dx0^dx1^dx2) ij, with the
inward orientation that makes f = 1 at the centre of the unit ball come out
as +1; that variant scales like R^2 and fails away from the centre.

The sphere is charted by Hopf-type angles

    Z = c + R (cos a cos p, cos a sin p, sin a cos s, sin a sin s),
    a in [0, pi/2], p, s in [0, 2 pi).

p and s use the periodic trapezoid rule. Along each a-line the kernel has
poles a distance ~ eps * |W|^2 / |dQ/da| from the real axis, next to the
points where the line crosses the null cone of Z0. The a-interval is split at
those crossings and each panel uses Gauss-Legendre nodes pulled towards the
crossing by a sinh map. I(eps) is analytic in eps, so the eps -> 0 limit is
taken by Richardson extrapolation in powers of eps.

Where a-lines graze the cone the line integrals vary on a scale ~ eps in
(p, s) and the trapezoid rule loses accuracy; the refinement delta exposes
this. :func:`contour_estimate` is an independent route free of that problem:
moving the sphere to Z0 + W + 1j*eta*(W0, W1, -W2, -W3) turns Q(W) into
(1 - eta^2) Q(W) + 2j*eta*|W|^2, which never vanishes, and since the
unregularised form is closed the integral over the moved sphere equals the
eps -> 0 limit for every 0 < eta < 1.
"""

from __future__ import annotations

import configparser
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from .algebra import SplitQuaternion, mul_coords
from .operators import check_regularity
from .polynomial import CliffordPolyMap

__all__ = [
    "ConfigError",
    "NotLeftRegular",
    "QuadratureConfig",
    "QuadratureEstimate",
    "ContourEstimate",
    "chart_point",
    "contour_estimate",
    "integral_estimate",
    "pullback_weight",
    "richardson",
]

log = logging.getLogger(__name__)

NORMALISATION = -1.0 / (2.0 * math.pi**2)

# formula -> (denominator power, form, orientation)
FORMULAS = {
    "regular": (2, "regular", "outward"),
    "printed": (1, "printed", "inward"),
}
# sign applied to (M0, M1, M2, M3), the minors of the chart Jacobian with row k
# removed, so that the outward weight is n0 + n1 i + s2 n2 j + s3 n3 ij
_FORM_SIGNS = {
    "printed": (-1.0, 1.0, -1.0, 1.0),
    "regular": (-1.0, 1.0, 1.0, -1.0),
}


class ConfigError(ValueError):
    """Invalid quadrature configuration, or estimates that fail to settle."""


class NotLeftRegular(ValueError):
    pass


@dataclass(frozen=True)
class QuadratureConfig:
    """Sphere, grid and regularisation schedule.

    ``resolution`` is (Gauss nodes per a-panel, trapezoid nodes in p, in s).
    ``order`` is the number of powers of eps removed by extrapolation and
    defaults to ``len(epsilons) - 1``. ``formula`` selects the kernel and
    form: ``regular`` (reproducing) or ``printed`` (the published variant).
    """

    center: tuple = (0.0, 0.0, 0.0, 0.0)
    radius: float = 1.0
    resolution: tuple = (48, 48, 48)
    epsilons: tuple = (0.2, 0.1, 0.05, 0.025)
    order: int | None = None
    workers: int = 1
    strict: bool = True
    formula: str = "regular"

    def __post_init__(self):
        object.__setattr__(self, "center", tuple(float(c) for c in self.center))
        object.__setattr__(self, "resolution", tuple(int(n) for n in self.resolution))
        object.__setattr__(self, "epsilons", tuple(float(e) for e in self.epsilons))
        if len(self.center) != 4:
            raise ConfigError("center needs four coordinates")
        if not self.radius > 0:
            raise ConfigError("radius must be positive")
        if len(self.resolution) != 3 or min(self.resolution) < 8:
            raise ConfigError("resolution needs three integers, each >= 8")
        eps = self.epsilons
        if not eps or min(eps) <= 0:
            raise ConfigError("epsilons must be positive")
        if any(b >= a for a, b in zip(eps, eps[1:])):
            raise ConfigError("epsilons must be strictly decreasing")
        order = len(eps) - 1 if self.order is None else int(self.order)
        if not 0 <= order <= len(eps) - 1:
            raise ConfigError(f"order must lie in [0, {len(eps) - 1}]")
        object.__setattr__(self, "order", order)
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        if self.formula not in FORMULAS:
            raise ConfigError(f"formula must be one of {sorted(FORMULAS)}")

    @classmethod
    def parse(cls, text: str) -> tuple[QuadratureConfig, dict]:
        """Read ``key = value`` lines.

        Recognised keys: center, radius, resolution, epsilons, order, workers,
        strict, formula. Unknown keys (e.g. ``z0``, ``function``) are returned untouched
        in the second element.
        """
        parser = configparser.ConfigParser(inline_comment_prefixes=("#",))
        try:
            parser.read_string("[quadrature]\n" + text)
        except configparser.Error as err:
            raise ConfigError(str(err)) from None
        raw = dict(parser["quadrature"])
        kwargs: dict = {}
        numbers = lambda s: [float(v) for v in s.replace(",", " ").split()]
        try:
            if "center" in raw:
                kwargs["center"] = tuple(numbers(raw.pop("center")))
            if "radius" in raw:
                kwargs["radius"] = float(raw.pop("radius"))
            if "resolution" in raw:
                kwargs["resolution"] = tuple(int(v) for v in numbers(raw.pop("resolution")))
            if "epsilons" in raw:
                kwargs["epsilons"] = tuple(numbers(raw.pop("epsilons")))
            if "order" in raw:
                kwargs["order"] = int(raw.pop("order"))
            if "workers" in raw:
                kwargs["workers"] = int(raw.pop("workers"))
            if "strict" in raw:
                kwargs["strict"] = parser.BOOLEAN_STATES[raw.pop("strict").lower()]
            if "formula" in raw:
                kwargs["formula"] = raw.pop("formula").strip()
        except (ValueError, KeyError) as err:
            raise ConfigError(f"bad value: {err}") from None
        return cls(**kwargs), raw

    @classmethod
    def from_file(cls, path: str | Path) -> tuple[QuadratureConfig, dict]:
        return cls.parse(Path(path).read_text(encoding="utf-8"))


@dataclass
class QuadratureEstimate:
    epsilons: tuple
    values: np.ndarray  # (len(epsilons), 4) complex
    extrapolated: np.ndarray  # (4,) complex
    error_indicator: float
    refinement_delta: float
    min_denominator: float
    crossing_fraction: float
    diagnostics: dict = field(default_factory=dict)

    @property
    def value(self) -> SplitQuaternion:
        return SplitQuaternion.from_coords([float(c) for c in self.extrapolated.real])

    @property
    def imag_norm(self) -> float:
        return float(np.max(np.abs(self.extrapolated.imag)))

    def to_dict(self) -> dict:
        return {
            "value": [float(c) for c in self.extrapolated.real],
            "imag_residue": self.imag_norm,
            "error_indicator": self.error_indicator,
            "refinement_delta": self.refinement_delta,
            "min_denominator": self.min_denominator,
            "crossing_fraction": self.crossing_fraction,
            "per_epsilon": [
                {
                    "epsilon": e,
                    "real": [float(c) for c in v.real],
                    "imag": [float(c) for c in v.imag],
                }
                for e, v in zip(self.epsilons, self.values)
            ],
            **self.diagnostics,
        }


# geometry ---------------------------------------------------------------------


def chart_point(alpha, phi, psi, radius: float = 1.0):
    """Unit-sphere chart scaled by ``radius``; returns coordinates on the last axis."""
    ca, sa = np.cos(alpha), np.sin(alpha)
    return radius * np.stack(
        np.broadcast_arrays(ca * np.cos(phi), ca * np.sin(phi), sa * np.cos(psi), sa * np.sin(psi)),
        axis=-1,
    )


def _chart_jacobian(alpha, phi, psi, radius):
    alpha, phi, psi = np.broadcast_arrays(alpha, phi, psi)
    ca, sa = np.cos(alpha), np.sin(alpha)
    cp, sp = np.cos(phi), np.sin(phi)
    cs, ss = np.cos(psi), np.sin(psi)
    zero = np.zeros_like(ca)
    d_alpha = np.stack([-sa * cp, -sa * sp, ca * cs, ca * ss], axis=-1)
    d_phi = np.stack([-ca * sp, ca * cp, zero, zero], axis=-1)
    d_psi = np.stack([zero, zero, -sa * ss, sa * cs], axis=-1)
    return radius * np.stack([d_alpha, d_phi, d_psi], axis=-1)  # (..., 4, 3)


def _form_coeffs(J, form: str, orientation: str):
    if orientation not in ("outward", "inward"):
        raise ValueError("orientation must be 'outward' or 'inward'")
    if form not in _FORM_SIGNS:
        raise ValueError(f"form must be one of {sorted(_FORM_SIGNS)}")
    flip = 1.0 if orientation == "outward" else -1.0
    return [
        flip * sign * np.linalg.det(np.delete(J, k, axis=-2))
        for k, sign in enumerate(_FORM_SIGNS[form])
    ]


def pullback_weight(alpha, phi, psi, radius: float = 1.0, orientation: str = "outward",
                    form: str = "printed"):
    """Coefficients of dZ pulled back to d(alpha) d(phi) d(psi).

    Built from the signed 3x3 minors of the chart Jacobian. With the outward
    orientation the ``printed`` form gives (n0 + n1 i + n2 j + n3 ij) dS and the
    ``regular`` form (n0 + n1 i - n2 j - n3 ij) dS, where dS already contains
    the chart's area factor R^3 cos(a) sin(a).
    Scalar angles give a :class:`SplitQuaternion`, arrays give (..., 4).
    """
    J = _chart_jacobian(alpha, phi, psi, radius)
    w = np.stack(_form_coeffs(J, form, orientation), axis=-1)
    if np.ndim(alpha) == 0 and np.ndim(phi) == 0 and np.ndim(psi) == 0:
        return SplitQuaternion.from_coords([float(c) for c in w])
    return w


# cone crossings and panels ----------------------------------------------------------


def _line_terms(phi, psi, d, R):
    A = d[0] * np.cos(phi) + d[1] * np.sin(phi)
    B = d[2] * np.cos(psi) + d[3] * np.sin(psi)
    return A, B


def _cone_q(alpha, A, B, qd, R):
    return R * R * np.cos(2 * alpha) - 2 * R * A * np.cos(alpha) + 2 * R * B * np.sin(alpha) + qd


def _cone_dq(alpha, A, B, R):
    return -2 * R * R * np.sin(2 * alpha) + 2 * R * A * np.sin(alpha) + 2 * R * B * np.cos(alpha)


def _find_crossings(A, B, qd, R, samples: int):
    """Roots of Q(Z(alpha) - Z0) in (0, pi/2) for every line; returns (line, root)."""
    grid = np.linspace(0.0, math.pi / 2, samples + 1)
    q = _cone_q(grid[None, :], A[:, None], B[:, None], qd, R)
    sign = np.sign(q)
    line_idx, cell = np.nonzero(sign[:, :-1] * sign[:, 1:] < 0)
    lo = grid[cell].copy()
    hi = grid[cell + 1].copy()
    Al, Bl = A[line_idx], B[line_idx]
    q_lo = q[line_idx, cell]
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        q_mid = _cone_q(mid, Al, Bl, qd, R)
        same = np.sign(q_mid) == np.sign(q_lo)
        lo = np.where(same, mid, lo)
        q_lo = np.where(same, q_mid, q_lo)
        hi = np.where(same, hi, mid)
    return line_idx, 0.5 * (lo + hi)


@dataclass
class _Panels:
    line: np.ndarray  # (P,) line index
    a: np.ndarray
    b: np.ndarray
    side: np.ndarray  # 0 none, 1 crossing at a, 2 crossing at b
    slope: np.ndarray  # |W|^2 / |dQ/dalpha| at the crossing (0 if none)


def _build_panels(A, B, qd, dd, R, samples) -> tuple[_Panels, int]:
    n_lines = A.shape[0]
    line_idx, roots = _find_crossings(A, B, qd, R, samples)
    per_line: list[list[float]] = [[] for _ in range(n_lines)]
    for li, r in zip(line_idx.tolist(), roots.tolist()):
        per_line[li].append(r)
    lines, lo, hi, side, slope = [], [], [], [], []
    half_pi = math.pi / 2
    for li in range(n_lines):
        rs = sorted(per_line[li])
        pts = [0.0] + rs + [half_pi]
        flags = [False] + [True] * len(rs) + [False]
        for k in range(len(pts) - 1):
            a, b = pts[k], pts[k + 1]
            fa, fb = flags[k], flags[k + 1]
            if fa and fb:
                m = 0.5 * (a + b)
                segments = [(a, m, 1, a), (m, b, 2, b)]
            elif fa:
                segments = [(a, b, 1, a)]
            elif fb:
                segments = [(a, b, 2, b)]
            else:
                segments = [(a, b, 0, None)]
            for s_lo, s_hi, s_side, root in segments:
                lines.append(li)
                lo.append(s_lo)
                hi.append(s_hi)
                side.append(s_side)
                if root is None:
                    slope.append(0.0)
                else:
                    r2 = R * R - 2 * R * (A[li] * math.cos(root) + B[li] * math.sin(root)) + dd
                    dq = abs(_cone_dq(root, A[li], B[li], R))
                    slope.append(r2 / max(dq, 1e-300))
    panels = _Panels(
        np.asarray(lines, dtype=np.intp),
        np.asarray(lo),
        np.asarray(hi),
        np.asarray(side, dtype=np.int8),
        np.asarray(slope),
    )
    crossing_lines = len(set(line_idx.tolist()))
    return panels, crossing_lines


def _panel_nodes(panels: _Panels, eps: float, n: int):
    """Nodes (P, n) and weights (P, n) in alpha for every panel."""
    x, w = np.polynomial.legendre.leggauss(n)
    a = panels.a[:, None]
    b = panels.b[:, None]
    length = b - a
    t_plain = a + 0.5 * length * (x + 1)
    w_plain = 0.5 * length * w
    # pole offset in alpha; floor keeps asinh finite for degenerate slopes
    width = np.maximum(eps * panels.slope[:, None], 1e-14)
    U = np.arcsinh(length / width)
    u = 0.5 * U * (x + 1)
    stretch = width * np.sinh(u)
    w_sinh = width * np.cosh(u) * 0.5 * U * w
    side = panels.side[:, None]
    t = np.where(side == 1, a + stretch, np.where(side == 2, b - stretch, t_plain))
    weights = np.where(side == 0, w_plain, w_sinh)
    return t, weights


def richardson(values: np.ndarray, ratio: float = 2.0, order: int | None = None):
    """Eliminate eps, eps^2, ... from values taken at eps0 / ratio^m.

    Returns (extrapolated value, error indicator, full tableau). The
    indicator is the max-norm gap between the two highest usable orders.
    """
    values = np.asarray(values)
    m = values.shape[0]
    order = m - 1 if order is None else order
    table = [list(values)]
    for k in range(1, order + 1):
        prev = table[-1]
        factor = ratio**k - 1.0
        table.append([prev[i + 1] + (prev[i + 1] - prev[i]) / factor for i in range(len(prev) - 1)])
    best = table[order][-1]
    if order == 0:
        gap = values[-1] - values[-2] if m > 1 else np.zeros_like(values[-1])
    else:
        gap = table[order][-1] - table[order - 1][-1]
    return best, float(np.max(np.abs(gap))), table


# integral -----------------------------------------------------------------------


def _component_arrays(f: CliffordPolyMap, Z):
    out = []
    for p in f:
        v = p.evaluate((Z[..., 0], Z[..., 1], Z[..., 2], Z[..., 3]))
        out.append(np.broadcast_to(np.asarray(v, dtype=float), Z.shape[:-1]))
    return out


def _tile_sum(f, config, d, eps, panels, sel, phi_nodes, psi_nodes, n_psi, n_alpha):
    line = panels.line[sel]
    sub = _Panels(line, panels.a[sel], panels.b[sel], panels.side[sel], panels.slope[sel])
    alpha, w_alpha = _panel_nodes(sub, eps, n_alpha)
    phi = phi_nodes[line // n_psi][:, None]
    psi = psi_nodes[line % n_psi][:, None]
    R = config.radius
    rel = chart_point(alpha, phi, psi, R)  # Z - center
    W = rel - d  # Z - Z0
    q = W[..., 0] ** 2 + W[..., 1] ** 2 - W[..., 2] ** 2 - W[..., 3] ** 2
    r2 = np.sum(W * W, axis=-1)
    power, form, orientation = FORMULAS[config.formula]
    denom = (q + 1j * eps * r2) ** power
    kernel = (W[..., 0] / denom, -W[..., 1] / denom, -W[..., 2] / denom, -W[..., 3] / denom)
    dz = _form_coeffs(_chart_jacobian(alpha, phi, psi, R), form, orientation)
    Z = rel + np.asarray(config.center)
    fv = _component_arrays(f, Z)
    integrand = mul_coords(mul_coords(kernel, dz), fv)
    total = np.array([np.sum(c * w_alpha) for c in integrand], dtype=complex)
    min_den = float(np.min(np.abs(q) + eps * r2))
    return total, min_den


def _integrate(f, z0, config: QuadratureConfig, eps: float, resolution) -> tuple[np.ndarray, float, float]:
    n_alpha, n_phi, n_psi = resolution
    R = config.radius
    d = np.asarray(z0, dtype=float) - np.asarray(config.center)
    qd = d[0] ** 2 + d[1] ** 2 - d[2] ** 2 - d[3] ** 2
    dd = float(d @ d)
    phi_nodes = 2 * math.pi * np.arange(n_phi) / n_phi
    psi_nodes = 2 * math.pi * np.arange(n_psi) / n_psi
    PHI, PSI = np.meshgrid(phi_nodes, psi_nodes, indexing="ij")
    A, B = _line_terms(PHI.ravel(), PSI.ravel(), d, R)
    panels, crossing = _build_panels(A, B, qd, dd, R, samples=max(64, 8 * n_alpha))
    # tiles: contiguous blocks of phi; summed in a fixed order
    tile_lines = max(1, n_psi * max(1, n_phi // 8))
    tiles = [
        np.nonzero((panels.line >= start) & (panels.line < start + tile_lines))[0]
        for start in range(0, n_phi * n_psi, tile_lines)
    ]
    job = lambda sel: _tile_sum(f, config, d, eps, panels, sel, phi_nodes, psi_nodes, n_psi, n_alpha)
    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            parts = list(pool.map(job, tiles))
    else:
        parts = [job(sel) for sel in tiles]
    total = np.zeros(4, dtype=complex)
    for part, _ in parts:
        total = total + part
    scale = NORMALISATION * (2 * math.pi / n_phi) * (2 * math.pi / n_psi)
    min_den = min(m for _, m in parts)
    return scale * total, min_den, crossing / (n_phi * n_psi)


def integral_estimate(
    f: CliffordPolyMap,
    z0: Sequence[float],
    config: QuadratureConfig = QuadratureConfig(),
    check: bool = True,
) -> QuadratureEstimate:
    """Estimate lim_{eps->0} I(eps) for a left-regular polynomial map f.

    Raises :class:`NotLeftRegular` if ``check`` and f is not left regular,
    and :class:`ConfigError` if Z0 lies on the sphere or, in strict mode,
    when successive eps estimates move apart instead of settling.
    """
    if check and not check_regularity(f, "left_regular").verdict:
        raise NotLeftRegular("the integral formula requires a left-regular map")
    z0 = tuple(float(c) for c in z0)
    if len(z0) != 4:
        raise ConfigError("Z0 needs four coordinates")
    dist = math.dist(z0, config.center)
    if abs(dist - config.radius) < 1e-9 * config.radius:
        raise ConfigError("Z0 lies on the integration sphere")

    values = []
    min_den = math.inf
    crossing = 0.0
    for eps in config.epsilons:
        v, m, crossing = _integrate(f, z0, config, eps, config.resolution)
        values.append(v)
        min_den = min(min_den, m)
    values = np.array(values)
    ratio = _constant_ratio(config.epsilons)
    if ratio is not None:
        best, indicator, _ = richardson(values, ratio, config.order)
    else:
        best, indicator = _richardson_general(values, config.epsilons, config.order)

    coarse = tuple(max(8, n // 2) for n in config.resolution)
    v_coarse, _, _ = _integrate(f, z0, config, config.epsilons[-1], coarse)
    refinement = float(np.max(np.abs(values[-1] - v_coarse)))

    diagnostics = {"inside": dist < config.radius}
    steps = np.max(np.abs(np.diff(values, axis=0)), axis=1) if len(values) > 1 else np.array([])
    diverging = False
    if len(steps) >= 2:
        floor = 1e-9 * max(1.0, float(np.max(np.abs(values))))
        diverging = bool(steps[-1] > 2.0 * np.max(steps[:-1]) + floor)
    diagnostics["settling"] = [float(s) for s in steps]
    diagnostics["diverging"] = diverging
    if diverging:
        msg = ("eps estimates diverge instead of settling "
               f"(successive changes {[f'{s:.3g}' for s in steps]}); refine the grid or raise eps")
        if config.strict:
            raise ConfigError(msg)
        log.warning(msg)

    return QuadratureEstimate(
        epsilons=config.epsilons,
        values=values,
        extrapolated=np.asarray(best),
        error_indicator=indicator,
        refinement_delta=refinement,
        min_denominator=min_den,
        crossing_fraction=crossing,
        diagnostics=diagnostics,
    )


def _constant_ratio(eps: Sequence[float]) -> float | None:
    if len(eps) < 2:
        return 2.0
    ratios = [a / b for a, b in zip(eps, eps[1:])]
    if all(math.isclose(r, ratios[0], rel_tol=1e-12) for r in ratios):
        return ratios[0]
    return None


def _richardson_general(values: np.ndarray, eps: Sequence[float], order: int):
    """Polynomial extrapolation to eps = 0 for a non-geometric schedule (Neville)."""
    eps = np.asarray(eps, dtype=float)
    m = len(eps)
    use = slice(m - order - 1, m)
    xs = eps[use]
    ys = values[use]
    table = [y.copy() for y in ys]
    estimates = []
    for k in range(1, len(xs)):
        for i in range(len(xs) - k):
            table[i] = (xs[i + k] * table[i] - xs[i] * table[i + 1]) / (xs[i + k] - xs[i])
        estimates.append(table[0].copy())
    best = table[0]
    gap = estimates[-1] - estimates[-2] if len(estimates) > 1 else (ys[-1] - best)
    return best, float(np.max(np.abs(gap)))


# deformed contour ---------------------------------------------------------------

_SIGMA = np.array([1.0, 1.0, -1.0, -1.0])


@dataclass
class ContourEstimate:
    """Integral over the sphere pushed into complex space; no eps limit needed."""

    eta: float
    raw: np.ndarray  # (4,) complex
    refinement_delta: float

    @property
    def value(self) -> SplitQuaternion:
        return SplitQuaternion.from_coords([float(c) for c in self.raw.real])

    @property
    def imag_norm(self) -> float:
        return float(np.max(np.abs(self.raw.imag)))

    def to_dict(self) -> dict:
        return {
            "value": [float(c) for c in self.raw.real],
            "imag_residue": self.imag_norm,
            "refinement_delta": self.refinement_delta,
            "eta": self.eta,
        }


def _contour_sum(f, z0, config: QuadratureConfig, eta: float, resolution) -> np.ndarray:
    n_alpha, n_phi, n_psi = resolution
    x, w = np.polynomial.legendre.leggauss(n_alpha)
    alpha = (x + 1) * math.pi / 4
    phi = 2 * math.pi * np.arange(n_phi) / n_phi
    psi = 2 * math.pi * np.arange(n_psi) / n_psi
    c = np.asarray(config.center)
    d = np.asarray(z0) - c
    lift = 1.0 + 1j * eta * _SIGMA
    total = np.zeros(4, dtype=complex)
    for p in phi:  # one phi slice at a time keeps memory flat
        A, P, S = np.meshgrid(alpha, p, psi, indexing="ij")
        W = (chart_point(A, P, S, config.radius) - d) * lift
        J = _chart_jacobian(A, P, S, config.radius) * lift[:, None]
        dz = _form_coeffs(J, "regular", "outward")
        q = W[..., 0] ** 2 + W[..., 1] ** 2 - W[..., 2] ** 2 - W[..., 3] ** 2
        q2 = q * q
        kernel = (W[..., 0] / q2, -W[..., 1] / q2, -W[..., 2] / q2, -W[..., 3] / q2)
        Z = W + np.asarray(z0)
        fv = [
            np.broadcast_to(np.asarray(comp.evaluate(tuple(Z[..., k] for k in range(4))), dtype=complex),
                            A.shape)
            for comp in f
        ]
        integrand = mul_coords(mul_coords(kernel, dz), fv)
        weights = (w * math.pi / 4)[:, None, None]
        total = total + np.array([np.sum(comp * weights) for comp in integrand])
    return NORMALISATION * (2 * math.pi / n_phi) * (2 * math.pi / n_psi) * total


def contour_estimate(
    f: CliffordPolyMap,
    z0: Sequence[float],
    config: QuadratureConfig = QuadratureConfig(),
    eta: float = 0.5,
    check: bool = True,
) -> ContourEstimate:
    """The eps -> 0 limit of the regular formula, computed on a deformed sphere.

    Each point Z0 + W of the sphere moves to Z0 + W + 1j*eta*(W0, W1, -W2, -W3)
    and f is continued to complex arguments. The integrand is smooth, so a
    single Gauss-Legendre panel in a and the trapezoid rule in p, s converge
    spectrally. ``config.epsilons`` and ``config.formula`` are not used.
    """
    if check and not check_regularity(f, "left_regular").verdict:
        raise NotLeftRegular("the integral formula requires a left-regular map")
    if not 0.0 < eta < 1.0:
        raise ConfigError("eta must lie in (0, 1)")
    z0 = tuple(float(c) for c in z0)
    if len(z0) != 4:
        raise ConfigError("Z0 needs four coordinates")
    if abs(math.dist(z0, config.center) - config.radius) < 1e-9 * config.radius:
        raise ConfigError("Z0 lies on the integration sphere")
    fine = _contour_sum(f, z0, config, eta, config.resolution)
    coarse = _contour_sum(f, z0, config, eta, tuple(max(8, n // 2) for n in config.resolution))
    return ContourEstimate(eta, fine, float(np.max(np.abs(fine - coarse))))
