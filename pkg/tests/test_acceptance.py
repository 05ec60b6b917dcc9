"""Acceptance criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v``; the lines are written to the
terminal even when output capture is on.
"""

import math
import random
import time
from fractions import Fraction

import numpy as np
import pytest

from conftest import EXAMPLE3, random_element, random_map, random_poly
from splitquat import (
    AffineSpec,
    affine,
    CliffordPolyMap,
    OneClassSpec,
    Poly4,
    SplitQuaternion,
    apply_D,
    apply_operator,
    check_differentiable,
    check_regularity,
    ck_extend_2d,
    ck_extend_3d,
    conjugate,
    laplacian,
    oneclass_construct,
    oneclass_detect,
    parse_function,
    parse_poly,
    quadratic_form,
    to_matrix,
)
from splitquat.cauchy import QuadratureConfig, contour_estimate, integral_estimate
from splitquat.cli import main as cli_main

SEED = 8675309
E = [SplitQuaternion.basis(m) for m in range(4)]


class Reporter:
    def __init__(self, capsys):
        self.capsys = capsys

    def __call__(self, name, ok, detail, seconds):
        self.info(f"{'PASS' if ok else 'FAIL'}  {name}: {detail} [{seconds:.2f} s]")

    def info(self, line):
        with self.capsys.disabled():
            print("\n" + line)


@pytest.fixture
def report(capsys):
    return Reporter(capsys)


def test_exact_algebra(report):
    rng = random.Random(SEED)
    start = time.perf_counter()
    # products of basis elements, written out by hand as (sign, index)
    table = {(1, 1): (-1, 0), (2, 2): (1, 0), (3, 3): (1, 0),
             (1, 2): (1, 3), (2, 1): (-1, 3), (1, 3): (-1, 2), (3, 1): (1, 2),
             (2, 3): (-1, 1), (3, 2): (1, 1)}
    ok = all(E[a] * E[b] == s * E[c] for (a, b), (s, c) in table.items())
    ok &= all(E[0] * E[m] == E[m] == E[m] * E[0] for m in range(4))
    n = 1000
    for _ in range(n):
        a, b = random_element(rng), random_element(rng)
        ok &= to_matrix(a * b) == to_matrix(a) @ to_matrix(b)
        ok &= to_matrix(a).det() == quadratic_form(a)
        ok &= conjugate(a * b) == conjugate(b) * conjugate(a)
        ok &= conjugate(a + b) == conjugate(a) + conjugate(b)
    elapsed = time.perf_counter() - start
    ok &= elapsed < 5
    report("exact algebra", ok, f"table + {n} random pairs (homomorphism, det = Q, conj)", elapsed)
    assert ok


def test_operator_factorization(report):
    rng = random.Random(SEED + 1)
    start = time.perf_counter()
    ok = True
    for _ in range(100):
        F = random_map(rng, 4)
        lap = laplacian(F)
        ok &= apply_operator(apply_operator(F, "d"), "dbar") == lap
        ok &= apply_operator(apply_operator(F, "dbar"), "d") == lap
    elapsed = time.perf_counter() - start
    ok &= elapsed < 10
    report("operator factorization", ok, "dbar d F = d dbar F = Lap F for 100 maps, degree <= 4",
           elapsed)
    assert ok


def test_affine_identities(report):
    rng = random.Random(SEED + 2)
    start = time.perf_counter()
    Z = CliffordPolyMap.identity()
    const = CliffordPolyMap.constant
    ok = True
    for _ in range(50):
        A = random_element(rng)
        AZ = A * Z
        ok &= apply_operator(AZ, "dbar", "left") == const(-2 * conjugate(A))
        ok &= apply_operator(AZ, "dbar", "right") == const(-2 * A)
        ok &= apply_operator(AZ, "d", "left") == const(SplitQuaternion(4 * A.x0))
        ok &= apply_operator(AZ, "d", "right") == const(4 * A)
    elapsed = time.perf_counter() - start
    ok &= elapsed < 5
    report("affine identities", ok, "four operator images of AZ for 50 random A", elapsed)
    assert ok


def _nonaffine_quadratic(rng):
    comps = [random_poly(rng, 2, n_terms=4) for _ in range(4)]
    exp = [0, 0, 0, 0]
    exp[rng.randrange(4)] += 1
    exp[rng.randrange(4)] += 1
    slot = rng.randrange(4)
    comps[slot] = comps[slot] + Poly4({tuple(exp): Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))})
    F = CliffordPolyMap(*comps)
    assert any(sum(e) == 2 for p in F for e in p.terms)
    return F


def test_affine_differentiability(report):
    rng = random.Random(SEED + 3)
    start = time.perf_counter()
    passed = 0
    for _ in range(50):
        A, K = random_element(rng), random_element(rng)
        left = affine(AffineSpec(A, K, "left_mul"))
        right = affine(AffineSpec(A, K, "right_mul"))
        passed += check_differentiable(left, "right").verdict and check_differentiable(right, "left").verdict
    failed = 0
    for _ in range(50):
        F = _nonaffine_quadratic(rng)
        failed += (not check_differentiable(F, "right").verdict) and (not check_differentiable(F, "left").verdict)
    elapsed = time.perf_counter() - start
    ok = passed == 50 and failed == 50
    report("affine differentiability", ok,
           f"{passed}/50 affine pairs pass, {failed}/50 quadratic maps fail both systems", elapsed)
    assert ok


def test_oneclass(report):
    rng = random.Random(SEED + 4)
    start = time.perf_counter()
    regular = 0
    for _ in range(200):
        u = lambda: random_poly(rng, 4, axes=(0, 2), n_terms=4)
        v = lambda: random_poly(rng, 4, axes=(1, 3), n_terms=4)
        F = oneclass_construct(OneClassSpec(u(), v(), v(), u()))
        regular += apply_operator(F, "dbar", "left").is_zero()
    ex3 = parse_function(EXAMPLE3)
    ex3_ok = check_regularity(ex3).verdict and not oneclass_detect(ex3)
    elapsed = time.perf_counter() - start
    ok = regular == 200 and ex3_ok
    report("separated null-coordinate class", ok,
           f"{regular}/200 constructions left regular; Example 3 regular but not detected: {ex3_ok}",
           elapsed)
    assert ok


def test_ck_extensions(report):
    rng = random.Random(SEED + 5)
    start = time.perf_counter()
    i = SplitQuaternion.basis(1)
    good2 = good3 = 0
    for _ in range(100):
        g = random_map(rng, 5, axes=(2, 3))
        f = ck_extend_2d(g)
        good2 += apply_operator(f).is_zero() and f.restrict({0: 0, 1: 0}) == g - i * g
        g = random_map(rng, 5, axes=(1, 2, 3))
        f = ck_extend_3d(g)
        good3 += apply_operator(f).is_zero() and f.restrict({0: 0}) == g
    elapsed = time.perf_counter() - start
    ok = good2 == 100 and good3 == 100 and elapsed < 60
    report("Cauchy-Kowalewski extensions", ok,
           f"planar {good2}/100, hyperplane {good3}/100 regular with exact restriction", elapsed)
    assert ok


def test_errata_reproduction(report, capsys):
    start = time.perf_counter()
    code = cli_main(["errata", "--check"])
    capsys.readouterr()
    # independent recomputation of the three headline discrepancies
    g = CliffordPolyMap.scalar(parse_poly("x1^2 + x2^2 + x3^2 + x1*x2 + x1*x3 + x2*x3"))
    a1 = apply_D(apply_D(g)) == CliffordPolyMap.constant(SplitQuaternion(2))
    shown = parse_function(
        "-3*x0^2 + x1^2 + x2^2 + x3^2 + x1*x2 + x1*x3 + x2*x3 ;"
        " -2*x0*x1 - x0*x2 - x0*x3 ; -2*x0*x2 - x0*x1 - x0*x3 ; -2*x0*x3 - x0*x1 - x0*x2")
    x0, x1, x2, x3 = (Poly4.var(k) for k in range(4))
    a2 = check_regularity(shown).residuals[2] == (x2 * 2 + x1 + x3) * -2 + x0 * 2
    g2 = CliffordPolyMap.scalar(parse_poly("x2^4 + x2*x3^3"))
    shown_i = parse_poly("x1^4 + 6*x1^2*x2^2 + 3*x1^2*x2*x3 + x2^4 + x2*x3^3")
    b = ck_extend_2d(g2).f1 == -shown_i
    f1 = ck_extend_2d(CliffordPolyMap.scalar(parse_poly("x2*x3")))
    c = f1.f3 == parse_poly("x0*x2 + x1*x2")
    elapsed = time.perf_counter() - start
    ok = code == 0 and a1 and a2 and b and c
    report("errata reproduction", ok,
           f"errata --check exit {code}; D^2 g = 2: {a1}; third residual: {a2}; "
           f"i sign: {b}; missing ij factor: {c}", elapsed)
    assert ok


def test_numerical_cauchy(report):
    start = time.perf_counter()
    cfg = QuadratureConfig(center=(0, 0, 0, 0), radius=1.0, resolution=(48, 48, 48),
                           epsilons=(0.2, 0.1, 0.05, 0.025))
    one = CliffordPolyMap.constant(SplitQuaternion(1))
    centre = integral_estimate(one, (0, 0, 0, 0), cfg).extrapolated.real
    centre_ok = abs(centre[0] - 1) <= 0.02 and np.max(np.abs(centre[1:])) <= 0.02

    ex3 = parse_function(EXAMPLE3)
    z0 = (0.1, 0.2, 0.05, -0.1)
    truth = np.array([float(c) for c in ex3.evaluate(z0).coords])
    got = integral_estimate(ex3, z0, cfg).extrapolated.real
    scale = 0.02 * np.max(np.abs(truth))
    tol = np.where(truth != 0, 0.05 * np.abs(truth), scale)
    ex3_ok = bool(np.all(np.abs(got - truth) <= tol))
    worst = float(np.max(np.abs(got - truth) / np.where(truth != 0, np.abs(truth), 1)))

    exterior = integral_estimate(one, (2, 0, 0, 0), cfg).extrapolated.real
    ext_norm = float(np.linalg.norm(exterior))
    elapsed = time.perf_counter() - start
    ok = centre_ok and ex3_ok and ext_norm < 0.02 and elapsed < 300
    report("numerical Cauchy formula", ok,
           f"centre {centre[0]:.5f}; Example 3 worst relative error {worst:.2e}; "
           f"exterior (2,0,0,0) norm {ext_norm:.1e}", elapsed)

    # informational: an exterior direction whose null cone folds across the sphere
    t = time.perf_counter()
    fold = (math.sqrt(2), 0, math.sqrt(2), 0)
    loose = QuadratureConfig(resolution=(48, 48, 48), strict=False)
    eps_fold = integral_estimate(one, fold, loose)
    contour_fold = contour_estimate(one, fold)
    report.info(f"INFO  exterior (sqrt2,0,sqrt2,0): eps route norm "
                f"{np.linalg.norm(eps_fold.extrapolated.real):.3f} (diverging flag "
                f"{eps_fold.diagnostics['diverging']}), contour route norm "
                f"{np.linalg.norm(contour_fold.raw.real):.1e} [{time.perf_counter() - t:.2f} s]")
    assert ok


def test_finite_differences(report):
    rng = random.Random(SEED + 6)
    start = time.perf_counter()
    h = 1e-5
    signs = (1, 1, -1, -1)
    worst = 0.0
    for _ in range(20):
        F = random_map(rng, 4)
        G = apply_operator(F, "dbar", "left")
        for _ in range(20):
            p = [rng.uniform(-1, 1) for _ in range(4)]
            exact = np.array([float(c) for c in G.evaluate(p).coords])
            approx = np.zeros(4)
            for m in range(4):
                plus, minus = list(p), list(p)
                plus[m] += h
                minus[m] -= h
                dF = (np.array([float(c) for c in F.evaluate(plus).coords])
                      - np.array([float(c) for c in F.evaluate(minus).coords])) / (2 * h)
                prod = (signs[m] * E[m]).to_float() * SplitQuaternion(*dF)
                approx += np.array([float(c) for c in prod.coords])
            err = np.max(np.abs(exact - approx)) / max(1.0, np.max(np.abs(exact)))
            worst = max(worst, err)
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-6
    report("finite differences", ok, f"20 maps x 20 points, worst relative error {worst:.1e}",
           elapsed)
    assert ok
