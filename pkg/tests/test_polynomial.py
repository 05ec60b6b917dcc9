from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from conftest import EXAMPLE3, elements, maps, polys, rationals
from splitquat import (
    CliffordPolyMap,
    NullForm,
    Poly4,
    SplitQuaternion,
    apply_operator,
    from_null_coordinates,
    idempotent,
    parse_function,
    parse_poly,
    to_null_coordinates,
)
from splitquat.generators import ck_extend_2d
from splitquat.polynomial import NULL_VARS, _NULL_OF_X, _X_OF_NULL

x0, x1, x2, x3 = (Poly4.var(k) for k in range(4))


def test_examples():
    assert x0 + (-x0) == Poly4()
    assert (x0 + x2) * (x0 - x2) == x0**2 - x2**2
    p = (x2**4 + x2 * x3**3) * Fraction(1, 6)
    assert sorted(p.terms.values()) == [Fraction(1, 6), Fraction(1, 6)]


def test_partial_derivative_examples():
    assert (x2**4 + x2 * x3**3).diff(2) == 4 * x2**3 + x3**3
    assert (x1 * x2 * x3).diff(0) == Poly4()
    assert (x1**2 + x1 * x2 + x1 * x3).diff(1) == 2 * x1 + x2 + x3


def test_evaluate_examples():
    assert (x0**2 + x1**2 - x2**2 - x3**2).evaluate((1, 1, 1, 1)) == 0
    assert (x1 * x2 * x3).evaluate((0, 1, 2, 3)) == 6
    f = ck_extend_2d(CliffordPolyMap.scalar(x2 * x3))
    a, b = Fraction(3, 2), Fraction(-5, 7)
    value = f.evaluate((0, 0, a, b))
    assert (value.x0, value.x1) == (a * b, -a * b)


def test_zero_polynomial_degree_sentinel():
    assert Poly4().degree() < 0
    assert Poly4().diff(2).is_zero()
    assert Poly4.const(0).is_zero() and Poly4({(1, 0, 0, 0): 0}).is_zero()


def test_null_form_examples():
    F = CliffordPolyMap(x0 + x2, Poly4(), x0 + x2, Poly4())
    N = to_null_coordinates(F)
    u0 = Poly4.var(0)  # first null slot
    assert N == NullForm(2 * u0, Poly4(), Poly4(), Poly4())
    N3 = to_null_coordinates(parse_function(EXAMPLE3))
    assert N3.F0 == parse_poly("1/4*u0*u1^2 - 1/4*u0*v1^2", NULL_VARS)


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == Poly4()


@given(polys(max_degree=4), st.integers(0, 3), st.integers(0, 3))
def test_partials_commute(p, a, b):
    assert p.diff(a).diff(b) == p.diff(b).diff(a)


@given(polys(), polys(), st.tuples(rationals, rationals, rationals, rationals))
def test_evaluate_is_a_ring_homomorphism(a, b, point):
    assert (a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point)
    assert (a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point)


@given(maps())
def test_null_round_trip(F):
    assert from_null_coordinates(to_null_coordinates(F)) == F


@given(maps())
def test_null_reconstruction_with_idempotents(F):
    # F = (F0 j+ + F1 j-) + i (F2 j+ + F3 j-), with the substitution applied to F0..F3
    N = to_null_coordinates(F)
    back = [c.substitute(_NULL_OF_X) for c in N.components]
    jp, jm, i = idempotent("+"), idempotent("-"), SplitQuaternion.basis(1)
    rebuilt = (CliffordPolyMap.scalar(back[0]) * jp + CliffordPolyMap.scalar(back[1]) * jm
               + i * (CliffordPolyMap.scalar(back[2]) * jp + CliffordPolyMap.scalar(back[3]) * jm))
    assert rebuilt == F


@given(maps(max_degree=3))
def test_null_coordinate_operator_identity(F):
    # dbar = 2(d/dv0 j+ + d/du0 j-) + 2i(d/dv1 j+ + d/du1 j-), applied in null variables
    G = F.substitute(_X_OF_NULL)  # same map, components written in (u0, v0, u1, v1)
    jp, jm, i = idempotent("+"), idempotent("-"), SplitQuaternion.basis(1)
    slot = {name: k for k, name in enumerate(NULL_VARS)}
    coefficient = {"v0": 2 * jp, "u0": 2 * jm, "v1": 2 * i * jp, "u1": 2 * i * jm}
    result = CliffordPolyMap.zero()
    for name, c in coefficient.items():
        result = result + c * G.diff(slot[name])
    assert result.substitute(_NULL_OF_X) == apply_operator(F, "dbar", "left")


@given(maps(), elements)
def test_map_scalar_multiplication_is_componentwise(F, a):
    assert (F * a).evaluate((1, 2, 3, 4)) == F.evaluate((1, 2, 3, 4)) * a
    assert (a * F).evaluate((1, 2, 3, 4)) == a * F.evaluate((1, 2, 3, 4))


def test_float_and_array_evaluation():
    import numpy as np

    p = parse_poly("x0^2 - 1/2*x1*x3")
    assert p.evaluate((0.5, 2.0, 0.0, 1.0)) == 0.25 - 1.0
    arr = p.evaluate((np.array([1.0, 2.0]), np.array([0.0, 2.0]), 0.0, np.array([1.0, 1.0])))
    assert np.allclose(arr, [1.0, 3.0])
