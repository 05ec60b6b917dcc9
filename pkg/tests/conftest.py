import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from splitquat import CliffordPolyMap, Poly4, SplitQuaternion

settings.register_profile(
    "default", max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
elements = st.builds(SplitQuaternion, rationals, rationals, rationals, rationals)


@st.composite
def polys(draw, max_degree=3, max_terms=5, axes=(0, 1, 2, 3)):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exp = [0, 0, 0, 0]
        for axis in axes:
            exp[axis] = draw(st.integers(0, max_degree))
        while sum(exp) > max_degree:
            k = max(range(4), key=lambda a: exp[a])
            exp[k] -= 1
        terms[tuple(exp)] = draw(rationals)
    return Poly4(terms)


@st.composite
def maps(draw, max_degree=3, axes=(0, 1, 2, 3)):
    return CliffordPolyMap(*(draw(polys(max_degree=max_degree, axes=axes)) for _ in range(4)))


def random_fraction(rng: random.Random, bound: int = 20) -> Fraction:
    return Fraction(rng.randint(-bound * 12, bound * 12), rng.randint(1, 12))


def random_element(rng: random.Random) -> SplitQuaternion:
    return SplitQuaternion(*(random_fraction(rng) for _ in range(4)))


def random_poly(rng: random.Random, max_degree: int, axes=(0, 1, 2, 3), n_terms: int = 6) -> Poly4:
    terms = {}
    for _ in range(n_terms):
        exp = [0, 0, 0, 0]
        budget = rng.randint(0, max_degree)
        for _ in range(budget):
            exp[rng.choice(axes)] += 1
        terms[tuple(exp)] = random_fraction(rng, 5)
    return Poly4(terms)


def random_map(rng: random.Random, max_degree: int, axes=(0, 1, 2, 3)) -> CliffordPolyMap:
    return CliffordPolyMap(*(random_poly(rng, max_degree, axes) for _ in range(4)))


@pytest.fixture
def rng():
    return random.Random(20240611)


EXAMPLE3 = "x1*x2*x3 ; -x0*x2*x3 ; x0*x1*x3 ; x0*x1*x2"
