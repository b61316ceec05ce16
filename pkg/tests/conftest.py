"""Shared fixtures: worked example ideals and seeded random corpora."""

import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.groebner import LinearChange, apply_change, initial_ideal
from src.exceptions import SingularChangeError
from src.monideal import MonomialIdeal, is_borel_type
from src.ringcore import PolynomialRing, TermOrder, monomials_of_degree

DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'data')

CUBIC_INITIAL = [(3, 0, 0), (2, 1, 0), (0, 3, 0), (2, 0, 1), (1, 0, 2), (0, 0, 3), (0, 2, 1), (1, 2, 0)]
CUBIC_GIN = [(3, 0, 0), (2, 1, 0), (1, 2, 0), (0, 3, 0), (2, 0, 1), (1, 1, 1),
             (0, 2, 1), (1, 0, 2), (0, 1, 3), (0, 0, 4)]

BETTI_I = "\n".join([
    "        0    1    2",
    "--------------------",
    " 3:     8    9    1",
    " 4:     -    1    2",
    "--------------------",
    "Tot:    8   10    3",
])
BETTI_IN_I = "\n".join([
    "        0    1    2",
    "--------------------",
    " 3:     8    9    2",
    " 4:     -    2    2",
    "--------------------",
    "Tot:    8   11    4",
])
BETTI_GIN = "\n".join([
    "        0    1    2",
    "--------------------",
    " 3:     8   11    4",
    " 4:     2    4    2",
    "--------------------",
    "Tot:   10   15    6",
])


@pytest.fixture
def ring3():
    return PolynomialRing.standard(3)


@pytest.fixture
def cubic_gens(ring3):
    x1, x2, x3 = ring3.gens()
    return [(2 * x1 + x2) ** 3, (x2 + 2 * x3) ** 3, (3 * x1 + x3) ** 3, (x1 + 3 * x3) ** 3,
            (3 * x1 + 2 * x3) ** 3, (2 * x2 - 3 * x3) ** 3, (4 * x1 + 3 * x2) ** 3, (3 * x1 - 5 * x3) ** 3]


@pytest.fixture
def cubic_initial():
    return MonomialIdeal(3, CUBIC_INITIAL)


@pytest.fixture
def reduction_gens(ring3):
    x1, x2, x3 = ring3.gens()
    return [x1 ** 4, x1 * x2 ** 3, x1 * x3 ** 2]


@pytest.fixture
def quasi_stable_ideal():
    return MonomialIdeal(3, [(1, 0, 1), (0, 1, 1), (0, 0, 2)])


@pytest.fixture
def borel_ideal():
    return MonomialIdeal(3, [(3, 0, 0), (1, 2, 0), (3, 1, 0), (1, 0, 2)])


@pytest.fixture
def not_quasi_stable_ideal():
    return MonomialIdeal(3, [(1, 1, 0), (1, 0, 1), (2, 0, 0)])


@pytest.fixture
def small_ideal():
    """(x^2, xy, y^3) in two variables."""
    return MonomialIdeal(2, [(2, 0), (1, 1), (0, 3)])


@pytest.fixture
def data_path():
    def resolve(name: str) -> str:
        return os.path.join(DATA_DIR, name)
    return resolve


def random_monomial_ideals(count: int, seed: int, n: int = 3, max_gens: int = 6, max_degree: int = 4):
    """Nonzero proper monomial ideals with 1..max_gens generators of degree 1..max_degree."""
    rng = np.random.default_rng(seed)
    pool = [mu for d in range(1, max_degree + 1) for mu in monomials_of_degree(n, d)]
    ideals = []
    for _ in range(count):
        size = int(rng.integers(1, max_gens + 1))
        picks = rng.choice(len(pool), size=size, replace=False)
        ideals.append(MonomialIdeal(n, [pool[k] for k in picks]))
    return ideals


def random_graded_ideals(count: int, seed: int, n: int = 3):
    """
    Coordinate changes of random monomial ideals, kept when the revlex
    initial ideal is of Borel type.
    """
    rng = np.random.default_rng(seed)
    ring = PolynomialRing.standard(n)
    found = []
    while len(found) < count:
        ideal = random_monomial_ideals(1, int(rng.integers(1 << 30)), n, max_gens=3, max_degree=2)[0]
        matrix = tuple(tuple(int(v) for v in row) for row in rng.integers(-2, 3, size=(n, n)))
        try:
            change = LinearChange(matrix, ring)
        except SingularChangeError:
            continue
        gens = apply_change(ideal.to_polynomials(ring), change)
        if is_borel_type(initial_ideal(gens, TermOrder.REVLEX)):
            found.append(gens)
    return found


@pytest.fixture(scope='session')
def monomial_corpus():
    return random_monomial_ideals(300, seed=2024)


@pytest.fixture(scope='session')
def small_corpus():
    """Generators drawn from monomials of degree <= 3 in three variables."""
    return random_monomial_ideals(500, seed=7, max_gens=5, max_degree=3)
