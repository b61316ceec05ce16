from fractions import Fraction

import pytest

from src.linalg import determinant, rank
from src.ringcore import GF, QQ


def test_rank_over_rationals():
    rows = [[1, 2, 3], [2, 4, 6], [Fraction(1, 2), 0, 1]]
    assert rank(rows, QQ) == 2


def test_rank_depends_on_characteristic():
    rows = [[1, 1], [1, -1]]
    assert rank(rows, QQ) == 2
    assert rank(rows, GF(2)) == 1


def test_rank_of_empty_matrix():
    assert rank([], QQ) == 0


def test_determinant_rational():
    assert determinant([[2, 1], [1, Fraction(1, 2)]], QQ) == 0
    assert determinant([[0, 1], [1, 0]], QQ) == -1
    assert determinant([[Fraction(1, 2), 0], [0, 4]], QQ) == 2


def test_determinant_modular():
    assert determinant([[1, 2], [3, 4]], GF(5)).value == 3


def test_determinant_needs_square_matrix():
    with pytest.raises(ValueError):
        determinant([[1, 2, 3], [4, 5, 6]], QQ)
