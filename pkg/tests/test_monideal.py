import numpy as np
import pytest

from src.exceptions import DimensionMismatchError
from src.monideal import (
    IdealClassifier,
    MonomialIdeal,
    MonomialPrime,
    associated_primes,
    colon_monomial,
    colon_variable_power,
    dimension,
    divide_by_one_minus_t,
    hilbert_series,
    irreducible_decomposition,
    is_borel_type,
    is_borel_type_by_exchange,
    is_quasi_stable,
    is_stable,
    is_strongly_stable,
    membership,
    minimalize,
    quasi_stable_chain,
    saturation_by_prime,
    standard_monomials,
    tpoly_mul,
)
from src.ringcore import monomials_of_degree


def _primes(I):
    return {frozenset(p.variables) for p in associated_primes(I)}


class TestMonomialIdeal:
    def test_generators_are_minimal(self):
        I = MonomialIdeal(3, [(3, 0, 0), (1, 2, 0), (3, 1, 0), (1, 0, 2)])
        assert len(I) == 3
        assert (3, 1, 0) not in I.gens

    def test_membership(self, quasi_stable_ideal):
        assert quasi_stable_ideal.contains((2, 1, 1))
        assert not quasi_stable_ideal.contains((5, 5, 0))
        mask = quasi_stable_ideal.contains_many([(0, 0, 2), (3, 0, 0), (0, 1, 1)])
        assert list(np.asarray(mask)) == [True, False, True]

    def test_zero_and_unit(self):
        assert MonomialIdeal.zero(2).is_zero()
        assert MonomialIdeal.unit(2).is_unit()
        assert MonomialIdeal.unit(2).contains((0, 0))

    def test_intersection_and_sum(self):
        a = MonomialIdeal.from_variables(2, [0])
        b = MonomialIdeal.from_variables(2, [1])
        assert a.intersection(b) == MonomialIdeal(2, [(1, 1)])
        assert (a + b) == MonomialIdeal(2, [(1, 0), (0, 1)])

    def test_colon(self, quasi_stable_ideal):
        assert quasi_stable_ideal.colon((0, 0, 1)) == MonomialIdeal(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
        assert colon_variable_power(quasi_stable_ideal, 2).is_unit()

    def test_colon_by_monomial(self, borel_ideal):
        assert colon_monomial(borel_ideal, (1, 0, 0)) == MonomialIdeal(3, [(2, 0, 0), (0, 2, 0), (0, 0, 2)])
        assert membership(borel_ideal, (1, 3, 0))
        assert not membership(borel_ideal, (0, 5, 5))
        with pytest.raises(DimensionMismatchError):
            colon_monomial(borel_ideal, (1, 0))

    def test_saturation(self, quasi_stable_ideal):
        maximal = MonomialPrime.of(3, [0, 1, 2])
        assert saturation_by_prime(quasi_stable_ideal, maximal) == MonomialIdeal(3, [(0, 0, 1)])

    def test_reverse_and_permute(self):
        I = MonomialIdeal(3, [(2, 1, 0)])
        assert I.reverse() == MonomialIdeal(3, [(0, 1, 2)])
        assert I.permute([1, 0, 2]) == MonomialIdeal(3, [(1, 2, 0)])

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            MonomialIdeal(2, [(1, 0, 0)])

    def test_minimalize_infers_n(self):
        assert minimalize([(1, 1), (2, 1)]).n == 2

    def test_standard_monomials(self, small_ideal):
        assert standard_monomials(small_ideal, 2) == [(0, 2)]
        assert standard_monomials(small_ideal, 3) == []

    def test_format(self, quasi_stable_ideal):
        assert quasi_stable_ideal.format() == '(x1*x3, x2*x3, x3^2)'


class TestHilbertSeries:
    def test_small_ideal(self, small_ideal):
        series = hilbert_series(small_ideal)
        assert series.numerator == (1, 0, -2, 0, 1)
        assert series.values(4) == [1, 2, 1, 0, 0]
        assert series.dimension() == 0
        assert series.degree() == 4
        assert series.as_polynomial() == (1, 2, 1)

    def test_zero_ideal(self):
        series = hilbert_series(MonomialIdeal.zero(3))
        assert series.numerator == (1,)
        assert series.hilbert_function(2) == 6
        assert series.dimension() == 3

    def test_unit_ideal(self):
        series = hilbert_series(MonomialIdeal.unit(2))
        assert series.numerator == ()
        assert series.dimension() == -1

    def test_t_polynomial_division(self):
        assert divide_by_one_minus_t(tpoly_mul((1, -1), (1, 1)), 1) == (1, 1)
        assert divide_by_one_minus_t((1, 1), 1) is None

    def test_matches_monomial_count(self, monomial_corpus):
        for I in monomial_corpus[:80]:
            series = hilbert_series(I)
            for d in range(7):
                assert series.hilbert_function(d) == len(standard_monomials(I, d))

    def test_dimension_agrees_with_series(self, monomial_corpus):
        for I in monomial_corpus[:80]:
            assert dimension(I) == hilbert_series(I).dimension()


class TestPrimes:
    def test_segments(self):
        assert MonomialPrime.initial_segment(3, 2).is_initial_segment()
        assert MonomialPrime.terminal_segment(3, 3).is_terminal_segment()
        assert not MonomialPrime.of(3, [1]).is_initial_segment()
        assert MonomialPrime.of(3, [0, 1, 2]).is_maximal()
        zero = MonomialPrime.of(3, [])
        assert zero.is_initial_segment() and zero.is_terminal_segment()

    def test_decomposition_intersects_back(self, monomial_corpus):
        for I in monomial_corpus[:60]:
            components = irreducible_decomposition(I)
            total = components[0]
            for component in components[1:]:
                total = total.intersection(component)
            assert total == I

    def test_associated_primes_of_examples(self, quasi_stable_ideal, not_quasi_stable_ideal):
        assert _primes(quasi_stable_ideal) == {frozenset({2}), frozenset({0, 1, 2})}
        assert _primes(not_quasi_stable_ideal) == {frozenset({0}), frozenset({0, 1, 2})}


class TestClassification:
    def test_borel_not_strongly_stable(self, borel_ideal):
        assert is_borel_type(borel_ideal)
        assert not is_strongly_stable(borel_ideal)

    def test_quasi_stable_not_borel(self, quasi_stable_ideal):
        assert is_quasi_stable(quasi_stable_ideal)
        verdict = is_borel_type(quasi_stable_ideal)
        assert not verdict
        assert verdict.index is not None and verdict.witness is not None
        assert not is_strongly_stable(quasi_stable_ideal)

    def test_borel_not_quasi_stable(self, not_quasi_stable_ideal):
        assert is_borel_type(not_quasi_stable_ideal)
        assert not is_quasi_stable(not_quasi_stable_ideal)

    def test_cubic_initial_ideal_is_borel(self, cubic_initial):
        assert is_borel_type(cubic_initial)
        assert _primes(cubic_initial) == {frozenset({0, 1, 2})}

    def test_classifier_report(self, quasi_stable_ideal):
        report = IdealClassifier(quasi_stable_ideal).get_classification_report()
        assert report['flags'] == {'borel_type': False, 'strongly_stable': False,
                                   'stable': False, 'quasi_stable': True}
        assert report['associated_primes'] == ['(x3)', '(x1, x2, x3)']
        assert report['dimension'] == 2
        assert set(report['witnesses']) == {'borel_type', 'strongly_stable', 'stable'}

    def test_classifier_rejects_polynomials(self):
        with pytest.raises(ValueError):
            IdealClassifier([(1, 0)])

    def test_mirror_duality(self, small_corpus):
        for I in small_corpus:
            assert bool(is_borel_type(I)) == bool(is_quasi_stable(I.reverse()))

    def test_alternative_characterizations(self, small_corpus):
        for I in small_corpus:
            assert bool(is_borel_type(I)) == bool(is_borel_type_by_exchange(I))
            assert bool(is_quasi_stable(I)) == bool(quasi_stable_chain(I))

    def test_implications(self, small_corpus):
        for I in small_corpus:
            if is_strongly_stable(I):
                assert is_stable(I)
            if is_stable(I):
                assert is_borel_type(I)

    def test_every_ideal_of_a_power_of_m_is_strongly_stable(self):
        I = MonomialIdeal(3, monomials_of_degree(3, 2))
        assert is_strongly_stable(I) and is_quasi_stable(I)
