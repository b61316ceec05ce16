"""Invariants shared by a graded ideal and its revlex initial ideal when the latter is of Borel type."""

import pytest

from conftest import random_graded_ideals
from src.annihilator import annihilator_numbers, correspondence_check, corollary4_check
from src.betti import betti_koszul, betti_of_graded, derived_invariants, extremal_betti
from src.groebner import initial_ideal
from src.monideal import MonomialIdeal, dimension, hilbert_series, is_borel_type
from src.reduction import ReductionSpec, reduction_number, tail_forms
from src.ringcore import TermOrder


@pytest.fixture(scope='module')
def graded_cases():
    cases = []
    for gens in random_graded_ideals(100, seed=7):
        initial = initial_ideal(gens, TermOrder.REVLEX)
        cases.append({
            'gens': gens,
            'initial': initial,
            'betti': betti_of_graded(gens),
            'initial_betti': betti_koszul(initial),
        })
    return cases


@pytest.mark.slow
class TestInitialIdealAgreement:
    def test_corpus_is_borel_type(self, graded_cases):
        assert len(graded_cases) == 100
        assert all(is_borel_type(case['initial']) for case in graded_cases)

    def test_extremal_betti_numbers_coincide(self, graded_cases):
        for case in graded_cases:
            assert extremal_betti(case['betti']).entries == extremal_betti(case['initial_betti']).entries, \
                case['initial'].format()

    def test_annihilator_tables_are_equal(self, graded_cases):
        for case in graded_cases:
            check = corollary4_check(case['gens'])
            assert check['status'] == 'equal', (case['initial'].format(), check.get('differences'))

    def test_extremal_corners_mirror(self, graded_cases):
        for case in graded_cases:
            for subject, table in ((case['gens'], case['betti']), (case['initial'], case['initial_betti'])):
                check = correspondence_check(subject, table, annihilator_numbers(subject))
                assert check['positions_match'], case['initial'].format()
                assert check['values_match'], case['initial'].format()

    def test_annihilator_bound_holds(self, graded_cases):
        for case in graded_cases:
            check = correspondence_check(case['gens'], case['betti'])
            assert check['bound_holds'], check['bound_violations']

    def test_derived_invariants_agree(self, graded_cases):
        for case in graded_cases:
            assert derived_invariants(case['betti']) == derived_invariants(case['initial_betti']), \
                case['initial'].format()

    def test_tail_reduction_numbers_agree(self, graded_cases):
        for case in graded_cases:
            ring = case['gens'][0].ring
            d = dimension(case['initial'])
            spec = ReductionSpec(tail_forms(ring, d), d)
            of_ideal = reduction_number(case['gens'], spec)
            of_initial = reduction_number(case['initial'].to_polynomials(ring), spec)
            assert of_ideal == of_initial, case['initial'].format()

    def test_initial_ideal_of_tail_extension(self, graded_cases):
        for case in graded_cases[:30]:
            ring = case['gens'][0].ring
            d = dimension(case['initial'])
            extended = list(case['gens']) + list(tail_forms(ring, d))
            tail = MonomialIdeal.from_variables(ring.nvars, range(ring.nvars - d, ring.nvars))
            assert initial_ideal(extended, TermOrder.REVLEX) == case['initial'] + tail

    def test_euler_identity(self, graded_cases):
        for case in graded_cases:
            numerator = hilbert_series(case['initial']).numerator
            assert case['betti'].euler_numerator() == numerator
            assert case['initial_betti'].euler_numerator() == numerator
