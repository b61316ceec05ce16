import numpy as np
import pytest

from conftest import BETTI_GIN, BETTI_I, BETTI_IN_I, CUBIC_GIN, random_monomial_ideals
from src.betti import (
    IDEAL,
    QUOTIENT,
    BettiAnalyzer,
    BettiTable,
    betti_koszul,
    betti_of_graded,
    betti_oracle,
    compare_tables,
    derived_invariants,
    extremal_betti,
    upper_semicontinuous,
)
from src.exceptions import DomainError, ResourceLimitError, UnitIdealError
from src.groebner import apply_change, initial_ideal, random_change
from src.monideal import MonomialIdeal, hilbert_series
from src.report_generator import ReportGenerator
from src.ringcore import GF, TermOrder

SMALL_QUOTIENT = {(0, 0): 1, (1, 2): 2, (1, 3): 1, (2, 3): 1, (2, 4): 1}


@pytest.fixture
def render():
    return ReportGenerator().render_betti_diagram


class TestBettiTable:
    def test_subject_conversion(self):
        table = BettiTable(SMALL_QUOTIENT, 2)
        ideal = table.as_ideal()
        assert ideal.subject == IDEAL
        assert ideal.get(0, 2) == 2 and ideal.get(1, 4) == 1
        assert ideal.as_quotient().entries == table.entries
        assert ideal == table

    def test_diagram_view(self):
        table = BettiTable(SMALL_QUOTIENT, 2)
        assert table.columns == [0, 1, 2]
        assert table.rows == [0, 1, 2]
        frame = table.to_frame()
        assert frame.loc[1, 1] == 2
        assert frame.loc[2, 2] == 1
        assert table.totals() == {0: 1, 1: 3, 2: 2}

    def test_euler_numerator(self):
        assert BettiTable(SMALL_QUOTIENT, 2).euler_numerator() == (1, 0, -2, 0, 1)

    def test_unknown_subject(self):
        with pytest.raises(DomainError):
            BettiTable({}, 2, 'module')


class TestKoszul:
    def test_small_ideal(self, small_ideal):
        assert betti_koszul(small_ideal).entries == SMALL_QUOTIENT

    def test_cubic_initial_ideal_diagram(self, cubic_initial, render):
        assert render(betti_koszul(cubic_initial, subject=IDEAL)) == BETTI_IN_I

    def test_cubic_gin_diagram(self, render):
        assert render(betti_koszul(MonomialIdeal(3, CUBIC_GIN), subject=IDEAL)) == BETTI_GIN

    def test_cubic_ideal_diagram(self, cubic_gens, render):
        assert render(betti_of_graded(cubic_gens, subject=IDEAL)) == BETTI_I

    def test_graded_monomial_input_uses_monomial_path(self, ring3):
        x1, x2, x3 = ring3.gens()
        table = betti_of_graded([x1 * x2, x3 ** 2])
        assert table.entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}

    def test_truncation(self, small_ideal):
        table = betti_koszul(small_ideal, j_max=3)
        assert table.truncated
        assert table.get(2, 4) == 0
        with pytest.raises(DomainError):
            derived_invariants(table)
        with pytest.raises(DomainError):
            extremal_betti(table)

    def test_unit_ideal(self):
        with pytest.raises(UnitIdealError):
            betti_koszul(MonomialIdeal.unit(2))

    def test_prime_characteristic(self, small_ideal):
        assert betti_koszul(small_ideal, coefficient_field=GF(2)).entries == SMALL_QUOTIENT

    def test_euler_identity_on_corpus(self, monomial_corpus):
        for I in monomial_corpus[:60]:
            assert betti_koszul(I).euler_numerator() == hilbert_series(I).numerator


class TestOracle:
    def test_small_ideal(self, small_ideal):
        assert betti_oracle(small_ideal).entries == SMALL_QUOTIENT

    def test_cap(self, cubic_initial):
        with pytest.raises(ResourceLimitError):
            betti_oracle(cubic_initial, cap=10)

    def test_example_ideals(self, cubic_initial, quasi_stable_ideal, borel_ideal, not_quasi_stable_ideal):
        for I in (cubic_initial, quasi_stable_ideal, borel_ideal, not_quasi_stable_ideal,
                  MonomialIdeal(3, CUBIC_GIN)):
            assert betti_oracle(I) == betti_koszul(I)

    @pytest.mark.slow
    def test_agrees_with_koszul_on_corpus(self, monomial_corpus):
        for I in monomial_corpus:
            koszul = betti_koszul(I)
            assert betti_oracle(I).entries == koszul.entries
            assert koszul.euler_numerator() == hilbert_series(I).numerator


class TestInvariants:
    def test_small_ideal(self, small_ideal):
        invariants = derived_invariants(betti_koszul(small_ideal))
        assert (invariants.pd, invariants.depth) == (2, 0)
        assert (invariants.reg_quotient, invariants.reg_ideal) == (2, 3)
        assert invariants.dim == 0
        assert invariants.is_cohen_macaulay

    def test_not_cohen_macaulay(self, quasi_stable_ideal):
        invariants = derived_invariants(betti_koszul(quasi_stable_ideal))
        assert invariants.dim == 2
        assert invariants.depth < invariants.dim
        assert not invariants.is_cohen_macaulay

    def test_cubic_initial_ideal(self, cubic_initial):
        invariants = derived_invariants(betti_koszul(cubic_initial, subject=IDEAL))
        assert invariants.reg_ideal == 4
        assert invariants.depth == 0

    def test_extremal_small_ideal(self, small_ideal):
        assert extremal_betti(betti_koszul(small_ideal)).entries == ((2, 4, 1),)

    def test_extremal_cubic(self, cubic_initial):
        extremal = extremal_betti(betti_koszul(cubic_initial, subject=IDEAL))
        assert extremal.entries == ((2, 6, 2),)


class TestComparison:
    def test_initial_vs_gin(self, cubic_initial):
        initial = betti_koszul(cubic_initial)
        gin = betti_koszul(MonomialIdeal(3, CUBIC_GIN))
        comparison = compare_tables(initial, gin)
        assert not comparison['equal']
        assert comparison['minimal_generators'] == [8, 10]
        assert upper_semicontinuous(initial, gin)
        assert not upper_semicontinuous(gin, initial)

    def test_ideal_is_bounded_by_initial_ideal(self, ring3):
        rng = np.random.default_rng(41)
        for I in random_monomial_ideals(15, seed=43, max_gens=4, max_degree=3):
            change = random_change(ring3, rng, (-2, 2))
            gens = apply_change(I.to_polynomials(ring3), change)
            initial = initial_ideal(gens, TermOrder.REVLEX)
            assert upper_semicontinuous(betti_of_graded(gens), betti_koszul(initial)), I.format()

    def test_analyzer_report(self, cubic_gens):
        report = BettiAnalyzer(cubic_gens).get_betti_report()
        assert report['euler_identity']
        assert report['comparison']['same_minimal_generators']
        assert report['comparison']['same_extremal']
        assert not report['comparison']['equal']
        assert report['invariants']['ideal'] == report['invariants']['initial_ideal']

    def test_analyzer_rejects_inhomogeneous(self, ring3):
        x1, x2, _ = ring3.gens()
        with pytest.raises(ValueError):
            BettiAnalyzer([x1 ** 2 + x2])

    def test_rows_and_subject_of_graded(self, cubic_gens):
        table = betti_of_graded(cubic_gens)
        assert table.subject == QUOTIENT
        assert table.get(3, 6) == 2
