import numpy as np
import pytest
import sympy

from conftest import CUBIC_GIN, CUBIC_INITIAL
from src.exceptions import (
    DimensionMismatchError,
    DomainError,
    InhomogeneousIdealError,
    ResourceLimitError,
    SingularChangeError,
    UnsupportedFieldError,
)
from src.groebner import (
    LinearChange,
    apply_change,
    buchberger,
    gin_sample,
    initial_ideal,
    normal_form,
    random_change,
    require_homogeneous,
    s_polynomial,
)
from src.monideal import MonomialIdeal
from src.ringcore import GF, Polynomial, PolynomialRing, TermOrder, monomials_of_degree


def _to_sympy(polys, ring):
    symbols = sympy.symbols(' '.join(ring.variables))
    exprs = [sympy.sympify(p.to_string().replace('^', '**'), locals=dict(zip(ring.variables, symbols)))
             for p in polys]
    return exprs, symbols


def _sympy_leading_monomials(polys, ring, order):
    exprs, symbols = _to_sympy(polys, ring)
    basis = sympy.groebner(exprs, *symbols, order=order)
    return {sympy.Poly(g, *symbols).monoms(order=order)[0] for g in basis.exprs}


def _random_form(ring, rng, degree, low=-3, high=4):
    return Polynomial(ring, {mu: int(rng.integers(low, high)) for mu in monomials_of_degree(ring.nvars, degree)})


def _random_generators(ring, rng):
    count = int(rng.integers(2, 4))
    return [g for g in (_random_form(ring, rng, int(rng.integers(2, 4))) for _ in range(count)) if g]


class TestNormalForm:
    def test_remainder_has_no_divisible_terms(self, ring3):
        x1, x2, x3 = ring3.gens()
        G = [x1 ** 2 - x2 * x3, x2 ** 2]
        r = normal_form(x1 ** 3 + x1 * x2 ** 2 + x3 ** 2, G, TermOrder.REVLEX)
        assert r == x1 * x2 * x3 + x3 ** 2

    def test_empty_divisor_list(self, ring3):
        f = ring3.gen(0) + ring3.gen(1)
        assert normal_form(f, []) == f

    def test_reduction_is_idempotent(self):
        rng = np.random.default_rng(23)
        ring = PolynomialRing.standard(3)
        for _ in range(25):
            G = _random_generators(ring, rng)
            f = _random_form(ring, rng, 4)
            for order in (TermOrder.REVLEX, TermOrder.LEX):
                r = normal_form(f, G, order)
                assert normal_form(r, G, order) == r

    def test_s_polynomial_cancels_leading_terms(self, ring3):
        x1, x2, x3 = ring3.gens()
        s = s_polynomial(x1 ** 2 - x2 * x3, x1 * x2 - x3 ** 2, TermOrder.REVLEX)
        assert s == -x2 ** 2 * x3 + x1 * x3 ** 2


class TestBuchberger:
    def test_cubic_initial_ideal(self, cubic_gens):
        assert initial_ideal(cubic_gens, TermOrder.REVLEX) == MonomialIdeal(3, CUBIC_INITIAL)

    def test_cubic_matches_sympy(self, cubic_gens, ring3):
        basis = buchberger(cubic_gens, TermOrder.REVLEX)
        assert set(basis.leading_monomials) == _sympy_leading_monomials(cubic_gens, ring3, 'grevlex')

    @pytest.mark.parametrize('order, sympy_order', [(TermOrder.REVLEX, 'grevlex'), (TermOrder.LEX, 'lex'),
                                                    (TermOrder.DEGLEX, 'grlex')])
    def test_random_ideals_match_sympy(self, order, sympy_order):
        rng = np.random.default_rng(11)
        ring = PolynomialRing.standard(3)
        x = ring.gens()
        for _ in range(8):
            gens = []
            for _ in range(3):
                a, b, c = (int(v) for v in rng.integers(-3, 4, size=3))
                gens.append((a * x[0] + b * x[1] + c * x[2]) * (x[int(rng.integers(3))] + x[2]))
            gens = [g for g in gens if g]
            if not gens:
                continue
            basis = buchberger(gens, order)
            assert set(basis.leading_monomials) == _sympy_leading_monomials(gens, ring, sympy_order)
            assert all(basis.contains(g) for g in gens)

    def test_basis_generates_the_input_ideal(self):
        rng = np.random.default_rng(37)
        ring = PolynomialRing.standard(3)
        for _ in range(12):
            gens = _random_generators(ring, rng)
            basis = buchberger(gens, TermOrder.REVLEX)
            assert all(not normal_form(g, basis.generators, TermOrder.REVLEX) for g in gens)
            exprs, symbols = _to_sympy(gens, ring)
            reference = sympy.groebner(exprs, *symbols, order='grevlex')
            basis_exprs, _ = _to_sympy(basis.generators, ring)
            assert all(reference.contains(g) for g in basis_exprs)

    def test_basis_is_reduced_and_monic(self, cubic_gens):
        basis = buchberger(cubic_gens, TermOrder.REVLEX)
        leads = basis.leading_monomials
        for g in basis.generators:
            assert g.leading_coefficient(TermOrder.REVLEX) == 1
            for mu in g.support:
                divisible = [lm for lm in leads if all(a <= b for a, b in zip(lm, mu))]
                assert divisible in ([], [g.leading_monomial(TermOrder.REVLEX)])

    def test_unit_ideal(self, ring3):
        x1, x2, _ = ring3.gens()
        basis = buchberger([x1, x1 + ring3.one()], TermOrder.REVLEX)
        assert basis.is_unit()
        assert basis.generators == (ring3.one(),)

    def test_pair_cap(self, cubic_gens):
        with pytest.raises(ResourceLimitError):
            buchberger(cubic_gens, TermOrder.REVLEX, pair_cap=1)

    def test_monomial_input_is_its_own_initial_ideal(self, ring3):
        x1, x2, x3 = ring3.gens()
        assert initial_ideal([x1 * x3, x2 ** 2], TermOrder.LEX) == MonomialIdeal(3, [(1, 0, 1), (0, 2, 0)])

    def test_require_homogeneous(self, ring3):
        x1, x2, _ = ring3.gens()
        with pytest.raises(InhomogeneousIdealError):
            require_homogeneous([x1 ** 2 + x2])

    def test_initial_ideal_rejects_inhomogeneous_generators(self, ring3):
        x1, x2, x3 = ring3.gens()
        with pytest.raises(InhomogeneousIdealError):
            initial_ideal([x1 * x3, x2 ** 2 + x1], TermOrder.REVLEX)


class TestLinearChanges:
    def test_singular_matrix(self, ring3):
        with pytest.raises(SingularChangeError):
            LinearChange(((1, 2, 0), (2, 4, 0), (0, 0, 1)), ring3)

    def test_shape(self, ring3):
        with pytest.raises(DimensionMismatchError):
            LinearChange(((1, 0), (0, 1)), ring3)

    def test_permutation(self, ring3):
        x1, x2, x3 = ring3.gens()
        change = LinearChange.permutation(ring3, [2, 1, 0])
        assert apply_change([x1 * x2 ** 2], change) == [x3 * x2 ** 2]

    def test_identity_keeps_generators(self, cubic_gens, ring3):
        assert apply_change(cubic_gens, LinearChange.identity(ring3)) == cubic_gens

    def test_random_change_is_invertible(self, ring3):
        change = random_change(ring3, np.random.default_rng(3), (-2, 2))
        assert len(change.images()) == 3


class TestGin:
    def test_characteristic_p_is_rejected(self):
        ring = PolynomialRing.standard(2, characteristic=5)
        x, y = ring.gens()
        with pytest.raises(UnsupportedFieldError):
            gin_sample([x * y], trials=3, seed=1)

    def test_same_seed_same_outcome(self, ring3):
        x1, x2, x3 = ring3.gens()
        gens = [x1 * x3, x2 ** 2]
        first = gin_sample(gens, TermOrder.REVLEX, trials=3, seed=5)
        second = gin_sample(gens, TermOrder.REVLEX, trials=3, seed=5)
        assert first.per_trial == second.per_trial
        assert first.ideal == second.ideal

    def test_gin_of_complete_intersection(self, ring3):
        x1, x2, x3 = ring3.gens()
        sample = gin_sample([x1 * x3, x2 ** 2], TermOrder.REVLEX, trials=3, seed=1)
        assert sample.ideal == MonomialIdeal(3, [(2, 0, 0), (1, 1, 0), (0, 3, 0)])
        assert sample.agreement == 3

    def test_at_least_one_trial(self, ring3):
        x1, x2, x3 = ring3.gens()
        with pytest.raises(DomainError):
            gin_sample([x1 * x3, x2 ** 2], trials=0, seed=1)

    @pytest.mark.slow
    def test_cubic_gin_over_seeds(self, cubic_gens):
        hits = 0
        for seed in range(1, 11):
            sample = gin_sample(cubic_gens, TermOrder.REVLEX, trials=5, seed=seed)
            if sample.ideal == MonomialIdeal(3, CUBIC_GIN) and sample.frequency >= 0.8:
                hits += 1
        assert hits >= 9
