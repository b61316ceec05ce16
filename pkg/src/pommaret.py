"""
Pommaret Basis Module
=====================
Pommaret division on monomials: class, multiplicative variables,
involutive divisibility, completion to a Pommaret basis and involutive
normal forms. Completion terminates exactly for quasi-stable ideals.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union
import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
import config

from src.exceptions import DomainError, InternalInconsistencyError, InvalidBasisError
from src.groebner import GroebnerBasis
from src.monideal import MonomialIdeal, is_quasi_stable
from src.ringcore import Monomial, Polynomial, TermOrder, format_monomial, iter_monomials_up_to

logger = logging.getLogger(__name__)


# =============================================================================
# POMMARET DIVISION
# =============================================================================
def cls(mu: Monomial) -> int:
    """Smallest 1-based index i with mu_i != 0."""
    for i, e in enumerate(mu):
        if e:
            return i + 1
    raise DomainError("the constant monomial has no class")


def multiplicative_vars(mu: Monomial) -> Tuple[int, ...]:
    """0-based indices of x_1, ..., x_cls(mu); every variable for the constant monomial."""
    if not any(mu):
        return tuple(range(len(mu)))
    return tuple(range(cls(mu)))


def involutive_divides(mu: Monomial, nu: Monomial) -> bool:
    """x^mu divides x^nu and the quotient only involves multiplicative variables of x^mu."""
    if not all(a <= b for a, b in zip(mu, nu)):
        return False
    top = len(multiplicative_vars(mu))
    return all(a == b for a, b in zip(mu[top:], nu[top:]))


@dataclass(frozen=True)
class InvolutiveBasis:
    """Monomial Pommaret basis; each element carries its multiplicative variables."""

    elements: Tuple[Monomial, ...]
    n: int

    @property
    def multiplicative(self) -> Dict[Monomial, Tuple[int, ...]]:
        return {h: multiplicative_vars(h) for h in self.elements}

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.n, self.elements)

    def involutive_divisors(self, mu: Monomial) -> List[Monomial]:
        return [h for h in self.elements if involutive_divides(h, mu)]

    def max_degree(self) -> int:
        return max((sum(h) for h in self.elements), default=0)

    def to_dict(self, names: Sequence[str] = None) -> Dict:
        names = names or [f"{config.DEFAULT_VARIABLE_PREFIX}{i + 1}" for i in range(self.n)]
        return {
            'terminated': True,
            'elements': [format_monomial(h, names) for h in self.elements],
            'multiplicative': {format_monomial(h, names): [names[k] for k in ks]
                               for h, ks in self.multiplicative.items()},
        }

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class DivergenceReport:
    """Completion crossed its degree cap; the ideal has no finite Pommaret basis."""

    cap: int
    steps: int
    partial: Tuple[Monomial, ...]
    next_candidate: Monomial

    def to_dict(self, names: Sequence[str] = None) -> Dict:
        n = len(self.next_candidate)
        names = names or [f"{config.DEFAULT_VARIABLE_PREFIX}{i + 1}" for i in range(n)]
        return {
            'terminated': False,
            'cap': self.cap,
            'steps': self.steps,
            'partial': [format_monomial(h, names) for h in self.partial],
            'next_candidate': format_monomial(self.next_candidate, names),
        }


CompletionResult = Union[InvolutiveBasis, DivergenceReport]


def diverged(result) -> bool:
    return isinstance(result, DivergenceReport)


def default_cap(I: MonomialIdeal) -> int:
    return max(I.n + 2 * I.max_degree(), sum(I.lcm()))


def _sorted(elements) -> Tuple[Monomial, ...]:
    return tuple(sorted(elements, key=TermOrder.REVLEX.key, reverse=True))


def pommaret_complete(I: MonomialIdeal, degree_cap: int = None) -> CompletionResult:
    """
    Complete the minimal generators of I to a Pommaret basis.

    Repeatedly adds the smallest (degree, then revlex) non-multiplicative
    product without an involutive divisor, removing elements that become
    involutively divisible by others. A candidate above degree_cap ends the
    run with a DivergenceReport.
    """
    degree_cap = default_cap(I) if degree_cap is None else degree_cap
    if degree_cap < 0:
        raise DomainError(f"degree cap must be non-negative, got {degree_cap}")
    basis: List[Monomial] = list(I.gens)
    if I.is_unit() or I.is_zero():
        return InvolutiveBasis(_sorted(basis), I.n)

    steps = 0
    while True:
        candidates = set()
        for h in basis:
            for k in range(cls(h) if any(h) else I.n, I.n):
                product = h[:k] + (h[k] + 1,) + h[k + 1:]
                if not any(involutive_divides(g, product) for g in basis):
                    candidates.add(product)
        if not candidates:
            logger.debug("pommaret completion closed after %d steps", steps)
            return InvolutiveBasis(_sorted(basis), I.n)

        chosen = min(candidates, key=TermOrder.REVLEX.key)
        if sum(chosen) > degree_cap:
            if is_quasi_stable(I):
                raise InternalInconsistencyError(
                    f"completion of the quasi-stable ideal {I} crossed degree {degree_cap}"
                )
            logger.debug("pommaret completion diverged at %s", chosen)
            return DivergenceReport(degree_cap, steps, _sorted(basis), chosen)
        basis = [h for h in basis if not involutive_divides(chosen, h)]
        basis.append(chosen)
        steps += 1


def involutive_normal_form(mu: Monomial, basis: InvolutiveBasis) -> Optional[Monomial]:
    """The unique involutive divisor of x^mu in the basis, or None when x^mu is outside the ideal."""
    divisors = basis.involutive_divisors(mu)
    if len(divisors) > 1:
        raise InvalidBasisError(f"{mu} has {len(divisors)} involutive divisors: {divisors}")
    if divisors:
        return divisors[0]
    if basis.ideal().contains(mu):
        raise InvalidBasisError(f"{mu} lies in the ideal but has no involutive divisor")
    return None


def partition_failures(basis: InvolutiveBasis, up_to: int = None) -> List[Tuple[Monomial, int]]:
    """Monomials of the ideal up to a degree whose involutive divisor count is not exactly one."""
    up_to = (2 * basis.max_degree() + basis.n + config.POMMARET_PARTITION_SLACK
             if up_to is None else up_to)
    ideal = basis.ideal()
    failures = []
    for mu in iter_monomials_up_to(basis.n, up_to):
        if ideal.contains(mu):
            count = len(basis.involutive_divisors(mu))
            if count != 1:
                failures.append((mu, count))
    return failures


# =============================================================================
# POLYNOMIAL IDEALS
# =============================================================================
@dataclass(frozen=True)
class PolynomialPommaretBasis:
    """Polynomials with distinct leading terms forming a Pommaret basis of lt(I)."""

    polynomials: Tuple[Polynomial, ...]
    leading: InvolutiveBasis

    def to_dict(self) -> Dict:
        return {'terminated': True, 'polynomials': [p.to_string() for p in self.polynomials],
                'leading': self.leading.to_dict(self.polynomials[0].ring.variables if self.polynomials else None)}


def pommaret_basis_of_groebner(gb: GroebnerBasis, degree_cap: int = None) -> Union[PolynomialPommaretBasis, DivergenceReport]:
    """Lift a monomial Pommaret basis of lt(I) by multiples of Groebner basis elements."""
    leading = pommaret_complete(gb.initial_ideal(), degree_cap)
    if diverged(leading):
        return leading
    lifted = []
    for h in leading.elements:
        g = next(g for g in gb.generators
                 if all(a <= b for a, b in zip(g.leading_monomial(gb.order), h)))
        shift = tuple(b - a for a, b in zip(g.leading_monomial(gb.order), h))
        lifted.append(g.mul_term(shift))
    return PolynomialPommaretBasis(tuple(lifted), leading)


# =============================================================================
# ANALYZER
# =============================================================================
class PommaretAnalyzer:
    """
    Pommaret completion of a monomial ideal with the quasi-stability cross-check.
    """

    def __init__(self, ideal: MonomialIdeal, degree_cap: int = None, names: Sequence[str] = None):
        self.ideal = ideal
        self.degree_cap = degree_cap
        self.names = list(names) if names else None
        self._validate_data()

    def _validate_data(self):
        if not isinstance(self.ideal, MonomialIdeal):
            raise DomainError(f"expected a MonomialIdeal, got {type(self.ideal).__name__}")
        if self.degree_cap is not None and self.degree_cap < 0:
            raise DomainError("degree cap must be non-negative")

    def get_pommaret_report(self) -> Dict:
        result = pommaret_complete(self.ideal, self.degree_cap)
        report = result.to_dict(self.names)
        report['quasi_stable'] = bool(is_quasi_stable(self.ideal))
        if not diverged(result):
            report['partition_failures'] = [[list(mu), c] for mu, c in partition_failures(result)]
        return report


# =============================================================================
# STANDALONE EXECUTION
# =============================================================================
if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format=config.LOG_FORMAT)
    for gens in ([(1, 0, 1), (0, 1, 1), (0, 0, 2)], [(1, 1, 0), (1, 0, 1), (2, 0, 0)]):
        ideal = MonomialIdeal(3, gens)
        print(f"{ideal}: {PommaretAnalyzer(ideal).get_pommaret_report()}")
