"""
Monomial Ideal Module
=====================
Combinatorics of monomial ideals: minimal generators, colons, saturations,
membership, standard monomials, Hilbert series, Krull dimension,
associated primes and the Borel-type / strongly stable / quasi-stable tests.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from statistics import median_low
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple
import sys
import os

import numpy as np
from scipy.special import comb

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
import config

from src.exceptions import DimensionMismatchError, DomainError, InternalInconsistencyError
from src.ringcore import (
    Monomial,
    PolynomialRing,
    TermOrder,
    format_monomial,
    monomials_of_degree,
)

logger = logging.getLogger(__name__)

TPoly = Tuple[int, ...]


# =============================================================================
# INTEGER POLYNOMIALS IN t
# =============================================================================
def _trim(coeffs: Sequence[int]) -> TPoly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def tpoly_add(a: Sequence[int], b: Sequence[int]) -> TPoly:
    size = max(len(a), len(b))
    return _trim([(a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(size)])


def tpoly_sub(a: Sequence[int], b: Sequence[int]) -> TPoly:
    return tpoly_add(a, [-c for c in b])


def tpoly_mul(a: Sequence[int], b: Sequence[int]) -> TPoly:
    if not a or not b:
        return ()
    result = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                result[i + j] += x * y
    return _trim(result)


def tpoly_shift(a: Sequence[int], e: int) -> TPoly:
    """Multiply by t^e."""
    return _trim([0] * e + list(a)) if a else ()


def divide_by_one_minus_t(a: Sequence[int], times: int = 1) -> Optional[TPoly]:
    """Exact quotient a / (1 - t)^times, or None when the division leaves a remainder."""
    current = list(a)
    for _ in range(times):
        if sum(current) != 0:
            return None
        quotient, running = [], 0
        for c in current[:-1]:
            running += c
            quotient.append(running)
        current = quotient
    return _trim(current)


def one_minus_t_power(e: int) -> TPoly:
    """1 - t^e."""
    return _trim([1] + [0] * (e - 1) + [-1]) if e > 0 else ()


# =============================================================================
# MONOMIAL IDEALS
# =============================================================================
def _minimal(n: int, gens: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    candidates = sorted({tuple(g) for g in gens}, key=sum)
    for g in candidates:
        if len(g) != n:
            raise DimensionMismatchError(f"exponent vector {g} in a ring with {n} variables")
    kept: List[Monomial] = []
    for g in candidates:
        if not any(all(a <= b for a, b in zip(h, g)) for h in kept):
            kept.append(g)
    kept.sort(key=TermOrder.REVLEX.key, reverse=True)
    return tuple(kept)


class MonomialIdeal:
    """
    Monomial ideal of K[x_1, ..., x_n] stored by its minimal generators.

    The empty generator set is the zero ideal; the generator (0, ..., 0) is
    the unit ideal. Instances are immutable and hashable.
    """

    def __init__(self, n: int, gens: Iterable[Monomial] = ()):
        self.n = n
        self.gens: Tuple[Monomial, ...] = _minimal(n, gens)
        self._key = frozenset(self.gens)

    @classmethod
    def zero(cls, n: int) -> 'MonomialIdeal':
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> 'MonomialIdeal':
        return cls(n, [(0,) * n])

    @classmethod
    def from_variables(cls, n: int, indices: Iterable[int]) -> 'MonomialIdeal':
        return cls(n, [tuple(int(i == k) for i in range(n)) for k in indices])

    # -------------------------------------------------------------------------
    # Basic predicates
    # -------------------------------------------------------------------------
    @cached_property
    def matrix(self) -> np.ndarray:
        """Generators as rows of an integer matrix."""
        return np.array(self.gens, dtype=np.int64).reshape(len(self.gens), self.n)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.gens)

    def contains(self, mu: Monomial) -> bool:
        if len(mu) != self.n:
            raise DimensionMismatchError(f"exponent vector {mu} in a ring with {self.n} variables")
        if not self.gens:
            return False
        return bool(np.any(np.all(self.matrix <= np.asarray(mu, dtype=np.int64), axis=1)))

    def contains_many(self, monomials: Sequence[Monomial]) -> np.ndarray:
        """Boolean mask: which of the given monomials lie in the ideal."""
        if not monomials:
            return np.zeros(0, dtype=bool)
        if not self.gens:
            return np.zeros(len(monomials), dtype=bool)
        points = np.asarray(monomials, dtype=np.int64)
        return np.all(self.matrix[None, :, :] <= points[:, None, :], axis=2).any(axis=1)

    def contains_ideal(self, other: 'MonomialIdeal') -> bool:
        return all(self.contains(g) for g in other.gens)

    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def min_degree(self) -> int:
        return min((sum(g) for g in self.gens), default=0)

    def lcm(self) -> Monomial:
        if not self.gens:
            return (0,) * self.n
        return tuple(int(v) for v in self.matrix.max(axis=0))

    def pure_power(self, k: int) -> Optional[int]:
        """Exponent a with x_k^a a minimal generator, if any."""
        for g in self.gens:
            if g[k] and sum(g) == g[k]:
                return g[k]
        return None

    def is_artinian(self) -> bool:
        return all(self.pure_power(k) is not None for k in range(self.n)) or self.is_unit()

    # -------------------------------------------------------------------------
    # Ideal arithmetic
    # -------------------------------------------------------------------------
    def __add__(self, other: 'MonomialIdeal') -> 'MonomialIdeal':
        self._check(other)
        return MonomialIdeal(self.n, self.gens + other.gens)

    def add_monomial(self, mu: Monomial) -> 'MonomialIdeal':
        return MonomialIdeal(self.n, self.gens + (tuple(mu),))

    def intersection(self, other: 'MonomialIdeal') -> 'MonomialIdeal':
        self._check(other)
        return MonomialIdeal(self.n, [tuple(max(a, b) for a, b in zip(g, h))
                                      for g in self.gens for h in other.gens])

    def colon(self, mu: Monomial) -> 'MonomialIdeal':
        return colon_monomial(self, mu)

    def reverse(self) -> 'MonomialIdeal':
        """Image under x_i -> x_{n+1-i}."""
        return MonomialIdeal(self.n, [tuple(reversed(g)) for g in self.gens])

    def permute(self, images: Sequence[int]) -> 'MonomialIdeal':
        """Image under x_i -> x_{images[i]} (0-based)."""
        result = []
        for g in self.gens:
            mu = [0] * self.n
            for i, e in enumerate(g):
                mu[images[i]] += e
            result.append(tuple(mu))
        return MonomialIdeal(self.n, result)

    def _check(self, other: 'MonomialIdeal') -> None:
        if other.n != self.n:
            raise DimensionMismatchError(f"ideals in {self.n} and {other.n} variables")

    # -------------------------------------------------------------------------
    # Conversion / display
    # -------------------------------------------------------------------------
    def to_polynomials(self, ring: PolynomialRing) -> list:
        return [ring.monomial(g) for g in self.gens]

    def format(self, names: Sequence[str] = None) -> str:
        names = names or [f"{config.DEFAULT_VARIABLE_PREFIX}{i + 1}" for i in range(self.n)]
        return '(' + ', '.join(format_monomial(g, names) for g in self.gens) + ')'

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and other.n == self.n and other._key == self._key

    def __hash__(self):
        return hash((self.n, self._key))

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"MonomialIdeal({self.n}, {list(self.gens)})"


def minimalize(gens: Iterable[Monomial], n: int = None) -> MonomialIdeal:
    """Divisibility-minimal generating set of the ideal generated by gens."""
    gens = [tuple(g) for g in gens]
    if n is None:
        if not gens:
            raise DimensionMismatchError("cannot infer the variable count of an empty generator list")
        n = len(gens[0])
    return MonomialIdeal(n, gens)


# =============================================================================
# COLONS AND SATURATIONS
# =============================================================================
def colon_monomial(I: MonomialIdeal, mu: Monomial) -> MonomialIdeal:
    """I : x^mu, generated by x^max(g - mu, 0) over the generators g."""
    if len(mu) != I.n:
        raise DimensionMismatchError(f"exponent vector {mu} in a ring with {I.n} variables")
    return MonomialIdeal(I.n, [tuple(max(a - b, 0) for a, b in zip(g, mu)) for g in I.gens])


def colon_variable_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """I : x_k^infinity (0-based k): drop the k-th exponent of every generator."""
    return MonomialIdeal(I.n, [g[:k] + (0,) + g[k + 1:] for g in I.gens])


def colon_prime(I: MonomialIdeal, prime: 'MonomialPrime') -> MonomialIdeal:
    """I : p = intersection of I : x_k over k in p."""
    if not prime.variables:
        return I
    result = None
    for k in sorted(prime.variables):
        step = colon_monomial(I, tuple(int(i == k) for i in range(I.n)))
        result = step if result is None else result.intersection(step)
    return result


def saturation_by_prime(I: MonomialIdeal, prime: 'MonomialPrime') -> MonomialIdeal:
    """I : p^infinity, the fixed point of J -> J : p."""
    current = I
    while True:
        following = colon_prime(current, prime)
        if following == current:
            return current
        current = following


def membership(I: MonomialIdeal, mu: Monomial) -> bool:
    return I.contains(mu)


def standard_monomials(I: MonomialIdeal, d: int) -> List[Monomial]:
    """Degree-d monomials outside I, revlex-decreasing."""
    candidates = monomials_of_degree(I.n, d)
    mask = I.contains_many(candidates)
    return [mu for mu, inside in zip(candidates, mask) if not inside]


# =============================================================================
# HILBERT SERIES
# =============================================================================
@dataclass(frozen=True)
class HilbertSeries:
    """Hilbert series numerator(t) / (1 - t)^nvars of R/I."""

    numerator: TPoly
    nvars: int

    def hilbert_function(self, d: int) -> int:
        """dim_K (R/I)_d."""
        if d < 0:
            return 0
        n = self.nvars
        if n == 0:
            return self.numerator[d] if d < len(self.numerator) else 0
        return sum(c * int(comb(d - k + n - 1, n - 1, exact=True))
                   for k, c in enumerate(self.numerator) if k <= d)

    def values(self, up_to: int) -> List[int]:
        return [self.hilbert_function(d) for d in range(up_to + 1)]

    def _root_multiplicity(self) -> int:
        if not self.numerator:
            return -1
        m, current = 0, self.numerator
        while m < self.nvars:
            quotient = divide_by_one_minus_t(current)
            if quotient is None:
                break
            current, m = quotient, m + 1
        return m

    def dimension(self) -> int:
        """Krull dimension of R/I; -1 for the zero module."""
        if not self.numerator:
            return -1
        return self.nvars - self._root_multiplicity()

    def reduced_numerator(self) -> TPoly:
        """h(t) with series h(t) / (1 - t)^dim."""
        if not self.numerator:
            return ()
        return divide_by_one_minus_t(self.numerator, self._root_multiplicity())

    def degree(self) -> int:
        """Multiplicity e(R/I) = h(1)."""
        return sum(self.reduced_numerator())

    def has_finite_length(self) -> bool:
        return self.dimension() <= 0

    def as_polynomial(self) -> Optional[TPoly]:
        """Coefficients of the series when it is a polynomial, i.e. finite length."""
        return divide_by_one_minus_t(self.numerator, self.nvars)

    def hilbert_polynomial_cutoff(self) -> int:
        """Smallest d0 with HF(d) equal to the Hilbert polynomial for all d >= d0."""
        h = self.reduced_numerator()
        if not h:
            return 0
        return max(len(h) - 1 - self.dimension() + 1, 0)

    def __str__(self):
        terms = []
        for k, c in enumerate(self.numerator):
            if c:
                terms.append(f"{c:+d}" + ('' if k == 0 else f"*t^{k}"))
        body = ' '.join(terms) if terms else '0'
        return f"({body}) / (1-t)^{self.nvars}"


def _pivot(n: int, gens: Tuple[Monomial, ...]) -> Optional[Tuple[int, int]]:
    """Variable power x_k^e with x_k shared by the most generators; None when gens are coprime."""
    counts = [sum(1 for g in gens if g[k]) for k in range(n)]
    k = max(range(n), key=lambda v: (counts[v], -v))
    if counts[k] < 2:
        return None
    e = median_low([g[k] for g in gens if g[k]])
    pure = next((g[k] for g in gens if g[k] and sum(g) == g[k]), None)
    if pure is not None:
        e = min(e, pure - 1)
    return k, e


@lru_cache(maxsize=8192)
def _numerator(n: int, gens: Tuple[Monomial, ...]) -> TPoly:
    if not gens:
        return (1,)
    if any(sum(g) == 0 for g in gens):
        return ()
    pivot = _pivot(n, gens)
    if pivot is None:
        result: TPoly = (1,)
        for g in gens:
            result = tpoly_mul(result, one_minus_t_power(sum(g)))
        return result
    k, e = pivot
    power = tuple(e if i == k else 0 for i in range(n))
    ideal = MonomialIdeal(n, gens)
    bigger = ideal.add_monomial(power)
    quotient = colon_monomial(ideal, power)
    return tpoly_add(_numerator(n, bigger.gens), tpoly_shift(_numerator(n, quotient.gens), e))


def hilbert_series(I: MonomialIdeal) -> HilbertSeries:
    """Hilbert series of R/I by pivot recursion num(I) = num(I + (p)) + t^deg(p) num(I : p)."""
    numerator = _numerator(I.n, I.gens)
    logger.debug("hilbert series of %s: %s", I, numerator)
    return HilbertSeries(numerator, I.n)


# =============================================================================
# DIMENSION AND ASSOCIATED PRIMES
# =============================================================================
def dimension(I: MonomialIdeal) -> int:
    """
    Krull dimension of R/I.

    n minus the size of a smallest variable set meeting the support of
    every generator; -1 for the unit ideal, n for the zero ideal.
    """
    if I.is_unit():
        return -1
    supports = [frozenset(k for k, e in enumerate(g) if e) for g in I.gens]
    for size in range(I.n + 1):
        for cover in combinations(range(I.n), size):
            chosen = set(cover)
            if all(s & chosen for s in supports):
                return I.n - size
    return 0


@dataclass(frozen=True)
class MonomialPrime:
    """Prime (x_i : i in variables), 0-based indices; the empty set stands for the zero ideal."""

    variables: FrozenSet[int]
    n: int

    @classmethod
    def of(cls, n: int, indices: Iterable[int]) -> 'MonomialPrime':
        return cls(frozenset(indices), n)

    @classmethod
    def initial_segment(cls, n: int, j: int) -> 'MonomialPrime':
        """(x_1, ..., x_j)."""
        return cls(frozenset(range(j)), n)

    @classmethod
    def terminal_segment(cls, n: int, k: int) -> 'MonomialPrime':
        """(x_k, ..., x_n) with 1-based k."""
        return cls(frozenset(range(k - 1, n)), n)

    def is_initial_segment(self) -> bool:
        return self.variables == frozenset(range(len(self.variables)))

    def is_terminal_segment(self) -> bool:
        return self.variables == frozenset(range(self.n - len(self.variables), self.n))

    def is_maximal(self) -> bool:
        return len(self.variables) == self.n

    def to_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.from_variables(self.n, self.variables)

    def format(self, names: Sequence[str] = None) -> str:
        names = names or [f"{config.DEFAULT_VARIABLE_PREFIX}{i + 1}" for i in range(self.n)]
        return '(' + ', '.join(names[k] for k in sorted(self.variables)) + ')'

    def __str__(self):
        return self.format()


def _irreducible_components(I: MonomialIdeal) -> Set[Tuple[int, ...]]:
    """Exponent vectors a of irreducible components (x_k^{a_k} : a_k > 0) of I."""
    split = next((g for g in I.gens if sum(1 for e in g if e) >= 2), None)
    if split is None:
        if I.is_unit():
            return set()
        a = [0] * I.n
        for g in I.gens:
            k = next(i for i, e in enumerate(g) if e)
            a[k] = g[k]
        return {tuple(a)}
    k = next(i for i, e in enumerate(split) if e)
    power = tuple(split[k] if i == k else 0 for i in range(I.n))
    rest = split[:k] + (0,) + split[k + 1:]
    return _irreducible_components(I.add_monomial(power)) | _irreducible_components(I.add_monomial(rest))


def _component_contains(outer: Tuple[int, ...], inner: Tuple[int, ...]) -> bool:
    """Irreducible (x^inner) is contained in (x^outer)."""
    return all(b and a and b <= a or not a for a, b in zip(inner, outer))


def irreducible_decomposition(I: MonomialIdeal) -> List[MonomialIdeal]:
    """Irredundant irreducible components; empty for the unit ideal."""
    components = _irreducible_components(I)
    irredundant = [
        c for c in components
        if not any(d != c and _component_contains(c, d) for d in components)
    ]
    irredundant.sort(key=lambda a: (sum(1 for e in a if e), a))
    return [MonomialIdeal(I.n, [tuple(e if i == k else 0 for i in range(I.n))
                                for k, e in enumerate(a) if e]) for a in irredundant]


def associated_primes(I: MonomialIdeal) -> Set[MonomialPrime]:
    """Ass(R/I) as radicals of the irredundant irreducible components."""
    primes = set()
    for component in irreducible_decomposition(I):
        primes.add(MonomialPrime(frozenset(k for g in component.gens for k, e in enumerate(g) if e), I.n))
    return primes


# =============================================================================
# CLASSIFICATION
# =============================================================================
@dataclass(frozen=True)
class ClassificationResult:
    """Outcome of a stability test; on failure, the 1-based index and a monomial witness."""

    holds: bool
    index: Optional[int] = None
    witness: Optional[Monomial] = None

    def __bool__(self):
        return self.holds

    def to_dict(self) -> Dict:
        return {'holds': self.holds, 'index': self.index,
                'witness': list(self.witness) if self.witness is not None else None}


def _compare_saturations(I: MonomialIdeal, prime_for: callable) -> ClassificationResult:
    # I : p^inf is always inside I : x_k^inf for x_k in p; only one inclusion needs checking.
    for k in range(I.n):
        by_variable = colon_variable_power(I, k)
        by_prime = saturation_by_prime(I, prime_for(k))
        for g in by_variable.gens:
            if not by_prime.contains(g):
                return ClassificationResult(False, k + 1, g)
    return ClassificationResult(True)


def _cross_check(I: MonomialIdeal, verdict: ClassificationResult, segment_test: str, label: str) -> None:
    if not (__debug__ and config.CROSS_CHECK_CLASSIFICATION):
        return
    by_primes = all(getattr(p, segment_test)() for p in associated_primes(I))
    if by_primes != verdict.holds:
        raise InternalInconsistencyError(
            f"{label} test on {I}: colon criterion says {verdict.holds}, associated primes say {by_primes}"
        )


def is_borel_type(I: MonomialIdeal) -> ClassificationResult:
    """I : x_j^inf == I : (x_1, ..., x_j)^inf for every j."""
    verdict = _compare_saturations(I, lambda k: MonomialPrime.initial_segment(I.n, k + 1))
    _cross_check(I, verdict, 'is_initial_segment', 'Borel type')
    return verdict


def is_quasi_stable(I: MonomialIdeal) -> ClassificationResult:
    """I : x_k^inf == I : (x_k, ..., x_n)^inf for every k."""
    verdict = _compare_saturations(I, lambda k: MonomialPrime.terminal_segment(I.n, k + 1))
    _cross_check(I, verdict, 'is_terminal_segment', 'quasi-stable')
    return verdict


def is_borel_type_by_exchange(I: MonomialIdeal) -> ClassificationResult:
    """
    Exchange form of the Borel-type condition.

    For every generator u and j < i there is t >= 0 with
    x_j^t * u / x_i^{nu_i(u)} in I.
    """
    for u in I.gens:
        for i in range(I.n):
            if not u[i]:
                continue
            stripped = u[:i] + (0,) + u[i + 1:]
            for j in range(i):
                if not colon_variable_power(I, j).contains(stripped):
                    return ClassificationResult(False, i + 1, u)
    return ClassificationResult(True)


def quasi_stable_chain(I: MonomialIdeal) -> ClassificationResult:
    """
    Chain form of quasi-stability.

    I : x_1^inf in I : x_2^inf in ... in I : x_d^inf with d = dim(R/I), and
    a pure power of every x_k with k > d lies in I.
    """
    d = dimension(I)
    if d < 0:
        return ClassificationResult(True)
    saturations = [colon_variable_power(I, k) for k in range(d)]
    for k in range(1, d):
        missing = next((g for g in saturations[k - 1].gens if not saturations[k].contains(g)), None)
        if missing is not None:
            return ClassificationResult(False, k + 1, missing)
    for k in range(d, I.n):
        if I.pure_power(k) is None:
            return ClassificationResult(False, k + 1, tuple(int(i == k) for i in range(I.n)))
    return ClassificationResult(True)


def _exchange_test(I: MonomialIdeal, all_sources: bool) -> ClassificationResult:
    for u in I.gens:
        support = [k for k, e in enumerate(u) if e]
        sources = support if all_sources else support[-1:]
        for j in sources:
            for i in range(j):
                moved = list(u)
                moved[j] -= 1
                moved[i] += 1
                if not I.contains(tuple(moved)):
                    return ClassificationResult(False, j + 1, tuple(moved))
    return ClassificationResult(True)


def is_strongly_stable(I: MonomialIdeal) -> ClassificationResult:
    """x_i (u / x_j) in I for every generator u, x_j | u, i < j."""
    return _exchange_test(I, all_sources=True)


def is_stable(I: MonomialIdeal) -> ClassificationResult:
    """Exchange test restricted to the largest variable index dividing each generator."""
    return _exchange_test(I, all_sources=False)


# =============================================================================
# CLASSIFIER
# =============================================================================
class IdealClassifier:
    """
    Collects the classification flags and associated primes of a monomial ideal.
    """

    def __init__(self, ideal: MonomialIdeal, names: Sequence[str] = None):
        self.ideal = ideal
        self.names = list(names) if names else None
        self._validate_data()

    def _validate_data(self):
        if not isinstance(self.ideal, MonomialIdeal):
            raise DomainError(f"expected a MonomialIdeal, got {type(self.ideal).__name__}")
        if self.names is not None and len(self.names) != self.ideal.n:
            raise DimensionMismatchError(f"{len(self.names)} names for {self.ideal.n} variables")

    def classify(self) -> Dict[str, ClassificationResult]:
        return {
            'borel_type': is_borel_type(self.ideal),
            'strongly_stable': is_strongly_stable(self.ideal),
            'stable': is_stable(self.ideal),
            'quasi_stable': is_quasi_stable(self.ideal),
        }

    def get_classification_report(self) -> Dict:
        flags = self.classify()
        primes = sorted(associated_primes(self.ideal), key=lambda p: (len(p.variables), sorted(p.variables)))
        return {
            'ideal': self.ideal.format(self.names),
            'generators': [list(g) for g in self.ideal.gens],
            'flags': {name: result.holds for name, result in flags.items()},
            'witnesses': {name: result.to_dict() for name, result in flags.items() if not result.holds},
            'associated_primes': [p.format(self.names) for p in primes],
            'dimension': dimension(self.ideal),
        }


# =============================================================================
# STANDALONE EXECUTION
# =============================================================================
if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format=config.LOG_FORMAT)
    ideal = MonomialIdeal(3, [(3, 0, 0), (1, 2, 0), (3, 1, 0), (1, 0, 2)])
    print("=" * 60)
    print("MONOMIAL IDEAL CLASSIFICATION")
    print("=" * 60)
    report = IdealClassifier(ideal).get_classification_report()
    print(f"\nIdeal: {report['ideal']}")
    for flag, value in report['flags'].items():
        print(f"  {flag:<16} {value}")
    print(f"  Ass(R/I): {', '.join(report['associated_primes'])}")
    print(f"  Hilbert series: {hilbert_series(ideal)}")
