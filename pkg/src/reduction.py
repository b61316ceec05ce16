"""
Reduction Number Module
=======================
Reduction numbers of the maximal ideal in R/I: r_J for a given reduction J
generated by linear forms, the canonical tail-variable reduction, the
lower bound from the initial degree and a randomized search for small
reductions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple
import sys
import os

import numpy as np

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
import config

from src.annihilator import annihilator_numbers
from src.exceptions import (
    InternalInconsistencyError,
    NotASystemOfParametersError,
    NotFilterRegularError,
    ReductionSpecError,
    SearchFailureError,
    ZeroIdealError,
)
from src.groebner import initial_ideal, require_homogeneous
from src.monideal import MonomialIdeal, dimension, hilbert_series
from src.ringcore import Polynomial, PolynomialRing, TermOrder, common_ring

logger = logging.getLogger(__name__)


# =============================================================================
# DATA TYPES
# =============================================================================
@dataclass(frozen=True)
class TopDegree:
    """a(M) = max{p : M_p != 0}; None stands for -infinity (M = 0)."""

    value: Optional[int]

    @property
    def is_minus_infinity(self) -> bool:
        return self.value is None

    def to_json(self):
        return '-inf' if self.value is None else self.value

    def __str__(self):
        return '-inf' if self.value is None else str(self.value)


@dataclass(frozen=True)
class ReductionSpec:
    """Linear forms y_1, ..., y_d proposed as a reduction of m in R/I with d = dim(R/I)."""

    forms: Tuple[Polynomial, ...]
    d: int

    def validate(self) -> None:
        for form in self.forms:
            if not form.is_linear_form():
                raise ReductionSpecError(f"{form} is not a linear form")
        if len(self.forms) != self.d:
            raise ReductionSpecError(f"{len(self.forms)} forms given but dim(R/I) = {self.d}")

    def format(self) -> str:
        return '(' + ', '.join(f.to_string() for f in self.forms) + ')'


@dataclass
class ReductionSearchResult:
    """Certified interval [lower_bound, best_r] for r(R/I)."""

    best_r: int
    best_forms: Tuple[Polynomial, ...]
    lower_bound: int
    canonical_r: Optional[int]
    candidates_tried: int
    exhaustive: bool
    seed: int
    history: List[Tuple[Tuple[int, ...], Optional[int]]] = field(default_factory=list)

    @property
    def interval(self) -> Tuple[int, int]:
        return self.lower_bound, self.best_r

    @property
    def is_certified_optimal(self) -> bool:
        return self.best_r == self.lower_bound

    def to_dict(self) -> Dict:
        return {
            'best_r': self.best_r,
            'best_forms': [f.to_string() for f in self.best_forms],
            'lower_bound': self.lower_bound,
            'interval': list(self.interval),
            'canonical_r': self.canonical_r,
            'candidates_tried': self.candidates_tried,
            'exhaustive': self.exhaustive,
            'seed': self.seed,
        }


# =============================================================================
# OPERATIONS
# =============================================================================
def _initial(gens: Sequence[Polynomial]) -> MonomialIdeal:
    return initial_ideal(gens, TermOrder.REVLEX)


def quotient_dimension(gens: Sequence[Polynomial]) -> int:
    return dimension(_initial(gens))


def top_degree(gens: Sequence[Polynomial], forms: Sequence[Polynomial] = ()) -> TopDegree:
    """
    a(R/(I + (forms))) from the revlex initial ideal.

    Raises NotASystemOfParametersError when the quotient does not have finite length.
    """
    combined = [g for g in list(gens) + list(forms) if g]
    require_homogeneous(combined)
    series = hilbert_series(_initial(combined))
    if not series.numerator:
        return TopDegree(None)
    values = series.as_polynomial()
    if values is None:
        raise NotASystemOfParametersError(
            f"R/(I + forms) has dimension {series.dimension()}, not finite length"
        )
    return TopDegree(len(values) - 1 if values else None)


def reduction_number(gens: Sequence[Polynomial], spec: ReductionSpec) -> int:
    """r_J(R/I) = a(R/(I, y_1, ..., y_d)) for a reduction J = (y_1, ..., y_d)."""
    spec.validate()
    actual = quotient_dimension(gens)
    if actual != spec.d:
        raise ReductionSpecError(f"reduction built for dimension {spec.d} but dim(R/I) = {actual}")
    result = top_degree(gens, spec.forms)
    if result.is_minus_infinity:
        raise NotASystemOfParametersError("R/I is zero")
    return result.value


def make_spec(gens: Sequence[Polynomial], forms: Sequence[Polynomial]) -> ReductionSpec:
    return ReductionSpec(tuple(forms), quotient_dimension(gens))


def tail_forms(ring: PolynomialRing, d: int) -> Tuple[Polynomial, ...]:
    """x_{n-d+1}, ..., x_n."""
    return tuple(ring.gen(k) for k in range(ring.nvars - d, ring.nvars))


def canonical_reduction_number(gens: Sequence[Polynomial]) -> int:
    """
    r_J(R/I) for J generated by the last d variables.

    Requires A_0, ..., A_{d-1} of finite length. The value is computed for
    I and for in(I) and the two must coincide.
    """
    gens = [g for g in gens if g]
    ring = common_ring(gens)
    initial = _initial(gens)
    d = dimension(initial)
    table = annihilator_numbers(initial)
    infinite = [i for i in range(d) if not table.finite_flags[i]]
    if infinite:
        raise NotFilterRegularError(
            f"A_{infinite[0]} has infinite length; x_n, ..., x_{{n-d+1}} is not filter regular",
            witness=infinite[0],
        )
    forms = tail_forms(ring, d)
    of_ideal = reduction_number(gens, ReductionSpec(forms, d))
    of_initial = reduction_number(initial.to_polynomials(ring), ReductionSpec(forms, d))
    if of_ideal != of_initial:
        raise InternalInconsistencyError(
            f"tail reduction number of I is {of_ideal} but of in(I) is {of_initial}"
        )
    return of_ideal


def reduction_lower_bound(gens: Sequence[Polynomial]) -> int:
    """(least degree of a nonzero form in I) - 1."""
    return _initial(gens).min_degree() - 1


def _candidate(ring: PolynomialRing, d: int, coefficients: Sequence[int]) -> Tuple[Polynomial, ...]:
    """y_i = x_{n-d+i} + sum_{j <= n-d} a_{i,j} x_j."""
    free = ring.nvars - d
    forms = []
    for i in range(d):
        form = ring.gen(free + i)
        for j in range(free):
            a = coefficients[i * free + j]
            if a:
                form = form + ring.gen(j).scalar_mul(a)
        forms.append(form)
    return tuple(forms)


def _coefficient_vectors(size: int, grid: Sequence[int], budget: int, seed: int):
    """Tail vector first, then the full grid if it fits in the budget, else random grid draws."""
    zero = (0,) * size
    total = len(grid) ** size
    if total <= budget:
        yield True, zero
        for vector in product(grid, repeat=size):
            if vector != zero:
                yield True, vector
        return
    yield False, zero
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    for _ in range(budget - 1):
        yield False, tuple(int(v) for v in rng.choice(np.asarray(grid), size=size))


def search_min_reduction(gens: Sequence[Polynomial], budget: int = None,
                         grid: Sequence[int] = None, seed: int = None) -> ReductionSearchResult:
    """
    Search linear reductions y_i = x_{n-d+i} + sum a_{i,j} x_j over a small integer grid.

    The tail reduction is always candidate 0. Stops early once the lower
    bound is reached.
    """
    budget = config.REDUCTION_SEARCH_BUDGET if budget is None else budget
    grid = tuple(config.REDUCTION_SEARCH_GRID if grid is None else grid)
    seed = config.REDUCTION_SEARCH_SEED if seed is None else seed
    gens = [g for g in gens if g]
    ring = common_ring(gens)
    d = quotient_dimension(gens)
    lower = reduction_lower_bound(gens)
    size = d * (ring.nvars - d)

    best: Optional[Tuple[int, Tuple[Polynomial, ...]]] = None
    canonical = None
    tried = 0
    exhaustive = False
    history = []
    for exhaustive, vector in _coefficient_vectors(size, grid, budget, seed):
        forms = _candidate(ring, d, vector)
        tried += 1
        try:
            r = top_degree(gens, forms).value
        except NotASystemOfParametersError:
            history.append((vector, None))
            continue
        history.append((vector, r))
        if tried == 1:
            canonical = r
        if best is None or r < best[0]:
            best = (r, forms)
            logger.debug("reduction search: r=%s with %s", r, [f.to_string() for f in forms])
        if best[0] <= lower:
            break
    if best is None:
        raise SearchFailureError(f"none of {tried} candidate reductions is a system of parameters")
    if best[0] < lower:
        raise InternalInconsistencyError(f"found r={best[0]} below the lower bound {lower}")
    return ReductionSearchResult(best[0], best[1], lower, canonical, tried, exhaustive, seed, history)


# =============================================================================
# ANALYZER
# =============================================================================
class ReductionAnalyzer:
    """
    Reduction numbers of m in R/I for a homogeneous ideal I.
    """

    def __init__(self, gens: Sequence[Polynomial]):
        self.gens = [g for g in gens if g]
        self._validate_data()
        self.ring = common_ring(self.gens)
        self.d = quotient_dimension(self.gens)

    def _validate_data(self):
        if not self.gens:
            raise ZeroIdealError("reduction analysis needs at least one nonzero generator")
        require_homogeneous(self.gens)

    def for_forms(self, forms: Sequence[Polynomial]) -> int:
        return reduction_number(self.gens, ReductionSpec(tuple(forms), self.d))

    def get_reduction_report(self, forms: Sequence[Polynomial] = None, budget: int = None,
                             seed: int = None) -> Dict:
        report = {
            'dimension': self.d,
            'lower_bound': reduction_lower_bound(self.gens),
        }
        if forms is not None:
            spec = ReductionSpec(tuple(forms), self.d)
            report['given'] = {'forms': [f.to_string() for f in forms],
                               'r': reduction_number(self.gens, spec)}
        try:
            report['canonical'] = {'forms': [f.to_string() for f in tail_forms(self.ring, self.d)],
                                   'r': canonical_reduction_number(self.gens)}
        except NotFilterRegularError as exc:
            report['canonical'] = {'error': str(exc), 'witness': exc.witness}
        if budget is not None:
            report['search'] = search_min_reduction(self.gens, budget, seed=seed).to_dict()
        return report


# =============================================================================
# STANDALONE EXECUTION
# =============================================================================
if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format=config.LOG_FORMAT)
    ring = PolynomialRing.standard(3)
    x1, x2, x3 = ring.gens()
    ideal = [x1 ** 4, x1 * x2 ** 3, x1 * x3 ** 2]
    print("=" * 60)
    print("REDUCTION NUMBERS OF (x1^4, x1*x2^3, x1*x3^2)")
    print("=" * 60)
    print(f"  r_(x2,x3)      = {reduction_number(ideal, make_spec(ideal, [x2, x3]))}")
    print(f"  r_(x2,x3-x1)   = {reduction_number(ideal, make_spec(ideal, [x2, x3 - x1]))}")
    result = search_min_reduction(ideal)
    print(f"  search interval = {result.interval}")
