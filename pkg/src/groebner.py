"""
Groebner Module
===============
Buchberger engine: normal forms, reduced Groebner bases, initial ideals,
linear changes of coordinates and sampled generic initial ideals.
"""

from __future__ import annotations

import heapq
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple
import sys
import os

import numpy as np

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
import config

from src.exceptions import (
    DimensionMismatchError,
    DomainError,
    GinAmbiguityError,
    InhomogeneousIdealError,
    ResourceLimitError,
    SingularChangeError,
    UnsupportedFieldError,
    ZeroIdealError,
)
from src.linalg import determinant
from src.monideal import MonomialIdeal
from src.ringcore import (
    Monomial,
    Polynomial,
    PolynomialRing,
    TermOrder,
    common_ring,
)

logger = logging.getLogger(__name__)


# =============================================================================
# DIVISION
# =============================================================================
def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: TermOrder = None) -> Polynomial:
    """
    Fully reduced remainder of f modulo G.

    No term of the result is divisible by a leading monomial of G, and
    f - result lies in the ideal generated by G.
    """
    order = order or f.ring.order
    divisors = [(g.leading_term(order), g.coefficients) for g in G if g]
    if not divisors:
        return f
    remaining: Dict[Monomial, Any] = f.coefficients
    remainder: Dict[Monomial, Any] = {}
    key = order.key
    while remaining:
        mu = max(remaining, key=key)
        c = remaining[mu]
        for (lm, lc), g_terms in divisors:
            if _divides(lm, mu):
                shift = tuple(a - b for a, b in zip(mu, lm))
                factor = c / lc
                for nu, d in g_terms.items():
                    target = tuple(a + b for a, b in zip(nu, shift))
                    value = remaining.get(target)
                    value = -factor * d if value is None else value - factor * d
                    if value:
                        remaining[target] = value
                    else:
                        remaining.pop(target, None)
                break
        else:
            remainder[mu] = c
            del remaining[mu]
    return Polynomial._from_clean(f.ring, remainder)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    (mf, cf), (mg, cg) = f.leading_term(order), g.leading_term(order)
    lcm = tuple(max(a, b) for a, b in zip(mf, mg))
    left = f.mul_term(tuple(a - b for a, b in zip(lcm, mf)), f.ring.field.one / cf)
    right = g.mul_term(tuple(a - b for a, b in zip(lcm, mg)), g.ring.field.one / cg)
    return left - right


# =============================================================================
# GROEBNER BASES
# =============================================================================
@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced, monic Groebner basis; generators sorted by decreasing leading monomial."""

    generators: Tuple[Polynomial, ...]
    order: TermOrder

    @property
    def ring(self) -> PolynomialRing:
        return self.generators[0].ring

    @property
    def leading_monomials(self) -> List[Monomial]:
        return [g.leading_monomial(self.order) for g in self.generators]

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.generators, self.order)

    def contains(self, f: Polynomial) -> bool:
        return not self.reduce(f)

    def initial_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(len(self.leading_monomials[0]) if self.generators else 0,
                             self.leading_monomials)

    def is_unit(self) -> bool:
        return any(sum(m) == 0 for m in self.leading_monomials)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def _chain_criterion(i: int, j: int, lcm: Monomial, leads: List[Monomial],
                     pending: set) -> bool:
    """True when the pair (i, j) can be skipped by Buchberger's second criterion."""
    for k, lm in enumerate(leads):
        if k in (i, j) or lm is None:
            continue
        if _divides(lm, lcm) and (min(i, k), max(i, k)) not in pending \
                and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def _reduce_basis(basis: List[Polynomial], order: TermOrder) -> List[Polynomial]:
    """Minimalize, inter-reduce and normalize a Groebner basis."""
    basis = sorted(basis, key=lambda g: order.key(g.leading_monomial(order)))
    minimal: List[Polynomial] = []
    for g in basis:
        lm = g.leading_monomial(order)
        if not any(_divides(h.leading_monomial(order), lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        lm, lc = g.leading_term(order)
        tail = g - g.ring.monomial(lm, lc)
        reduced.append((g.ring.monomial(lm, lc) + normal_form(tail, others, order)).monic(order))
    reduced.sort(key=lambda g: order.key(g.leading_monomial(order)), reverse=True)
    return reduced


def buchberger(gens: Sequence[Polynomial], order: TermOrder = None,
               pair_cap: int = None) -> GroebnerBasis:
    """
    Reduced Groebner basis by Buchberger's algorithm.

    Pairs are selected by the normal strategy (smallest lcm first) and
    discarded by the coprime and chain criteria. Raises ResourceLimitError
    once more than pair_cap pairs have been processed.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise ZeroIdealError("cannot compute a Groebner basis of the zero ideal")
    ring = common_ring(gens)
    order = order or ring.order
    pair_cap = pair_cap or config.PAIR_QUEUE_CAP

    basis: List[Polynomial] = []
    leads: List[Optional[Monomial]] = []
    heap: List[Tuple[Any, int, int, int]] = []
    pending: set = set()
    counter = 0

    def add(poly: Polynomial) -> None:
        nonlocal counter
        poly = poly.monic(order)
        lm = poly.leading_monomial(order)
        index = len(basis)
        basis.append(poly)
        leads.append(lm)
        for k in range(index):
            if leads[k] is None:
                continue
            lcm = tuple(max(a, b) for a, b in zip(leads[k], lm))
            heapq.heappush(heap, (order.key(lcm), counter, k, index))
            pending.add((k, index))
            counter += 1

    for g in gens:
        add(g)

    processed = 0
    while heap:
        _, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        processed += 1
        if processed > pair_cap:
            raise ResourceLimitError(f"Buchberger exceeded {pair_cap} S-pairs")
        li, lj = leads[i], leads[j]
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        lcm = tuple(max(a, b) for a, b in zip(li, lj))
        if _chain_criterion(i, j, lcm, leads, pending):
            continue
        h = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if h:
            add(h)
            if sum(leads[-1]) == 0:
                break
    logger.debug("buchberger: %d pairs processed, %d elements before reduction",
                 processed, len(basis))

    if any(sum(lm) == 0 for lm in leads):
        return GroebnerBasis((ring.one(),), order)
    return GroebnerBasis(tuple(_reduce_basis(basis, order)), order)


def require_homogeneous(gens: Sequence[Polynomial]) -> None:
    for g in gens:
        if not g.is_homogeneous():
            raise InhomogeneousIdealError(f"generator {g} is not homogeneous")


def initial_ideal(gens: Sequence[Polynomial], order: TermOrder = None) -> MonomialIdeal:
    """Minimal generators of in_<(I), read off the reduced Groebner basis."""
    gens = [g for g in gens if g]
    ring = common_ring(gens)
    require_homogeneous(gens)
    if all(g.is_monomial() for g in gens):
        return MonomialIdeal(ring.nvars, [g.support[0] for g in gens])
    return buchberger(gens, order).initial_ideal()


# =============================================================================
# COORDINATE CHANGES
# =============================================================================
@dataclass(frozen=True)
class LinearChange:
    """Invertible n x n matrix acting by x_i -> sum_j A[i][j] x_j."""

    matrix: Tuple[Tuple[Any, ...], ...]
    ring: PolynomialRing

    def __post_init__(self):
        n = self.ring.nvars
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise DimensionMismatchError(f"change of coordinates must be {n}x{n}")
        rows = tuple(tuple(self.ring.field(v) for v in row) for row in self.matrix)
        object.__setattr__(self, 'matrix', rows)
        if not determinant(rows, self.ring.field):
            raise SingularChangeError("linear change of coordinates has zero determinant")

    @classmethod
    def identity(cls, ring: PolynomialRing) -> 'LinearChange':
        n = ring.nvars
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), ring)

    @classmethod
    def permutation(cls, ring: PolynomialRing, images: Sequence[int]) -> 'LinearChange':
        """x_i -> x_{images[i]} (0-based)."""
        n = ring.nvars
        return cls(tuple(tuple(int(images[i] == j) for j in range(n)) for i in range(n)), ring)

    def images(self) -> List[Polynomial]:
        gens = self.ring.gens()
        result = []
        for row in self.matrix:
            image = self.ring.zero()
            for coefficient, x in zip(row, gens):
                if coefficient:
                    image = image + x.scalar_mul(coefficient)
            result.append(image)
        return result


def apply_change(gens: Sequence[Polynomial], change: LinearChange) -> List[Polynomial]:
    """Substitute x_i -> sum_j A[i][j] x_j in every generator."""
    images = change.images()
    return [g.substitute(images) for g in gens]


# =============================================================================
# GENERIC INITIAL IDEALS (SAMPLED)
# =============================================================================
@dataclass
class GinSample:
    """Outcome of a randomized gin computation; probabilistic, never certified."""

    ideal: MonomialIdeal
    agreement: int
    trials: int
    seed: int
    candidates: List[Tuple[MonomialIdeal, int]] = field(default_factory=list)
    per_trial: List[MonomialIdeal] = field(default_factory=list)

    @property
    def frequency(self) -> float:
        return self.agreement / self.trials


def random_change(ring: PolynomialRing, rng: np.random.Generator,
                  coefficient_range: Tuple[int, int] = None) -> LinearChange:
    """Random invertible integer matrix; singular draws are rejected."""
    low, high = coefficient_range or config.GIN_COEFFICIENT_RANGE
    n = ring.nvars
    while True:
        entries = rng.integers(low, high + 1, size=(n, n))
        try:
            return LinearChange(tuple(tuple(int(v) for v in row) for row in entries), ring)
        except SingularChangeError:
            logger.debug("gin: rejected singular matrix")


def gin_sample(gens: Sequence[Polynomial], order: TermOrder = None, trials: int = None,
               seed: int = None, coefficient_range: Tuple[int, int] = None) -> GinSample:
    """
    Initial ideal of alpha(I) for `trials` random alpha; the most frequent one wins.

    Each trial draws from its own stream spawned off one SeedSequence, so a
    fixed seed reproduces every trial.
    """
    gens = [g for g in gens if g]
    ring = common_ring(gens)
    if not ring.field.is_rational:
        raise UnsupportedFieldError("gin sampling is only offered in characteristic 0")
    require_homogeneous(gens)
    order = order or ring.order
    trials = config.GIN_DEFAULT_TRIALS if trials is None else trials
    seed = config.GIN_DEFAULT_SEED if seed is None else seed
    if trials < 1:
        raise DomainError("gin sampling needs at least one trial")

    streams = np.random.SeedSequence(seed).spawn(trials)
    outcomes: List[MonomialIdeal] = []
    for t, stream in enumerate(streams):
        change = random_change(ring, np.random.default_rng(stream), coefficient_range)
        ideal = initial_ideal(apply_change(gens, change), order)
        logger.debug("gin trial %d: %s", t + 1, ideal)
        outcomes.append(ideal)

    counts = Counter(outcomes)
    first_seen = {ideal: idx for idx, ideal in reversed(list(enumerate(outcomes)))}
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], first_seen[kv[0]]))
    if trials > 1 and ranked[0][1] == 1:
        raise GinAmbiguityError(f"all {trials} gin trials disagree", candidates=outcomes)
    best, agreement = ranked[0]
    return GinSample(best, agreement, trials, seed, ranked, outcomes)
