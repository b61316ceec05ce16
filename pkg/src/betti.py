"""
Betti Numbers Module
====================
Graded Betti numbers of R/I and of I through Koszul homology, with a
simplicial brute-force oracle for monomial ideals.
Derives pd, depth, regularity and the Cohen-Macaulay flag and locates
extremal Betti numbers.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple
import sys
import os

import numpy as np
import pandas as pd

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
import config

from src.exceptions import DomainError, ResourceLimitError, UnitIdealError, ZeroIdealError
from src.groebner import GroebnerBasis, buchberger, require_homogeneous
from src.linalg import rank
from src.monideal import HilbertSeries, MonomialIdeal, hilbert_series, standard_monomials
from src.ringcore import QQ, Field, Monomial, Polynomial, TermOrder, common_ring

logger = logging.getLogger(__name__)

QUOTIENT = 'quotient'
IDEAL = 'ideal'


# =============================================================================
# TABLES
# =============================================================================
@dataclass(frozen=True)
class BettiTable:
    """
    Graded Betti numbers beta_{i,j} keyed by (homological index, internal degree).

    `subject` says whether the numbers belong to R/I or to I; the two are
    related by beta_i(I) = beta_{i+1}(R/I). Only nonzero entries are stored.
    """

    entries: Dict[Tuple[int, int], int]
    n: int
    subject: str = QUOTIENT
    truncated: bool = False
    j_max: Optional[int] = None

    def __post_init__(self):
        if self.subject not in (QUOTIENT, IDEAL):
            raise DomainError(f"unknown Betti table subject '{self.subject}'")
        object.__setattr__(self, 'entries', {k: v for k, v in sorted(self.entries.items()) if v})

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def diagram_get(self, i: int, row: int) -> int:
        """Entry at column i and diagram row j - i."""
        return self.get(i, i + row)

    @property
    def columns(self) -> List[int]:
        if not self.entries:
            return []
        return list(range(min(i for i, _ in self.entries), max(i for i, _ in self.entries) + 1))

    @property
    def rows(self) -> List[int]:
        if not self.entries:
            return []
        shifts = [j - i for i, j in self.entries]
        return list(range(min(shifts), max(shifts) + 1))

    def totals(self) -> Dict[int, int]:
        result: Dict[int, int] = defaultdict(int)
        for (i, _), value in self.entries.items():
            result[i] += value
        return dict(sorted(result.items()))

    def as_quotient(self) -> 'BettiTable':
        if self.subject == QUOTIENT:
            return self
        shifted = {(i + 1, j): v for (i, j), v in self.entries.items()}
        shifted[(0, 0)] = 1
        return BettiTable(shifted, self.n, QUOTIENT, self.truncated, self.j_max)

    def as_ideal(self) -> 'BettiTable':
        if self.subject == IDEAL:
            return self
        shifted = {(i - 1, j): v for (i, j), v in self.entries.items() if i > 0}
        return BettiTable(shifted, self.n, IDEAL, self.truncated, self.j_max)

    def euler_numerator(self) -> Tuple[int, ...]:
        """sum_{i,j} (-1)^i beta_{i,j}(R/I) t^j, the Hilbert series numerator of R/I."""
        entries = self.as_quotient().entries
        if not entries:
            return ()
        top = max(j for _, j in entries)
        coeffs = [0] * (top + 1)
        for (i, j), v in entries.items():
            coeffs[j] += (-1) ** i * v
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return tuple(coeffs)

    def to_frame(self) -> pd.DataFrame:
        """Diagram view: index = row j - i, columns = homological index i."""
        rows, columns = self.rows, self.columns
        data = [[self.diagram_get(i, r) for i in columns] for r in rows]
        frame = pd.DataFrame(data, index=rows, columns=columns, dtype=int)
        frame.index.name = 'j-i'
        frame.columns.name = 'i'
        return frame

    def to_dict(self) -> Dict:
        return {
            'subject': self.subject,
            'n': self.n,
            'truncated': self.truncated,
            'entries': [[i, j, v] for (i, j), v in self.entries.items()],
            'totals': {str(i): v for i, v in self.totals().items()},
        }

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.n == other.n and self.as_quotient().entries == other.as_quotient().entries

    def __hash__(self):
        return hash((self.n, tuple(self.as_quotient().entries.items())))


@dataclass(frozen=True)
class ExtremalSet:
    """Extremal entries as (i, j, value) triples in the indexing of `subject`."""

    entries: Tuple[Tuple[int, int, int], ...]
    subject: str = QUOTIENT

    @property
    def positions(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, j, _ in self.entries]

    def values(self) -> Dict[Tuple[int, int], int]:
        return {(i, j): v for i, j, v in self.entries}

    def to_dict(self) -> Dict:
        return {'subject': self.subject,
                'entries': [{'i': i, 'j': j, 'row': j - i, 'value': v} for i, j, v in self.entries]}

    def __len__(self):
        return len(self.entries)


# =============================================================================
# QUOTIENT RINGS
# =============================================================================
class MonomialQuotient:
    """R/I for a monomial ideal I: standard monomials with Z^n-graded multiplication."""

    multigraded = True

    def __init__(self, ideal: MonomialIdeal, coefficient_field: Field = QQ):
        self.ideal = ideal
        self.n = ideal.n
        self.field = coefficient_field
        self._bases: Dict[int, List[Monomial]] = {}

    def basis(self, d: int) -> List[Monomial]:
        if d not in self._bases:
            self._bases[d] = standard_monomials(self.ideal, d)
        return self._bases[d]

    def multiply(self, k: int, mu: Monomial) -> Dict[Monomial, object]:
        target = mu[:k] + (mu[k] + 1,) + mu[k + 1:]
        return {} if self.ideal.contains(target) else {target: self.field.one}


class GroebnerQuotient:
    """R/I for a homogeneous ideal given by its Groebner basis; products reduced to normal form."""

    multigraded = False

    def __init__(self, basis: GroebnerBasis):
        self.groebner = basis
        self.ring = basis.ring
        self.n = self.ring.nvars
        self.field = self.ring.field
        self.initial = basis.initial_ideal()
        self._bases: Dict[int, List[Monomial]] = {}
        self._products: Dict[Monomial, Dict[Monomial, object]] = {}

    def basis(self, d: int) -> List[Monomial]:
        if d not in self._bases:
            self._bases[d] = standard_monomials(self.initial, d)
        return self._bases[d]

    def multiply(self, k: int, mu: Monomial) -> Dict[Monomial, object]:
        target = mu[:k] + (mu[k] + 1,) + mu[k + 1:]
        if target not in self._products:
            self._products[target] = self.groebner.reduce(self.ring.monomial(target)).coefficients
        return self._products[target]


# =============================================================================
# KOSZUL HOMOLOGY
# =============================================================================
def _strand_blocks(quotient, j: int, bound: Optional[Monomial]):
    """Basis of the degree-j Koszul strand, grouped by multidegree for monomial quotients."""
    n = quotient.n
    blocks: Dict[object, Dict[int, List[Tuple[Tuple[int, ...], Monomial]]]] = defaultdict(lambda: defaultdict(list))
    for i in range(min(n, j) + 1):
        for S in combinations(range(n), i):
            for m in quotient.basis(j - i):
                if quotient.multigraded:
                    key = tuple(e + (1 if k in S else 0) for k, e in enumerate(m))
                    if bound is not None and any(a > b for a, b in zip(key, bound)):
                        continue
                else:
                    key = None
                blocks[key][i].append((S, m))
    return blocks


def _differential_rank(quotient, source: List, target: List) -> int:
    if not source or not target:
        return 0
    index = {element: col for col, element in enumerate(target)}
    zero = quotient.field.zero
    rows = []
    for S, m in source:
        row = [zero] * len(target)
        for t, s in enumerate(S):
            face = S[:t] + S[t + 1:]
            for nu, c in quotient.multiply(s, m).items():
                col = index[(face, nu)]
                row[col] = row[col] + (c if t % 2 == 0 else -c)
        rows.append(row)
    return rank(rows, quotient.field)


def _koszul_entries(quotient, j_max: int, bound: Optional[Monomial]) -> Dict[Tuple[int, int], int]:
    entries: Dict[Tuple[int, int], int] = defaultdict(int)
    for j in range(j_max + 1):
        for key, by_index in _strand_blocks(quotient, j, bound).items():
            ranks = {i: _differential_rank(quotient, by_index.get(i, []), by_index.get(i - 1, []))
                     for i in range(1, quotient.n + 2)}
            for i, elements in by_index.items():
                value = len(elements) - ranks.get(i, 0) - ranks.get(i + 1, 0)
                if value:
                    entries[(i, j)] += value
        logger.debug("koszul strand j=%d done", j)
    return dict(entries)


def _finish(entries, n, subject, j_max, bound_degree) -> BettiTable:
    table = BettiTable(entries, n, QUOTIENT, j_max < bound_degree, j_max)
    if table.truncated:
        logger.warning("Betti table truncated at j=%d (complete bound %d)", j_max, bound_degree)
    return table.as_ideal() if subject == IDEAL else table


def betti_koszul(I: MonomialIdeal, j_max: Optional[int] = None, subject: str = QUOTIENT,
                 coefficient_field: Field = QQ) -> BettiTable:
    """
    Graded Betti numbers of a monomial ideal from its Koszul strands.

    Args:
        I: proper monomial ideal
        j_max: highest internal degree to compute; None uses deg lcm(gens)
        subject: 'quotient' for R/I, 'ideal' for I
        coefficient_field: field the homology is taken over

    Returns:
        BettiTable, flagged truncated when j_max is below deg lcm(gens)
    """
    if I.is_unit():
        raise UnitIdealError("R/I is zero for the unit ideal")
    lcm = I.lcm()
    bound_degree = sum(lcm)
    j_max = bound_degree if j_max is None else j_max
    entries = _koszul_entries(MonomialQuotient(I, coefficient_field), j_max, lcm)
    return _finish(entries, I.n, subject, j_max, bound_degree)


def betti_of_graded(gens: Sequence[Polynomial], j_max: Optional[int] = None,
                    subject: str = QUOTIENT, basis: GroebnerBasis = None) -> BettiTable:
    """
    Graded Betti numbers of R/I for a homogeneous ideal I.

    (R/I)_d is spanned by the standard monomials of in(I) under revlex and
    multiplication by x_k is read off normal forms modulo the Groebner basis.
    """
    gens = [g for g in gens if g]
    require_homogeneous(gens)
    ring = common_ring(gens)
    if all(g.is_monomial() for g in gens):
        return betti_koszul(MonomialIdeal(ring.nvars, [g.support[0] for g in gens]),
                            j_max, subject, ring.field)
    basis = basis or buchberger(gens, TermOrder.REVLEX)
    if basis.is_unit():
        raise UnitIdealError("R/I is zero for the unit ideal")
    quotient = GroebnerQuotient(basis)
    bound_degree = sum(quotient.initial.lcm())
    j_max = bound_degree if j_max is None else j_max
    entries = _koszul_entries(quotient, j_max, None)
    return _finish(entries, ring.nvars, subject, j_max, bound_degree)


# =============================================================================
# SIMPLICIAL ORACLE
# =============================================================================
def _reduced_homology_dims(faces_by_dim: Dict[int, List[Tuple[int, ...]]], coefficient_field: Field) -> Dict[int, int]:
    """dim H~_k of a simplicial complex given as faces by dimension (the empty face has dim -1)."""
    def boundary_rank(k: int) -> int:
        source, target = faces_by_dim.get(k, []), faces_by_dim.get(k - 1, [])
        if not source or not target:
            return 0
        index = {face: col for col, face in enumerate(target)}
        rows = []
        for face in source:
            row = [0] * len(target)
            for t in range(len(face)):
                row[index[face[:t] + face[t + 1:]]] = (-1) ** t
            rows.append(row)
        return rank(rows, coefficient_field)

    top = max(faces_by_dim, default=-2)
    ranks = {k: boundary_rank(k) for k in range(0, top + 2)}
    return {k: len(faces) - ranks.get(k, 0) - ranks.get(k + 1, 0)
            for k, faces in faces_by_dim.items()}


def betti_oracle(I: MonomialIdeal, subject: str = QUOTIENT, coefficient_field: Field = QQ,
                 cap: int = None) -> BettiTable:
    """
    Betti numbers from upper Koszul simplicial complexes.

    beta_{i,b}(I) = dim H~_{i-1}(K^b(I)) with K^b(I) = {F : x^(b - F) in I},
    summed over all multidegrees b <= lcm(gens). Exponential; small inputs only.
    """
    if I.is_unit():
        raise UnitIdealError("R/I is zero for the unit ideal")
    cap = config.ORACLE_MULTIDEGREE_CAP if cap is None else cap
    lcm = I.lcm()
    count = int(np.prod([e + 1 for e in lcm], dtype=object)) if lcm else 1
    if count > cap:
        raise ResourceLimitError(f"oracle would visit {count} multidegrees (cap {cap})")

    entries: Dict[Tuple[int, int], int] = defaultdict(int)
    if not I.is_zero():
        for b in product(*(range(e + 1) for e in lcm)):
            if not I.contains(b):
                continue
            support = [k for k, e in enumerate(b) if e]
            faces: Dict[int, List[Tuple[int, ...]]] = defaultdict(list)
            for size in range(len(support) + 1):
                for F in combinations(support, size):
                    lowered = tuple(e - (1 if k in F else 0) for k, e in enumerate(b))
                    if I.contains(lowered):
                        faces[size - 1].append(F)
            for k, value in _reduced_homology_dims(faces, coefficient_field).items():
                if value:
                    entries[(k + 1, sum(b))] += value
    table = BettiTable(dict(entries), I.n, IDEAL)
    return table if subject == IDEAL else table.as_quotient()


# =============================================================================
# DERIVED INVARIANTS
# =============================================================================
@dataclass(frozen=True)
class DerivedInvariants:
    """pd, depth and regularity of R/I; reg(I) = reg(R/I) + 1."""

    pd: int
    depth: int
    reg_quotient: int
    reg_ideal: int
    dim: int
    is_cohen_macaulay: bool

    def to_dict(self) -> Dict:
        return {'pd': self.pd, 'depth': self.depth, 'reg_quotient': self.reg_quotient,
                'reg_ideal': self.reg_ideal, 'dim': self.dim,
                'cohen_macaulay': self.is_cohen_macaulay}


def derived_invariants(table: BettiTable) -> DerivedInvariants:
    if table.truncated:
        raise DomainError("derived invariants need a complete Betti table")
    quotient = table.as_quotient()
    pd_value = max(i for i, _ in quotient.entries)
    reg = max(j - i for i, j in quotient.entries)
    dim = HilbertSeries(quotient.euler_numerator(), table.n).dimension()
    depth = table.n - pd_value
    return DerivedInvariants(pd_value, depth, reg, reg + 1, dim, depth == dim)


def extremal_betti(table: BettiTable) -> ExtremalSet:
    """Nonzero beta_{i,i+r} with beta_{k,k+l} = 0 whenever k >= i, l >= r and (k, l) != (i, r)."""
    if table.truncated:
        raise DomainError("extremal Betti numbers need a complete Betti table")
    diagram = {(i, j - i): v for (i, j), v in table.entries.items()}
    extremal = []
    for (i, r), value in diagram.items():
        dominated = any(k >= i and l >= r and (k, l) != (i, r) for k, l in diagram)
        if not dominated:
            extremal.append((i, i + r, value))
    return ExtremalSet(tuple(sorted(extremal)), table.subject)


def compare_tables(first: BettiTable, second: BettiTable) -> Dict:
    """Entrywise comparison of two Betti tables of ideals in the same ring."""
    a, b = first.as_ideal(), second.as_ideal()
    keys = sorted(set(a.entries) | set(b.entries))
    differences = {key: (a.get(*key), b.get(*key)) for key in keys if a.get(*key) != b.get(*key)}
    return {
        'equal': not differences,
        'differences': [[i, j, x, y] for (i, j), (x, y) in differences.items()],
        'minimal_generators': [a.totals().get(0, 0), b.totals().get(0, 0)],
        'same_minimal_generators': a.totals().get(0, 0) == b.totals().get(0, 0),
        'same_totals': a.totals() == b.totals(),
        'same_extremal': extremal_betti(a).entries == extremal_betti(b).entries,
    }


def upper_semicontinuous(lower: BettiTable, upper: BettiTable) -> bool:
    """beta_{i,j}(lower) <= beta_{i,j}(upper) at every position."""
    a, b = lower.as_quotient(), upper.as_quotient()
    return all(v <= b.get(i, j) for (i, j), v in a.entries.items())


# =============================================================================
# ANALYZER
# =============================================================================
class BettiAnalyzer:
    """
    Betti tables of a homogeneous ideal and of its revlex initial ideal.
    """

    def __init__(self, gens: Sequence[Polynomial], j_max: Optional[int] = None):
        self.gens = [g for g in gens if g]
        self.j_max = j_max
        self._validate_data()
        self.ring = common_ring(self.gens)
        self.basis = buchberger(self.gens, TermOrder.REVLEX)
        self.initial = self.basis.initial_ideal()

    def _validate_data(self):
        if not self.gens:
            raise ZeroIdealError("Betti analysis needs at least one nonzero generator")
        require_homogeneous(self.gens)

    def ideal_table(self, subject: str = QUOTIENT) -> BettiTable:
        return betti_of_graded(self.gens, self.j_max, subject, self.basis)

    def initial_table(self, subject: str = QUOTIENT) -> BettiTable:
        return betti_koszul(self.initial, self.j_max, subject, self.ring.field)

    def check_euler(self, table: BettiTable) -> bool:
        return table.euler_numerator() == hilbert_series(self.initial).numerator

    def get_betti_report(self) -> Dict:
        ideal_table = self.ideal_table()
        initial_table = self.initial_table()
        report = {
            'ideal': ideal_table.as_ideal().to_dict(),
            'initial_ideal': initial_table.as_ideal().to_dict(),
            'comparison': compare_tables(ideal_table, initial_table),
            'euler_identity': self.check_euler(ideal_table) and self.check_euler(initial_table),
        }
        if not ideal_table.truncated:
            report['invariants'] = {
                'ideal': derived_invariants(ideal_table).to_dict(),
                'initial_ideal': derived_invariants(initial_table).to_dict(),
            }
            report['extremal'] = {
                'ideal': extremal_betti(ideal_table.as_ideal()).to_dict(),
                'initial_ideal': extremal_betti(initial_table.as_ideal()).to_dict(),
            }
        return report


# =============================================================================
# STANDALONE EXECUTION
# =============================================================================
if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format=config.LOG_FORMAT)
    ideal = MonomialIdeal(2, [(2, 0), (1, 1), (0, 3)])
    table = betti_koszul(ideal, subject=IDEAL)
    print("=" * 60)
    print("BETTI TABLE OF (x^2, xy, y^3)")
    print("=" * 60)
    print(table.to_frame())
    print(f"\nInvariants: {derived_invariants(table).to_dict()}")
    print(f"Extremal:   {extremal_betti(table).to_dict()}")
