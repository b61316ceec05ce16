"""
Annihilator Numbers Module
==========================
Annihilator numbers of R/J with respect to the sequence x_n, x_{n-1}, ..., x_1.
Detects extremal annihilator numbers, checks their correspondence with
extremal Betti numbers and compares the tables of I and in(I).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union
import sys
import os

import pandas as pd
from scipy.special import comb

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
import config

from src.betti import QUOTIENT, BettiTable, ExtremalSet, betti_koszul, betti_of_graded, extremal_betti
from src.exceptions import NotFilterRegularError, UnitIdealError, ZeroIdealError
from src.groebner import initial_ideal, require_homogeneous
from src.monideal import (
    MonomialIdeal,
    divide_by_one_minus_t,
    hilbert_series,
    tpoly_mul,
    tpoly_sub,
)
from src.ringcore import Polynomial, TermOrder, common_ring, monomials_of_degree

logger = logging.getLogger(__name__)

IdealInput = Union[MonomialIdeal, Sequence[Polynomial]]


@dataclass(frozen=True)
class AnnihilatorTable:
    """
    alpha_{i,j} = dim_K A_i(x; R/J)_j for i = 0..n.

    A_i = (0 :_{R/J_i} x_{n-i}) with J_i = J + (x_n, ..., x_{n-i+1}) for i < n,
    and A_n = R/(J + m). finite_flags[i] records whether A_i has finite length
    (i < n). Rows of infinite length are only known through `cutoff`.
    """

    alpha: Dict[Tuple[int, int], int]
    n: int
    finite_flags: Tuple[bool, ...]
    cutoff: int
    subject: str = ''

    def get(self, i: int, j: int) -> int:
        return self.alpha.get((i, j), 0)

    def row(self, i: int) -> Dict[int, int]:
        return {j: v for (k, j), v in sorted(self.alpha.items()) if k == i}

    def all_finite(self) -> bool:
        return all(self.finite_flags)

    def first_infinite_row(self) -> Optional[int]:
        return next((i for i, flag in enumerate(self.finite_flags) if not flag), None)

    @property
    def degrees(self) -> List[int]:
        top = max((j for _, j in self.alpha), default=0)
        return list(range(0, top + 1))

    def to_frame(self) -> pd.DataFrame:
        """Index = degree j, columns = sequence index i."""
        data = [[self.get(i, j) for i in range(self.n + 1)] for j in self.degrees]
        frame = pd.DataFrame(data, index=self.degrees, columns=list(range(self.n + 1)), dtype=int)
        frame.index.name = 'j'
        frame.columns.name = 'i'
        return frame

    def to_dict(self) -> Dict:
        return {
            'n': self.n,
            'subject': self.subject,
            'finite': list(self.finite_flags),
            'cutoff': self.cutoff,
            'entries': [[i, j, v] for (i, j), v in sorted(self.alpha.items())],
        }


# =============================================================================
# TABLE COMPUTATION
# =============================================================================
def _tail(n: int, i: int) -> List[int]:
    """0-based indices of x_n, ..., x_{n-i+1}."""
    return list(range(n - 1, n - 1 - i, -1))


def _tail_initial_ideals(J: IdealInput) -> Tuple[int, List[MonomialIdeal], str]:
    if isinstance(J, MonomialIdeal):
        if J.is_unit():
            raise UnitIdealError("annihilator numbers of the zero module")
        n = J.n
        chain = [J + MonomialIdeal.from_variables(n, _tail(n, i)) for i in range(n + 1)]
        return n, chain, J.format()
    gens = [g for g in J if g]
    require_homogeneous(gens)
    ring = common_ring(gens)
    n = ring.nvars
    chain = []
    for i in range(n + 1):
        extended = gens + [ring.gen(k) for k in _tail(n, i)]
        chain.append(initial_ideal(extended, TermOrder.REVLEX))
    if chain[0].is_unit():
        raise UnitIdealError("annihilator numbers of the zero module")
    return n, chain, '(' + ', '.join(g.to_string() for g in gens) + ')'


def annihilator_numbers(J: IdealInput, extra_degrees: int = None) -> AnnihilatorTable:
    """
    Annihilator numbers from Hilbert functions along the chain J_0 in J_1 in ... in J_n.

    alpha_{i,d} = HF_i(d) - HF_i(d+1) + HF_{i+1}(d+1); the generating series of
    row i is (N_{i+1} - (1-t) N_i) / (t (1-t)^n), finite exactly when the
    numerator is divisible by (1-t)^n.

    Args:
        J: monomial ideal, or homogeneous generators (handled through revlex
            initial ideals of J + (x_n, ..., x_{n-i+1}))
        extra_degrees: degrees shown past the Hilbert-polynomial cutoff for infinite rows

    Returns:
        AnnihilatorTable
    """
    extra_degrees = config.ANNIHILATOR_EXTRA_DEGREES if extra_degrees is None else extra_degrees
    n, chain, label = _tail_initial_ideals(J)
    series = [hilbert_series(ideal) for ideal in chain]

    alpha: Dict[Tuple[int, int], int] = {}
    flags: List[bool] = []
    cutoff = max(s.hilbert_polynomial_cutoff() for s in series) + extra_degrees
    for i in range(n):
        numerator = tpoly_sub(series[i + 1].numerator, tpoly_mul((1, -1), series[i].numerator))
        row = divide_by_one_minus_t(numerator, n)
        if row is not None:
            flags.append(True)
            for k, value in enumerate(row):
                if k > 0 and value:
                    alpha[(i, k - 1)] = value
        else:
            flags.append(False)
            for d in range(cutoff + 1):
                value = (series[i].hilbert_function(d) - series[i].hilbert_function(d + 1)
                         + series[i + 1].hilbert_function(d + 1))
                if value:
                    alpha[(i, d)] = value
    for d in range(cutoff + 1):
        value = series[n].hilbert_function(d)
        if value:
            alpha[(n, d)] = value

    logger.debug("annihilator rows finite: %s", flags)
    return AnnihilatorTable(alpha, n, tuple(flags), cutoff, label)


def colon_module_dimension(J: MonomialIdeal, i: int, d: int) -> int:
    """dim_K ((J_i : x_{n-i}) / J_i)_d counted directly on monomials (i < n)."""
    n = J.n
    current = J + MonomialIdeal.from_variables(n, _tail(n, i))
    y = n - 1 - i
    count = 0
    for mu in monomials_of_degree(n, d):
        if current.contains(mu):
            continue
        shifted = mu[:y] + (mu[y] + 1,) + mu[y + 1:]
        if current.contains(shifted):
            count += 1
    return count


# =============================================================================
# EXTREMALITY AND CORRESPONDENCE
# =============================================================================
def _require_finite(table: AnnihilatorTable) -> None:
    row = table.first_infinite_row()
    if row is not None:
        raise NotFilterRegularError(
            f"x_n, ..., x_1 is not filter regular: A_{row} has infinite length", witness=row
        )


def extremal_annihilators(table: AnnihilatorTable) -> ExtremalSet:
    """Nonzero alpha_{i,j} with alpha_{k,l} = 0 whenever k <= i, l >= j and (k, l) != (i, j)."""
    _require_finite(table)
    extremal = []
    for (i, j), value in table.alpha.items():
        if not any(k <= i and l >= j and (k, l) != (i, j) for k, l in table.alpha):
            extremal.append((i, j, value))
    return ExtremalSet(tuple(sorted(extremal)), 'annihilator')


def _binomial(a: int, b: int) -> int:
    if b == -1:
        return int(a == -1)
    if b < -1 or a < 0:
        return 0
    return int(comb(a, b, exact=True))


def betti_upper_bound(table: AnnihilatorTable, i: int, j: int) -> int:
    """sum_{k=0}^{n-i} C(n-k-1, i-1) alpha_{k,j}, an upper bound for beta_{i,i+j}(R/J)."""
    n = table.n
    return sum(_binomial(n - k - 1, i - 1) * table.get(k, j) for k in range(n - i + 1))


def _quotient_table(J: IdealInput) -> BettiTable:
    if isinstance(J, MonomialIdeal):
        return betti_koszul(J, subject=QUOTIENT)
    return betti_of_graded(J, subject=QUOTIENT)


def correspondence_check(J: IdealInput, betti: BettiTable = None,
                         annihilators: AnnihilatorTable = None) -> Dict:
    """
    Compare extremal Betti numbers of R/J with extremal annihilator numbers.

    beta_{i,i+j}(R/J) is extremal exactly when alpha_{n-i,j} is, with equal
    values; every beta_{i,i+j} is bounded by the annihilator sum.
    """
    annihilators = annihilators or annihilator_numbers(J)
    _require_finite(annihilators)
    betti = (betti or _quotient_table(J)).as_quotient()
    n = annihilators.n

    beta_extremal = extremal_betti(betti)
    alpha_extremal = extremal_annihilators(annihilators)
    mirrored = {(n - i, j - i): v for i, j, v in beta_extremal.entries}
    alpha_values = alpha_extremal.values()

    violations = []
    for (i, j), value in betti.entries.items():
        bound = betti_upper_bound(annihilators, i, j - i)
        if value > bound:
            violations.append([i, j, value, bound])

    return {
        'extremal_betti': beta_extremal.to_dict(),
        'extremal_annihilator': alpha_extremal.to_dict(),
        'positions_match': set(mirrored) == set(alpha_values),
        'values_match': mirrored == alpha_values,
        'bound_holds': not violations,
        'bound_violations': violations,
    }


def corollary4_check(gens: Sequence[Polynomial]) -> Dict:
    """
    Compare the annihilator tables of I and of its revlex initial ideal.

    A failure of finiteness is reported, not raised.
    """
    gens = [g for g in gens if g]
    ring = common_ring(gens)
    of_ideal = annihilator_numbers(gens)
    of_initial = annihilator_numbers(initial_ideal(gens, TermOrder.REVLEX))
    report = {
        'ideal': of_ideal.to_dict(),
        'initial_ideal': of_initial.to_dict(),
    }
    if not (of_ideal.all_finite() and of_initial.all_finite()):
        row = of_ideal.first_infinite_row()
        row = of_initial.first_infinite_row() if row is None else row
        report.update(status='hypothesis_violation', equal=None,
                      witness={'row': row, 'variable': ring.variables[ring.nvars - 1 - row]})
        return report
    keys = sorted(set(of_ideal.alpha) | set(of_initial.alpha))
    differences = [[i, j, of_ideal.get(i, j), of_initial.get(i, j)]
                   for i, j in keys if of_ideal.get(i, j) != of_initial.get(i, j)]
    report.update(status='equal' if not differences else 'different',
                  equal=not differences, differences=differences)
    return report


# =============================================================================
# ANALYZER
# =============================================================================
class AnnihilatorAnalyzer:
    """
    Annihilator table of a homogeneous ideal with its extremal corners.
    """

    def __init__(self, gens: Sequence[Polynomial]):
        self.gens = [g for g in gens if g]
        self._validate_data()
        self.table = annihilator_numbers(self.gens)

    def _validate_data(self):
        if not self.gens:
            raise ZeroIdealError("annihilator analysis needs at least one nonzero generator")
        require_homogeneous(self.gens)

    def get_annihilator_report(self) -> Dict:
        report = {'table': self.table.to_dict(), 'filter_regular': self.table.all_finite()}
        if self.table.all_finite():
            report['extremal'] = extremal_annihilators(self.table).to_dict()
            report['correspondence'] = correspondence_check(self.gens, annihilators=self.table)
        else:
            report['first_infinite_row'] = self.table.first_infinite_row()
        return report


# =============================================================================
# STANDALONE EXECUTION
# =============================================================================
if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format=config.LOG_FORMAT)
    ideal = MonomialIdeal(2, [(2, 0), (1, 1), (0, 3)])
    table = annihilator_numbers(ideal)
    print("=" * 60)
    print("ANNIHILATOR NUMBERS OF (x^2, xy, y^3)")
    print("=" * 60)
    print(table.to_frame())
    print(f"\nExtremal: {extremal_annihilators(table).to_dict()}")
    print(f"Correspondence: {correspondence_check(ideal, annihilators=table)}")
