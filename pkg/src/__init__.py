"""
Ideal Invariants Source Package
===============================
Modules for polynomial arithmetic, Groebner bases, monomial ideals,
Betti and annihilator numbers, reduction numbers, Pommaret bases and reporting.
"""

from .exceptions import HypothesisViolation, IdealToolkitError
from .ringcore import GF, QQ, Polynomial, PolynomialRing, TermOrder
from .groebner import GroebnerBasis, buchberger, gin_sample, initial_ideal
from .monideal import IdealClassifier, MonomialIdeal, hilbert_series
from .betti import BettiAnalyzer, BettiTable, betti_koszul, betti_oracle
from .annihilator import AnnihilatorAnalyzer, AnnihilatorTable, annihilator_numbers
from .reduction import ReductionAnalyzer, reduction_number, search_min_reduction
from .pommaret import PommaretAnalyzer, pommaret_complete
from .ideal_parser import IdealFileReader, parse_ideal
from .report_generator import ReportGenerator
from .visualizations import AlgebraVisualizer

__all__ = [
    'IdealToolkitError',
    'HypothesisViolation',
    'QQ',
    'GF',
    'Polynomial',
    'PolynomialRing',
    'TermOrder',
    'GroebnerBasis',
    'buchberger',
    'gin_sample',
    'initial_ideal',
    'MonomialIdeal',
    'IdealClassifier',
    'hilbert_series',
    'BettiAnalyzer',
    'BettiTable',
    'betti_koszul',
    'betti_oracle',
    'AnnihilatorAnalyzer',
    'AnnihilatorTable',
    'annihilator_numbers',
    'ReductionAnalyzer',
    'reduction_number',
    'search_min_reduction',
    'PommaretAnalyzer',
    'pommaret_complete',
    'IdealFileReader',
    'parse_ideal',
    'ReportGenerator',
    'AlgebraVisualizer'
]

__version__ = '1.0.0'
