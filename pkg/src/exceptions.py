"""
Exceptions Module
=================
Error taxonomy shared by every computation module.
Built-in bases are kept so that callers catching ValueError keep working.
"""

from typing import Any, Optional, Sequence


class IdealToolkitError(Exception):
    """Base class for all errors raised by the package."""


class DimensionMismatchError(IdealToolkitError, ValueError):
    """Exponent vectors or matrices of incompatible sizes."""


class RingMismatchError(IdealToolkitError, ValueError):
    """Operands live in different polynomial rings."""


class DomainError(IdealToolkitError, ValueError):
    """Argument outside the domain of an operation."""


class ZeroPolynomialError(IdealToolkitError, ValueError):
    """The zero polynomial has no leading term."""


class SingularChangeError(IdealToolkitError, ValueError):
    """A linear change of coordinates with zero determinant."""


class ResourceLimitError(IdealToolkitError, RuntimeError):
    """A configured work cap was exceeded."""


class UnsupportedFieldError(IdealToolkitError, ValueError):
    """Operation not available over the selected coefficient field."""


class GinAmbiguityError(IdealToolkitError, RuntimeError):
    """Every sampled coordinate change produced a different initial ideal."""

    def __init__(self, message: str, candidates: Sequence[Any] = ()):
        super().__init__(message)
        self.candidates = list(candidates)


class InhomogeneousIdealError(IdealToolkitError, ValueError):
    """A graded operation received a non-homogeneous generator."""


class UnitIdealError(IdealToolkitError, ValueError):
    """The ideal is the whole ring."""


class NotASystemOfParametersError(IdealToolkitError, ValueError):
    """R/(I + forms) does not have finite length."""


class ReductionSpecError(IdealToolkitError, ValueError):
    """Reduction forms have the wrong count or are not linear."""


class SearchFailureError(IdealToolkitError, RuntimeError):
    """No candidate reduction was a system of parameters."""


class InvalidBasisError(IdealToolkitError, RuntimeError):
    """A monomial has more than one involutive divisor in a claimed basis."""


class InternalInconsistencyError(IdealToolkitError, AssertionError):
    """Two computations that must agree by theory disagree."""


class HypothesisViolation(IdealToolkitError):
    """A theorem's hypothesis does not hold for the given input."""

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.witness = witness


class NotFilterRegularError(HypothesisViolation):
    """x_n, ..., x_1 is not a filter regular sequence on R/I."""


class IdealSyntaxError(IdealToolkitError, ValueError):
    """Malformed ideal file."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnknownVariableError(IdealSyntaxError):
    """Expression uses a variable not declared on the ring line."""


class ZeroIdealError(IdealToolkitError, ValueError):
    """Every generator expanded to zero."""
