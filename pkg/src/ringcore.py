"""
Ring Core Module
================
Exact coefficient fields, exponent vectors, term orders and polynomials
over K[x_1, ..., x_n].

Monomials are dense exponent tuples. Polynomials are immutable values that
map exponent tuples to nonzero field elements; the term order only decides
how terms are listed, so one polynomial can be read under several orders.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field, replace
from enum import Enum, IntEnum
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple
import sys
import os

import sympy

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
import config

from src.exceptions import (
    DimensionMismatchError,
    DomainError,
    RingMismatchError,
    ZeroPolynomialError,
)

Monomial = Tuple[int, ...]


# =============================================================================
# COEFFICIENT FIELDS
# =============================================================================
class PrimeFieldElement:
    """Residue class modulo a prime p, stored in [0, p)."""

    __slots__ = ('value', 'p')

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _lift(self, other: Any) -> Optional[int]:
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise RingMismatchError(f"GF({self.p}) and GF({other.p}) elements do not mix")
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise DomainError(f"{other} has no image in GF({self.p})")
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return None

    def inverse(self) -> 'PrimeFieldElement':
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return PrimeFieldElement(pow(self.value, -1, self.p), self.p)

    def __add__(self, other):
        v = self._lift(other)
        return NotImplemented if v is None else PrimeFieldElement(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._lift(other)
        return NotImplemented if v is None else PrimeFieldElement(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._lift(other)
        return NotImplemented if v is None else PrimeFieldElement(v - self.value, self.p)

    def __mul__(self, other):
        v = self._lift(other)
        return NotImplemented if v is None else PrimeFieldElement(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return self * PrimeFieldElement(v, self.p).inverse()

    def __rtruediv__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElement(v, self.p) * self.inverse()

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return PrimeFieldElement(pow(self.value, exponent, self.p), self.p)

    def __eq__(self, other):
        try:
            v = self._lift(other)
        except (RingMismatchError, DomainError):
            return False
        return v is not None and v == self.value

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"PrimeFieldElement({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class Field:
    """
    Coefficient field descriptor.

    Characteristic 0 is the rational field (elements are Fractions);
    a prime characteristic p gives GF(p) (elements are PrimeFieldElements).
    """

    def __init__(self, characteristic: int = 0):
        if characteristic < 0 or (characteristic != 0 and not sympy.isprime(characteristic)):
            raise DomainError(f"characteristic must be 0 or a prime, got {characteristic}")
        self.characteristic = characteristic

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __call__(self, value: Any):
        """Coerce an int, Fraction or field element into this field."""
        if self.characteristic == 0:
            if isinstance(value, PrimeFieldElement):
                raise RingMismatchError("cannot coerce a GF(p) element into QQ")
            return Fraction(value)
        if isinstance(value, PrimeFieldElement):
            if value.p != self.characteristic:
                raise RingMismatchError(f"GF({value.p}) element in GF({self.characteristic})")
            return value
        if isinstance(value, Fraction):
            if value.denominator % self.characteristic == 0:
                raise DomainError(f"{value} has no image in GF({self.characteristic})")
            numerator = value.numerator * pow(value.denominator, -1, self.characteristic)
            return PrimeFieldElement(numerator, self.characteristic)
        return PrimeFieldElement(int(value), self.characteristic)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def format(self, value) -> str:
        return str(value)

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(('Field', self.characteristic))

    def __repr__(self):
        return 'QQ' if self.characteristic == 0 else f'GF({self.characteristic})'


QQ = Field(0)


def GF(p: int) -> Field:
    """Prime field with p elements."""
    return Field(p)


# =============================================================================
# EXPONENT VECTORS
# =============================================================================
def _check_lengths(a: Monomial, b: Monomial) -> None:
    if len(a) != len(b):
        raise DimensionMismatchError(f"exponent vectors of length {len(a)} and {len(b)}")


def degree(mu: Monomial) -> int:
    return sum(mu)


def divides(a: Monomial, b: Monomial) -> bool:
    """True when x^a divides x^b."""
    _check_lengths(a, b)
    return all(x <= y for x, y in zip(a, b))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    _check_lengths(a, b)
    return tuple(x + y for x, y in zip(a, b))


def monomial_quotient(b: Monomial, a: Monomial) -> Monomial:
    """x^b / x^a, assuming x^a divides x^b."""
    _check_lengths(a, b)
    return tuple(y - x for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_lengths(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_lengths(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def unit_vector(n: int, k: int, exponent: int = 1) -> Monomial:
    return tuple(exponent if i == k else 0 for i in range(n))


def support(mu: Monomial) -> Tuple[int, ...]:
    return tuple(i for i, e in enumerate(mu) if e)


def monomials_of_degree(n: int, d: int) -> List[Monomial]:
    """All exponent vectors of total degree d in n variables, revlex-decreasing."""
    if d < 0:
        return []
    result = []
    for combo in combinations_with_replacement(range(n), d):
        mu = [0] * n
        for i in combo:
            mu[i] += 1
        result.append(tuple(mu))
    result.sort(key=TermOrder.REVLEX.key, reverse=True)
    return result


def format_monomial(mu: Monomial, names: Sequence[str]) -> str:
    factors = []
    for name, e in zip(names, mu):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return '*'.join(factors) if factors else '1'


# =============================================================================
# TERM ORDERS
# =============================================================================
class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class TermOrder(Enum):
    """Monomial orders with x_1 > x_2 > ... > x_n."""

    REVLEX = 'revlex'
    LEX = 'lex'
    DEGLEX = 'deglex'

    def key(self, mu: Monomial):
        """Sort key: larger key means larger monomial."""
        if self is TermOrder.REVLEX:
            return (sum(mu), tuple(-e for e in reversed(mu)))
        if self is TermOrder.DEGLEX:
            return (sum(mu), mu)
        return mu

    @property
    def is_degree_compatible(self) -> bool:
        return self is not TermOrder.LEX

    @classmethod
    def parse(cls, name: str) -> 'TermOrder':
        aliases = {'degrevlex': 'revlex', 'grevlex': 'revlex', 'drl': 'revlex',
                   'grlex': 'deglex', 'deg-lex': 'deglex'}
        value = aliases.get(name.strip().lower(), name.strip().lower())
        try:
            return cls(value)
        except ValueError:
            raise DomainError(f"unknown term order '{name}'") from None


def compare(a: Monomial, b: Monomial, order: TermOrder = TermOrder.REVLEX) -> Ordering:
    """Compare two exponent vectors under a term order."""
    _check_lengths(a, b)
    ka, kb = order.key(a), order.key(b)
    if ka == kb:
        return Ordering.EQUAL
    return Ordering.GREATER if ka > kb else Ordering.LESS


# =============================================================================
# POLYNOMIAL RINGS
# =============================================================================
@dataclass(frozen=True)
class PolynomialRing:
    """
    K[x_1, ..., x_n] with named variables.

    The active term order does not take part in equality: two rings with the
    same variables and field hold the same polynomials.
    """

    variables: Tuple[str, ...]
    field: Field = QQ
    order: TermOrder = dataclass_field(default=TermOrder.REVLEX, compare=False)

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise DomainError(f"duplicate variable names in {self.variables}")

    @classmethod
    def standard(cls, n: int, characteristic: int = None,
                 order: TermOrder = None) -> 'PolynomialRing':
        """Ring with variables x1..xn (prefix from config)."""
        characteristic = config.DEFAULT_CHARACTERISTIC if characteristic is None else characteristic
        order = order or TermOrder.parse(config.DEFAULT_TERM_ORDER)
        names = tuple(f"{config.DEFAULT_VARIABLE_PREFIX}{i + 1}" for i in range(n))
        return cls(names, Field(characteristic), order)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def with_order(self, order: TermOrder) -> 'PolynomialRing':
        return replace(self, order=order)

    def zero(self) -> 'Polynomial':
        return Polynomial(self, {})

    def one(self) -> 'Polynomial':
        return self.constant(1)

    def constant(self, value) -> 'Polynomial':
        return Polynomial(self, {(0,) * self.nvars: value})

    def gen(self, k: int) -> 'Polynomial':
        """The variable x_{k+1} (0-based index k)."""
        if not 0 <= k < self.nvars:
            raise DimensionMismatchError(f"variable index {k} outside 0..{self.nvars - 1}")
        return Polynomial(self, {unit_vector(self.nvars, k): 1})

    def gens(self) -> List['Polynomial']:
        return [self.gen(k) for k in range(self.nvars)]

    def monomial(self, mu: Monomial, coefficient=1) -> 'Polynomial':
        if len(mu) != self.nvars:
            raise DimensionMismatchError(f"exponent vector {mu} in a ring with {self.nvars} variables")
        return Polynomial(self, {tuple(mu): coefficient})

    def __str__(self):
        return f"{self.field!r}[{', '.join(self.variables)}]"


# =============================================================================
# POLYNOMIALS
# =============================================================================
class Polynomial:
    """Immutable polynomial with exact coefficients; the zero polynomial has no terms."""

    __slots__ = ('ring', '_coeffs', '_hash')

    def __init__(self, ring: PolynomialRing, coeffs: Mapping[Monomial, Any] = None):
        clean: Dict[Monomial, Any] = {}
        for mu, c in (coeffs or {}).items():
            mu = tuple(mu)
            if len(mu) != ring.nvars:
                raise DimensionMismatchError(f"exponent vector {mu} in a ring with {ring.nvars} variables")
            if any(e < 0 for e in mu):
                raise DomainError(f"negative exponent in {mu}")
            c = ring.field(c)
            if c:
                clean[mu] = clean.get(mu, ring.field.zero) + c
                if not clean[mu]:
                    del clean[mu]
        self.ring = ring
        self._coeffs = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, ring: PolynomialRing, coeffs: Dict[Monomial, Any]) -> 'Polynomial':
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._coeffs = coeffs
        obj._hash = None
        return obj

    # -------------------------------------------------------------------------
    # Inspection
    # -------------------------------------------------------------------------
    @property
    def coefficients(self) -> Dict[Monomial, Any]:
        return dict(self._coeffs)

    @property
    def support(self) -> List[Monomial]:
        return list(self._coeffs)

    def coefficient(self, mu: Monomial):
        return self._coeffs.get(tuple(mu), self.ring.field.zero)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def terms(self, order: TermOrder = None) -> List[Tuple[Monomial, Any]]:
        """Terms sorted strictly decreasing in the given (or the ring's) order."""
        order = order or self.ring.order
        return sorted(self._coeffs.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order: TermOrder = None) -> Tuple[Monomial, Any]:
        if not self._coeffs:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        order = order or self.ring.order
        mu = max(self._coeffs, key=order.key)
        return mu, self._coeffs[mu]

    def leading_monomial(self, order: TermOrder = None) -> Monomial:
        return self.leading_term(order)[0]

    def leading_coefficient(self, order: TermOrder = None):
        return self.leading_term(order)[1]

    def total_degree(self) -> int:
        if not self._coeffs:
            return -1
        return max(sum(mu) for mu in self._coeffs)

    def is_homogeneous(self) -> bool:
        return len({sum(mu) for mu in self._coeffs}) <= 1

    def is_monomial(self) -> bool:
        return len(self._coeffs) == 1

    def is_linear_form(self) -> bool:
        return bool(self._coeffs) and all(sum(mu) == 1 for mu in self._coeffs)

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------
    def _coerce(self, other: Any) -> 'Polynomial':
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} and {other.ring}")
            return other
        if isinstance(other, (int, Fraction, PrimeFieldElement)):
            return self.ring.constant(other)
        raise TypeError(f"cannot combine a polynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        result = dict(self._coeffs)
        for mu, c in other._coeffs.items():
            s = result.get(mu)
            s = c if s is None else s + c
            if s:
                result[mu] = s
            else:
                result.pop(mu, None)
        return Polynomial._from_clean(self.ring, result)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_clean(self.ring, {mu: -c for mu, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, PrimeFieldElement)):
            return self.scalar_mul(other)
        other = self._coerce(other)
        result: Dict[Monomial, Any] = {}
        for mu, c in self._coeffs.items():
            for nu, d in other._coeffs.items():
                key = tuple(a + b for a, b in zip(mu, nu))
                s = result.get(key)
                result[key] = c * d if s is None else s + c * d
        return Polynomial._from_clean(self.ring, {k: v for k, v in result.items() if v})

    __rmul__ = __mul__

    def scalar_mul(self, scalar) -> 'Polynomial':
        scalar = self.ring.field(scalar)
        if not scalar:
            return self.ring.zero()
        return Polynomial._from_clean(self.ring, {mu: c * scalar for mu, c in self._coeffs.items()})

    def mul_term(self, mu: Monomial, coefficient=1) -> 'Polynomial':
        """Multiply by coefficient * x^mu."""
        coefficient = self.ring.field(coefficient)
        if not coefficient:
            return self.ring.zero()
        return Polynomial._from_clean(
            self.ring,
            {tuple(a + b for a, b in zip(nu, mu)): c * coefficient for nu, c in self._coeffs.items()},
        )

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise TypeError("polynomial exponents must be integers")
        if exponent < 0:
            raise DomainError(f"negative exponent {exponent}")
        result = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def monic(self, order: TermOrder = None) -> 'Polynomial':
        if not self._coeffs:
            return self
        return self.scalar_mul(self.ring.field.one / self.leading_coefficient(order))

    def substitute(self, images: Sequence['Polynomial']) -> 'Polynomial':
        """Replace x_i by images[i] and expand."""
        if len(images) != self.ring.nvars:
            raise DimensionMismatchError(f"{len(images)} images for {self.ring.nvars} variables")
        target = images[0].ring if images else self.ring
        powers: List[Dict[int, Polynomial]] = [{0: target.one()} for _ in images]
        result = target.zero()
        for mu, c in self._coeffs.items():
            term = target.constant(c)
            for i, e in enumerate(mu):
                if e:
                    cache = powers[i]
                    if e not in cache:
                        cache[e] = images[i] ** e
                    term = term * cache[e]
            result = result + term
        return result

    # -------------------------------------------------------------------------
    # Comparison / display
    # -------------------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction, PrimeFieldElement)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._coeffs.items())))
        return self._hash

    def to_string(self, order: TermOrder = None) -> str:
        if not self._coeffs:
            return '0'
        pieces = []
        for mu, c in self.terms(order):
            mono = format_monomial(mu, self.ring.variables)
            negative = False
            if self.ring.field.is_rational and c < 0:
                negative, c = True, -c
            if mono == '1':
                body = str(c)
            elif c == 1:
                body = mono
            else:
                body = f"{c}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return ' '.join(pieces)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.to_string()!r}, ring={self.ring})"


def leading_term(f: Polynomial, order: TermOrder = None) -> Tuple[Monomial, Any]:
    """The order-maximal term of a nonzero polynomial."""
    return f.leading_term(order)


def common_ring(polys: Iterable[Polynomial]) -> PolynomialRing:
    """The shared ring of a nonempty family of polynomials."""
    rings = {p.ring for p in polys}
    if not rings:
        raise DomainError("empty polynomial family has no ring")
    if len(rings) > 1:
        raise RingMismatchError(f"polynomials from {len(rings)} different rings")
    return next(iter(rings))


def iter_monomials_up_to(n: int, max_degree: int) -> Iterator[Monomial]:
    for d in range(max_degree + 1):
        yield from monomials_of_degree(n, d)
