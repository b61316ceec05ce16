"""
Ideal File Module
=================
Reads and writes ideal description files:

    # comment
    ring: x1 x2 x3
    char: 0
    I: (2*x1+x2)^3, (x2+2x3)^3,
       x1^2*x3 - x2^3

Generator expressions use + - * / ^ and parentheses over integer
coefficients; `*` may be omitted between adjacent factors and `/` only
divides by a constant.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Tuple
import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
import config

from src.exceptions import (
    DomainError,
    IdealSyntaxError,
    InhomogeneousIdealError,
    UnknownVariableError,
    ZeroIdealError,
)
from src.ringcore import Field, Polynomial, PolynomialRing, TermOrder

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>\*\*|[-+*/^(),]))")
_KEY = re.compile(r"^\s*(?P<key>[A-Za-z]+)\s*:(?P<rest>.*)$")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


@dataclass(frozen=True)
class IdealFile:
    """Parsed ideal file: the ring and the expanded nonzero generators."""

    ring: PolynomialRing
    gens: Tuple[Polynomial, ...]
    source: Optional[str] = None

    def dumps(self) -> str:
        lines = [f"ring: {' '.join(self.ring.variables)}",
                 f"char: {self.ring.field.characteristic}"]
        body = ',\n   '.join(g.to_string() for g in self.gens)
        lines.append(f"I: {body}")
        return '\n'.join(lines) + '\n'


def tokenize(text: str, line: int = 1, offset: int = 0) -> List[Token]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == '':
            break
        match = _TOKEN.match(text, position)
        if not match or match.end() == position:
            column = offset + position + len(text[position:]) - len(text[position:].lstrip()) + 1
            raise IdealSyntaxError(f"unexpected character {text[position:].strip()[0]!r}", line, column)
        kind = match.lastgroup
        start = match.start(kind)
        value = '^' if match.group(kind) == '**' else match.group(kind)
        tokens.append(Token(kind, value, line, offset + start + 1))
        position = match.end()
    return tokens


class _ExpressionParser:
    """Recursive-descent parser producing polynomials of a fixed ring."""

    def __init__(self, tokens: Sequence[Token], ring: PolynomialRing):
        self.tokens = list(tokens)
        self.ring = ring
        self.index = {name: k for k, name in enumerate(ring.variables)}
        self.pos = 0

    def _peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _error(self, message: str, token: Optional[Token] = None) -> IdealSyntaxError:
        token = token or self._peek() or (self.tokens[-1] if self.tokens else Token('op', '', 0, 0))
        return IdealSyntaxError(message, token.line, token.column)

    def _expect(self, text: str) -> Token:
        token = self._peek()
        if token is None or token.text != text:
            raise self._error(f"expected '{text}'")
        self.pos += 1
        return token

    def parse_list(self) -> List[Tuple[Polynomial, Token]]:
        items = []
        while True:
            first = self._peek()
            if first is None:
                raise self._error("expected an expression")
            items.append((self.expression(), first))
            token = self._peek()
            if token is None:
                return items
            if token.text != ',':
                raise self._error(f"unexpected '{token.text}'")
            self.pos += 1

    def expression(self) -> Polynomial:
        result = self.term()
        while (token := self._peek()) is not None and token.text in '+-' and token.kind == 'op':
            self.pos += 1
            right = self.term()
            result = result + right if token.text == '+' else result - right
        return result

    def term(self) -> Polynomial:
        result = self.unary()
        while True:
            token = self._peek()
            if token is None:
                return result
            if token.text == '*':
                self.pos += 1
                result = result * self.unary()
            elif token.text == '/':
                self.pos += 1
                divisor = self.unary()
                if not divisor.is_zero() and divisor.total_degree() == 0:
                    try:
                        result = result.scalar_mul(self.ring.field.one / divisor.coefficient((0,) * self.ring.nvars))
                    except (ZeroDivisionError, DomainError) as exc:
                        raise self._error(str(exc), token) from None
                else:
                    raise self._error("division is only allowed by a nonzero constant", token)
            elif token.kind in ('number', 'name') or token.text == '(':
                result = result * self.unary()
            else:
                return result

    def unary(self) -> Polynomial:
        token = self._peek()
        if token is not None and token.text in '+-' and token.kind == 'op':
            self.pos += 1
            operand = self.unary()
            return -operand if token.text == '-' else operand
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        token = self._peek()
        if token is not None and token.text == '^':
            self.pos += 1
            exponent = self._peek()
            if exponent is None or exponent.kind != 'number':
                raise self._error("exponent must be a non-negative integer")
            self.pos += 1
            return base ** int(exponent.text)
        return base

    def atom(self) -> Polynomial:
        token = self._peek()
        if token is None:
            raise self._error("unexpected end of expression")
        self.pos += 1
        if token.kind == 'number':
            return self.ring.constant(int(token.text))
        if token.kind == 'name':
            if token.text not in self.index:
                raise UnknownVariableError(f"unknown variable '{token.text}'", token.line, token.column)
            return self.ring.gen(self.index[token.text])
        if token.text == '(':
            inner = self.expression()
            self._expect(')')
            return inner
        raise self._error(f"unexpected '{token.text}'", token)


class IdealFileReader:
    """
    Reader for ideal files and generator lists.
    """

    def __init__(self, characteristic: int = None, order: TermOrder = None):
        """
        Args:
            characteristic: overrides the file's `char:` line when given
            order: term order attached to the ring (revlex by default)
        """
        self.characteristic = characteristic
        self.order = order or TermOrder.parse(config.DEFAULT_TERM_ORDER)

    def read(self, path) -> IdealFile:
        path = Path(path)
        logger.info("reading ideal file %s", path)
        return self.parse(path.read_text(encoding='utf-8'), source=str(path))

    def parse(self, text: str, source: str = None) -> IdealFile:
        sections = {}
        current = None
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split('#', 1)[0]
            if not line.strip():
                continue
            match = _KEY.match(line)
            if match and match.group('key').lower() in ('ring', 'char', 'i'):
                current = match.group('key').lower()
                if current in sections:
                    raise IdealSyntaxError(f"duplicate '{current}:' line", number, 1)
                sections[current] = [(number, match.start('rest'), match.group('rest'))]
            elif current == 'i':
                sections['i'].append((number, 0, line))
            else:
                raise IdealSyntaxError("expected 'ring:', 'char:' or 'I:'", number, 1)

        if 'ring' not in sections:
            raise IdealSyntaxError("missing 'ring:' line", 1, 1)
        if 'i' not in sections:
            raise IdealSyntaxError("missing 'I:' line", 1, 1)
        ring = self._ring(sections)
        tokens = []
        for number, offset, body in sections['i']:
            tokens.extend(tokenize(body, number, offset))
        parsed = _ExpressionParser(tokens, ring).parse_list()
        gens = self._check_generators(parsed)
        return IdealFile(ring, tuple(gens), source)

    def _ring(self, sections) -> PolynomialRing:
        number, offset, body = sections['ring'][0]
        names = [name for name in re.split(r"[\s,]+", body.strip()) if name]
        if not names:
            raise IdealSyntaxError("no variables declared", number, offset + 1)
        for name in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                raise IdealSyntaxError(f"invalid variable name '{name}'", number, offset + body.find(name) + 1)
        if len(set(names)) != len(names):
            raise IdealSyntaxError("duplicate variable names", number, offset + 1)
        characteristic = 0
        if 'char' in sections:
            number, offset, value = sections['char'][0]
            if not value.strip().isdigit():
                raise IdealSyntaxError(f"characteristic must be an integer, got '{value.strip()}'", number, offset + 1)
            characteristic = int(value.strip())
        if self.characteristic is not None:
            characteristic = self.characteristic
        try:
            coefficient_field = Field(characteristic)
        except DomainError as exc:
            raise IdealSyntaxError(str(exc), sections.get('char', [(1, 0, '')])[0][0], 1) from None
        return PolynomialRing(tuple(names), coefficient_field, self.order)

    @staticmethod
    def _check_generators(parsed) -> List[Polynomial]:
        gens = []
        for polynomial, first in parsed:
            if polynomial.is_zero():
                continue
            if not polynomial.is_homogeneous():
                raise InhomogeneousIdealError(
                    f"line {first.line}, column {first.column}: generator {polynomial} is not homogeneous"
                )
            gens.append(polynomial)
        if not gens:
            raise ZeroIdealError("the ideal is zero; give at least one nonzero generator")
        return gens

    def parse_forms(self, text: str, ring: PolynomialRing) -> List[Polynomial]:
        """Comma-separated polynomials in an existing ring (zeros kept out)."""
        if not text.strip():
            return []
        parsed = _ExpressionParser(tokenize(text), ring).parse_list()
        return [p for p, _ in parsed if not p.is_zero()]


def parse_ideal(path, characteristic: int = None, order: TermOrder = None) -> IdealFile:
    """Read an ideal file from disk."""
    return IdealFileReader(characteristic, order).read(path)


def parse_ideal_text(text: str, characteristic: int = None, order: TermOrder = None) -> IdealFile:
    return IdealFileReader(characteristic, order).parse(text)
