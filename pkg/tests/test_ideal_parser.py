from fractions import Fraction

import pytest

from src.exceptions import (
    IdealSyntaxError,
    InhomogeneousIdealError,
    UnknownVariableError,
    ZeroIdealError,
)
from src.ideal_parser import IdealFileReader, parse_ideal, parse_ideal_text, tokenize


class TestReadFiles:
    def test_cubic_file_matches_fixture(self, data_path, cubic_gens):
        parsed = parse_ideal(data_path('cubic.ideal'))
        assert list(parsed.gens) == cubic_gens
        assert parsed.source.endswith('cubic.ideal')

    def test_characteristic_line(self, data_path):
        parsed = parse_ideal(data_path('char2.ideal'))
        assert parsed.ring.field.characteristic == 2
        x, y = parsed.ring.gens()
        assert parsed.gens == (x ** 2 + y ** 2,)

    def test_characteristic_override(self, data_path):
        parsed = parse_ideal(data_path('cubic.ideal'), characteristic=3)
        assert parsed.ring.field.characteristic == 3

    @pytest.mark.parametrize('name', ['borel_type.ideal', 'quasi_stable.ideal',
                                      'not_quasi_stable.ideal', 'reduction.ideal'])
    def test_monomial_files(self, data_path, name):
        parsed = parse_ideal(data_path(name))
        assert all(g.is_monomial() for g in parsed.gens)

    def test_dumps_reads_back(self, data_path):
        parsed = parse_ideal(data_path('cubic.ideal'))
        again = parse_ideal_text(parsed.dumps())
        assert again.gens == parsed.gens


class TestExpressions:
    def test_implicit_multiplication_and_powers(self):
        parsed = parse_ideal_text("ring: x y\nI: 2x^2 - 3(x y), y**2")
        x, y = parsed.ring.gens()
        assert parsed.gens == (2 * x ** 2 - 3 * x * y, y ** 2)

    def test_division_by_constant(self):
        parsed = parse_ideal_text("ring: x y\nI: x/2 + y")
        assert parsed.gens[0].coefficient((1, 0)) == Fraction(1, 2)

    def test_division_by_variable(self):
        with pytest.raises(IdealSyntaxError):
            parse_ideal_text("ring: x y\nI: x/y")

    def test_comments_and_continuation(self):
        text = "# header\nring: a b  # two variables\nI: a^2,\n   b^2 # last\n"
        assert len(parse_ideal_text(text).gens) == 2

    def test_zero_generators_are_dropped(self):
        parsed = parse_ideal_text("ring: x y\nI: x - x, y")
        assert len(parsed.gens) == 1

    def test_tokens_carry_columns(self):
        tokens = tokenize("x1 + 23", line=4, offset=2)
        assert [(t.kind, t.text, t.column) for t in tokens] == [
            ('name', 'x1', 3), ('op', '+', 6), ('number', '23', 8)]


class TestErrors:
    def test_unknown_variable_position(self):
        with pytest.raises(UnknownVariableError) as excinfo:
            parse_ideal_text("ring: x1 x2\nI: x1 + y")
        assert (excinfo.value.line, excinfo.value.column) == (2, 9)

    def test_glued_names_are_one_identifier(self):
        with pytest.raises(UnknownVariableError):
            parse_ideal_text("ring: x1 x2 x3\nI: x2x3")

    def test_inhomogeneous_generator(self):
        with pytest.raises(InhomogeneousIdealError):
            parse_ideal_text("ring: x y\nI: x^2 + y")

    def test_zero_ideal(self):
        with pytest.raises(ZeroIdealError):
            parse_ideal_text("ring: x y\nI: x - x")

    @pytest.mark.parametrize('text', [
        "I: x^2",
        "ring: x y",
        "ring: x x\nI: x",
        "ring: x y\nchar: 6\nI: x",
        "ring: x y\nchar: two\nI: x",
        "ring: x y\nI: x $ y",
        "ring: x y\nI: (x + y",
        "ring: x y\nI: x^",
        "ring: x y\nI: x,",
        "ring: x\nring: y\nI: x",
        "ring: x y\nstray line\nI: x",
    ])
    def test_malformed_files(self, text):
        with pytest.raises(IdealSyntaxError):
            parse_ideal_text(text)


class TestForms:
    def test_parse_forms(self, ring3):
        x1, x2, x3 = ring3.gens()
        assert IdealFileReader().parse_forms("x2, x3 - x1", ring3) == [x2, x3 - x1]

    def test_empty_forms(self, ring3):
        assert IdealFileReader().parse_forms("  ", ring3) == []
