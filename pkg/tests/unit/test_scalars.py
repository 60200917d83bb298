from fractions import Fraction

import pytest

from rigid_jets.exceptions import FieldMismatch, ParameterRequired, PoleAtZero
from rigid_jets.jetcore.scalars import QQ_FIELD, RationalFunctionField, field_of


def test_rational_field_is_exact(qq):
    assert qq.convert("1/3") + qq.convert("1/6") == Fraction(1, 2)
    assert qq.serialize(Fraction(-2, 4)) == "-1/2"


def test_function_field_equality_is_canonical(qq_y):
    y = qq_y.gen
    assert (y ** 2 - 1) / (y - 1) == y + 1
    assert qq_y.convert("1/2") * 2 == qq_y.one


def test_function_field_serializes_with_monic_denominator(qq_y):
    y = qq_y.gen
    value = (2 * y) / (2 * y + 4)
    payload = qq_y.serialize(value)
    assert payload == {
        "param": "y",
        "num": [{"exp": 1, "coef": "1"}],
        "den": [{"exp": 0, "coef": "2"}, {"exp": 1, "coef": "1"}],
    }
    assert qq_y.deserialize(payload) == value


def test_limit_at_zero(qq_y):
    y = qq_y.gen
    assert qq_y.limit_at_zero((y + 3) / (y + 2)) == Fraction(3, 2)
    with pytest.raises(PoleAtZero):
        qq_y.limit_at_zero(1 / y)


def test_fields_do_not_mix(qq, qq_y):
    with pytest.raises(FieldMismatch):
        qq.convert(qq_y.gen)
    with pytest.raises(FieldMismatch):
        RationalFunctionField("s").convert(qq_y.gen)


def test_evaluate_needs_a_parameter(qq_y):
    with pytest.raises(ParameterRequired):
        qq_y.evaluate(qq_y.gen)
    assert qq_y.evaluate(1 / qq_y.gen, 0.5) == pytest.approx(2.0)


def test_field_of(qq_y):
    assert field_of(Fraction(1)) == QQ_FIELD
    assert field_of(qq_y.gen) == qq_y
