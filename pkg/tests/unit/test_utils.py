from fractions import Fraction

import pytest

from rigid_jets.utils import (
    format_matrix,
    format_rational,
    graded_lex_key,
    monomials_of_degree,
    monomials_up_to,
    parse_rational,
)


def test_rational_codec_is_canonical():
    assert format_rational(Fraction(6, -4)) == "-3/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert parse_rational("-3/2") == Fraction(-3, 2)
    assert parse_rational(" 10/4 ") == Fraction(5, 2)
    assert parse_rational(7) == Fraction(7)


@pytest.mark.parametrize("bad", ["0.5", "1e3", 0.5, True, None, "x"])
def test_parse_rational_rejects_inexact_values(bad):
    with pytest.raises((ValueError, TypeError)):
        parse_rational(bad)


def test_monomials_are_graded_lex():
    assert monomials_of_degree(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert monomials_up_to(2, 1) == [(0, 0), (1, 0), (0, 1)]
    assert monomials_up_to(3, 3, start=2)[0] == (2, 0, 0)
    assert len(monomials_of_degree(3, 3)) == 10
    assert sorted([(0, 1), (1, 0), (0, 0)], key=graded_lex_key) == [(0, 0), (1, 0), (0, 1)]


def test_format_matrix():
    assert format_matrix([[1, Fraction(1, 2)], [0, -1]]) == "[[1, 1/2], [0, -1]]"
