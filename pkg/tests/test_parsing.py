"""Expression parsing and canonical printing."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polypell.errors import ParseError
from polypell.fields import QQ, QQ_T, poly_over_qq_to_qqt
from polypell.parsing import parse_poly, print_poly
from polypell.poly import UniPoly

X = UniPoly.x(QQ)
ONE = UniPoly.one(QQ)


class TestParse:
    def test_simple(self):
        assert parse_poly("X^2+1") == X * X + ONE
        assert parse_poly("2*X") == X * 2
        assert parse_poly("-X+3") == -X + ONE * 3

    def test_rationals(self):
        p = parse_poly("1/2*X^3-3/4")
        assert p.coefficient(3) == Fraction(1, 2)
        assert p.coefficient(0) == Fraction(-3, 4)

    def test_parentheses_and_products(self):
        assert parse_poly("(X+1)*(X-1)") == X * X - ONE
        assert parse_poly("(X+1)^3") == (X + ONE) ** 3

    def test_context_selection(self):
        assert parse_poly("X^2+1").ctx == QQ
        assert parse_poly("X^2+t").ctx == QQ_T

    def test_t_polynomials(self):
        p = parse_poly("(t^2+1)*X+t")
        assert p.ctx == QQ_T
        assert p.degree == 1

    def test_whitespace(self):
        assert parse_poly(" X ^ 2 + 1 ") == X * X + ONE

    def test_no_implicit_multiplication(self):
        with pytest.raises(ParseError):
            parse_poly("2X")

    def test_error_position(self):
        with pytest.raises(ParseError) as info:
            parse_poly("X^2+%")
        assert info.value.position == 4

    def test_bad_exponent(self):
        with pytest.raises(ParseError):
            parse_poly("X^(2)")
        with pytest.raises(ParseError):
            parse_poly("X^-1")

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            parse_poly("X+1)")


class TestPrint:
    def test_canonical_forms(self):
        assert print_poly(parse_poly("X^2+1")) == "X^2+1"
        assert print_poly(parse_poly("-2*X^3+X-1/2")) == "-2*X^3+X-1/2"
        assert print_poly(UniPoly.zero(QQ)) == "0"
        assert print_poly(ONE) == "1"

    def test_unit_coefficients(self):
        assert print_poly(X) == "X"
        assert print_poly(-X) == "-X"

    def test_t_coefficients(self):
        p = parse_poly("(t^2-2*t)*X^2+t*X-1")
        assert print_poly(p) == "(t^2-2*t)*X^2+t*X-1"
        assert parse_poly(print_poly(p)) == p

    def test_monomial_t_coefficient(self):
        p = parse_poly("-3*t*X+t^2")
        assert print_poly(p) == "-3*t*X+t^2"


small_fractions = st.fractions(min_value=-9, max_value=9, max_denominator=5)


@given(st.lists(small_fractions, min_size=0, max_size=7))
def test_print_parse_round_trip(coeffs):
    p = UniPoly(QQ, coeffs)
    assert parse_poly(print_poly(p)) == p


@given(st.lists(st.lists(st.integers(min_value=-9, max_value=9),
                         min_size=0, max_size=3),
                min_size=0, max_size=4))
def test_print_parse_round_trip_qqt(coeff_lists):
    coeffs = [QQ_T.coerce(UniPoly(QQ, [Fraction(c) for c in cl]))
              for cl in coeff_lists]
    p = UniPoly(QQ_T, coeffs)
    back = parse_poly(print_poly(p))
    if back.ctx == QQ:  # a t-free polynomial reparses over QQ
        back = poly_over_qq_to_qqt(back)
    assert back == p
