"""The coefficient tower: QQ, QQ(t), and quadratic extensions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polypell.fields import (QQ, QQ_T, QuadElem, QuadraticExtensionField,
                             RatFunc, ratfunc_specialize_poly, t_degree)
from polypell.poly import UniPoly


class TestRationalField:
    def test_coerce(self):
        assert QQ.coerce(3) == Fraction(3)
        assert QQ.coerce("1/2") == Fraction(1, 2)

    def test_sqrt(self):
        assert QQ.sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert QQ.sqrt(Fraction(2)) is None
        assert QQ.sqrt(Fraction(-1)) is None


class TestRatFunc:
    def test_reduction_and_monic_denominator(self):
        x = UniPoly.x(QQ)
        r = RatFunc(x * x - UniPoly.one(QQ), x * 2 + UniPoly.constant(QQ, 2))
        # (X^2-1)/(2X+2) = (X-1)/2 with monic denominator convention
        assert r.den == UniPoly.one(QQ)
        assert r.num == (x - UniPoly.one(QQ)) / Fraction(2)

    def test_arithmetic(self):
        t = QQ_T.t()
        one = QQ_T.one
        assert t * (one / t) == one
        assert (t + one) * (t - one) == t * t - one

    def test_evaluate_and_poles(self):
        t = QQ_T.t()
        r = QQ_T.one / t
        with pytest.raises(ZeroDivisionError):
            r.evaluate(Fraction(0))
        assert r.evaluate(Fraction(2)) == Fraction(1, 2)

    def test_field_sqrt(self):
        t = QQ_T.t()
        sq = t * t + t * 2 + QQ_T.one  # (t+1)^2
        root = QQ_T.sqrt(sq)
        assert root is not None and root * root == sq
        assert QQ_T.sqrt(t) is None

    def test_t_degree(self):
        x = UniPoly.x(QQ_T)
        t = UniPoly.constant(QQ_T, QQ_T.t())
        p = (x - t) * (x ** 3 - UniPoly.one(QQ_T))
        assert t_degree(p) == 1

    def test_specialize_poly(self):
        x = UniPoly.x(QQ_T)
        t = UniPoly.constant(QQ_T, QQ_T.t())
        p = x * x + t
        q = ratfunc_specialize_poly(p, Fraction(5))
        xq = UniPoly.x(QQ)
        assert q == xq * xq + UniPoly.constant(QQ, 5)


simple_fraction = st.fractions(min_value=-8, max_value=8, max_denominator=5)


class TestQuadraticExtension:
    def setup_method(self):
        self.ext = QuadraticExtensionField(QQ, Fraction(2))

    def test_rejects_square_delta(self):
        with pytest.raises(ValueError):
            QuadraticExtensionField(QQ, Fraction(4))

    def test_rejects_nesting(self):
        with pytest.raises(TypeError):
            QuadraticExtensionField(self.ext, self.ext.root)

    def test_root_squares_to_delta(self):
        r = self.ext.root
        assert r * r == self.ext.coerce(Fraction(2))

    def test_classic_unit(self):
        one_plus = QuadElem(Fraction(1), Fraction(1), self.ext)
        one_minus = one_plus.conjugate()
        assert one_plus * one_minus == self.ext.coerce(Fraction(-1))

    def test_division(self):
        a = QuadElem(Fraction(3), Fraction(1), self.ext)
        b = QuadElem(Fraction(1), Fraction(-2), self.ext)
        assert (a / b) * b == a

    def test_sqrt_in_extension(self):
        # 3 + 2*sqrt(2) = (1 + sqrt(2))^2
        val = QuadElem(Fraction(3), Fraction(2), self.ext)
        root = self.ext.sqrt(val)
        assert root is not None and root * root == val

    @settings(max_examples=50, deadline=None)
    @given(simple_fraction, simple_fraction)
    def test_norm_is_multiplicative(self, a, b):
        x = QuadElem(a, b, self.ext)
        y = QuadElem(b, Fraction(1), self.ext)
        assert (x * y).norm() == x.norm() * y.norm()

    def test_extension_of_qqt(self):
        t = QQ_T.t()
        ext = QuadraticExtensionField(QQ_T, t + QQ_T.coerce(Fraction(2)))
        r = ext.root
        assert r * r == ext.coerce(t + QQ_T.coerce(Fraction(2)))
