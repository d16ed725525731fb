"""Exact polynomial arithmetic over QQ and QQ(t)."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polypell.errors import DivisionByZeroPoly, ZeroPolynomial
from polypell.fields import QQ, QQ_T
from polypell.poly import (UniPoly, discriminant, inv_mod, is_squarefree,
                           poly_divmod, poly_ext_gcd, poly_gcd, poly_sqrt,
                           rational_roots, resultant)

X = UniPoly.x(QQ)


def poly(*coeffs_desc):
    return UniPoly(QQ, [Fraction(c) for c in reversed(coeffs_desc)])


small_fractions = st.fractions(min_value=-10, max_value=10,
                               max_denominator=6)


def polys(max_degree=6):
    return st.lists(small_fractions, min_size=0, max_size=max_degree + 1) \
        .map(lambda cs: UniPoly(QQ, cs))


class TestBasics:
    def test_zero_degree_convention(self):
        assert UniPoly.zero(QQ).degree == -1
        assert UniPoly.one(QQ).degree == 0

    def test_trailing_zeros_stripped(self):
        assert UniPoly(QQ, [1, 2, 0, 0]) == UniPoly(QQ, [1, 2])

    def test_arithmetic(self):
        p = poly(1, 0, -2)
        q = poly(1, 1)
        assert p + q == poly(1, 1, -1)
        assert p * q == poly(1, 1, -2, -2)
        assert p - p == UniPoly.zero(QQ)

    def test_evaluation(self):
        p = poly(2, -1, 3)
        assert p(Fraction(2)) == 2 * 4 - 2 + 3

    def test_compose(self):
        p = poly(1, 0, 1)  # X^2 + 1
        q = poly(1, 1)     # X + 1
        assert p.compose(q) == poly(1, 2, 2)

    def test_derivative(self):
        assert poly(1, 0, 0, 5).derivative() == poly(3, 0, 0)

    def test_pow(self):
        assert (X + UniPoly.one(QQ)) ** 3 == poly(1, 3, 3, 1)


class TestDivision:
    def test_divmod_example(self):
        q, r = poly_divmod(X ** 6 + X, X ** 2 * 2)
        assert q == UniPoly(QQ, [0, 0, 0, 0, Fraction(1, 2)])
        assert r == X

    def test_divide_by_zero(self):
        with pytest.raises(DivisionByZeroPoly):
            poly_divmod(X, UniPoly.zero(QQ))

    @settings(max_examples=60, deadline=None)
    @given(polys(), polys())
    def test_divmod_reconstruction(self, a, b):
        if b.is_zero():
            return
        q, r = poly_divmod(a, b)
        assert q * b + r == a
        assert r.is_zero() or r.degree < b.degree


class TestGcd:
    def test_gcd_is_monic_common_divisor(self):
        a = (X + UniPoly.one(QQ)) ** 2 * (X - UniPoly.one(QQ))
        b = (X + UniPoly.one(QQ)) * poly(1, 0, 1)
        g = poly_gcd(a, b)
        assert g == X + UniPoly.one(QQ)

    def test_gcd_both_zero(self):
        with pytest.raises(ZeroPolynomial):
            poly_gcd(UniPoly.zero(QQ), UniPoly.zero(QQ))

    @settings(max_examples=40, deadline=None)
    @given(polys(4), polys(4))
    def test_gcd_divides(self, a, b):
        if a.is_zero() and b.is_zero():
            return
        g = poly_gcd(a, b)
        for p in (a, b):
            if not p.is_zero():
                _q, r = poly_divmod(p, g)
                assert r.is_zero()

    def test_ext_gcd_bezout(self):
        a = poly(1, 0, -1)
        b = poly(1, 2, 1)
        g, u, v = poly_ext_gcd(a, b)
        assert u * a + v * b == g
        assert g == X + UniPoly.one(QQ)

    def test_inv_mod(self):
        m = poly(1, 0, 1)
        a = X + UniPoly.one(QQ)
        inv = inv_mod(a, m)
        assert (a * inv) % m == UniPoly.one(QQ)

    def test_gcd_over_qqt_no_swell(self):
        # this gcd is intractable for naive Euclid over QQ(t)
        Xt = UniPoly.x(QQ_T)
        t = UniPoly.constant(QQ_T, QQ_T.t())
        D = (Xt - t) * (Xt ** 7 - Xt ** 3 - UniPoly.one(QQ_T))
        g = poly_gcd(D, D.derivative())
        assert g == UniPoly.one(QQ_T)
        h = poly_gcd(D * (Xt - t), D)
        assert h == D.monic()


class TestSquarefreeAndSqrt:
    def test_squarefree(self):
        assert is_squarefree(X ** 6 + X)
        assert not is_squarefree((X + UniPoly.one(QQ)) ** 2 * X)

    def test_poly_sqrt(self):
        p = poly(1, 2, 1)
        s = poly_sqrt(p)
        assert s is not None and s * s == p
        assert poly_sqrt(poly(1, 0, 1)) is None

    @settings(max_examples=40, deadline=None)
    @given(polys(3))
    def test_sqrt_of_square(self, p):
        if p.is_zero():
            return
        sq = p * p
        s = poly_sqrt(sq)
        assert s is not None and s * s == sq


class TestRootsAndResultants:
    def test_rational_roots_with_multiplicity(self):
        p = (X - poly(Fraction(1, 2))) ** 2 * (X + poly(3)) * poly(1, 0, 1)
        roots = dict(rational_roots(p))
        assert roots == {Fraction(1, 2): 2, Fraction(-3): 1}

    def test_rational_roots_at_zero(self):
        p = X ** 3 * (X - UniPoly.one(QQ))
        roots = dict(rational_roots(p))
        assert roots == {Fraction(0): 3, Fraction(1): 1}

    def test_discriminant_quadratic(self):
        assert discriminant(poly(1, 1, 1)) == Fraction(-3)

    def test_resultant_shares_root(self):
        a = (X - poly(2)) * (X + UniPoly.one(QQ))
        b = (X - poly(2)) * (X - poly(5))
        assert resultant(a, b) == 0
        c = X - poly(7)
        assert resultant(a, c) != 0
