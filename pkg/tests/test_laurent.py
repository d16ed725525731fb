"""Truncated Laurent series and the canonical square root of D."""

import random
from fractions import Fraction

import pytest

from polypell.errors import LeadingCoefficientNotASquare, OddDegree
from polypell.fields import QQ, QQ_T
from polypell.laurent import LaurentSeries, sqrt_series
from polypell.poly import UniPoly

X = UniPoly.x(QQ)


def test_from_poly_round_trip():
    p = X ** 3 + X * 2 + UniPoly.one(QQ)
    s = LaurentSeries.from_poly(p)
    assert s.polynomial_part() == p
    assert s.is_exact()


def test_coefficient_below_precision_raises():
    s = LaurentSeries(QQ, 2, [1, 0, 3], prec=0)
    assert s.coefficient(2) == 1
    with pytest.raises(ValueError):
        s.coefficient(-1)


def test_addition_cancels_top():
    a = LaurentSeries(QQ, 1, [1, 2], prec=0)
    b = LaurentSeries(QQ, 1, [-1, 1], prec=0)
    c = a + b
    assert c.top == 0 and c.coefficient(0) == 3


def test_multiplication_precision():
    a = LaurentSeries(QQ, 2, [1, 1, 1, 1, 1], prec=-2)
    b = LaurentSeries(QQ, 1, [1, 1], prec=0)
    c = a * b
    assert c.prec == max(-2 + 1, 0 + 2)


def test_inverse():
    p = X ** 2 + X
    s = LaurentSeries.from_poly(p)
    inv = s.inverse(-8)
    prod = s * inv
    assert prod.coefficient(0) == 1
    for e in range(-1, -7, -1):
        assert prod.coefficient(e) == 0


def test_sqrt_series_basic():
    D = X ** 6 + X
    s = sqrt_series(D, -10)
    assert s.top == 3
    sq = s * s
    for e in range(6, sq.prec, -1):
        want = D.coefficient(e) if e >= 0 else Fraction(0)
        assert sq.coefficient(e) == want


def test_sqrt_series_polynomial_part():
    D = X ** 6 + X
    assert sqrt_series(D, 0).polynomial_part() == X ** 3


def test_sqrt_series_rejects_odd_degree():
    with pytest.raises(OddDegree):
        sqrt_series(X ** 3 + X, -4)


def test_sqrt_series_rejects_nonsquare_lead():
    with pytest.raises(LeadingCoefficientNotASquare):
        sqrt_series(X ** 4 * 2 + X, -4)


def test_sqrt_series_over_qqt():
    x = UniPoly.x(QQ_T)
    t = UniPoly.constant(QQ_T, QQ_T.t())
    D = x ** 6 + x + t
    s = sqrt_series(D, -6)
    sq = s * s
    for e in range(6, sq.prec - 1, -1):
        want = D.coefficient(e) if e >= 0 else QQ_T.zero
        assert sq.coefficient(e) == want


def test_sqrt_squares_back_on_random_polys():
    rng = random.Random(20260823)
    checked = 0
    while checked < 200:
        deg = rng.choice([4, 6, 8])
        coeffs = [Fraction(rng.randint(-5, 5)) for _ in range(deg)] + [
            Fraction(1)]
        D = UniPoly(QQ, coeffs)
        if D.degree != deg:
            continue
        prec = -deg - 4
        s = sqrt_series(D, prec)
        sq = s * s
        for e in range(deg, prec + deg, -1):
            want = D.coefficient(e) if e >= 0 else Fraction(0)
            assert sq.coefficient(e) == want
        checked += 1
