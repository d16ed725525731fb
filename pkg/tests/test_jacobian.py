"""Principality decisions and relation lattices on the Jacobian."""

from fractions import Fraction

import pytest

from polypell.curve import Divisor, HyperCurve, INF_MINUS
from polypell.errors import BudgetExceeded
from polypell.fields import QQ
from polypell.jacobian import (is_principal, order_of_class,
                               relation_lattice)
from polypell.poly import UniPoly

X = UniPoly.x(QQ)
ONE = UniPoly.one(QQ)


@pytest.fixture
def curve():
    return HyperCurve(X ** 6 + X)


class TestIsPrincipal:
    def test_zero_divisor(self, curve):
        cert = is_principal(curve, Divisor())
        assert cert is not None
        assert cert.R == ONE and cert.S.is_zero()

    def test_divisor_of_linear_is_principal(self, curve):
        div = curve.divisor_of_linear(Fraction(2))
        cert = is_principal(curve, div, hints=[Fraction(2)])
        assert cert is not None
        assert cert.divisor == div

    def test_point_minus_infinity_not_principal(self, curve):
        # a genus-2 curve has no function with a single simple pole
        p = curve.points_above(0)[0]
        div = Divisor({p: 1, INF_MINUS: -1})
        assert is_principal(curve, div) is None

    def test_infinity_difference_small_multiples(self, curve):
        q = curve.infinity_difference()
        for k in range(1, 5):
            assert is_principal(curve, k * q) is None
        cert = is_principal(curve, 5 * q)
        assert cert is not None
        # the certificate is the Pell solution up to scaling
        A, B = cert.R, cert.S
        norm = A * A - curve.D * B * B
        assert norm.degree == 0

    def test_certificate_reverification(self, curve):
        div = 5 * curve.infinity_difference()
        cert = is_principal(curve, div)
        assert curve.divisor_of_function(
            cert.R, cert.S, denominator=cert.denominator) == div


class TestOrderOfClass:
    def test_infinity_class_has_order_five(self, curve):
        result = order_of_class(curve, curve.infinity_difference(), 8)
        assert result is not None
        k, cert = result
        assert k == 5

    def test_no_order_in_range(self, curve):
        assert order_of_class(curve, curve.infinity_difference(), 4) is None


class TestRelationLattice:
    def test_infinity_lattice(self, curve):
        relations, basis = relation_lattice(curve, [], [], 6)
        vectors = {tuple(v) for v in relations}
        assert (5,) in vectors and (-5,) in vectors
        assert (1,) not in vectors
        assert basis == [[5]]

    def test_budget(self, curve):
        with pytest.raises(BudgetExceeded):
            relation_lattice(curve, [], [], 6, budget=2)

    def test_point_and_infinity(self):
        # D = X^4 + 2X + 1: (0, 1) is a rational point
        curve = HyperCurve(X ** 4 + X * 2 + ONE)
        p = curve.points_above(0)[0]
        div = Divisor({p: 1, INF_MINUS: -1})
        relations, basis = relation_lattice(
            curve, [div], [3], 3, hints=[Fraction(0)])
        assert all(len(v) == 2 for v in relations)
        # the conjugation identity [0+ - inf-] + [0- - inf+] = div(X)
        # makes some combination principal; the lattice is nontrivial
        assert basis
        for v in relations:
            check = Divisor()
            if v[0]:
                check = check + v[0] * div
            if v[1]:
                check = check + v[1] * curve.infinity_difference()
            assert is_principal(curve, check, hints=[Fraction(0)]) is not None
