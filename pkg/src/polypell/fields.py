"""The exact coefficient tower: QQ, QQ(t), and quadratic extensions.

A field context exposes ``zero``, ``one``, ``coerce``, ``sqrt`` (canonical
square root or None) and ``to_fraction_free_row`` helpers used by the linear
algebra layer.  Elements carry full exact arithmetic through operators.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .poly import UniPoly, reduce_fraction_poly


class RationalField:
    """The field QQ, with Fraction elements."""

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, v):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        if isinstance(v, str):
            return Fraction(v)
        raise TypeError(f"cannot coerce {v!r} into QQ")

    def sqrt(self, c):
        c = self.coerce(c)
        if c < 0:
            return None
        rn = math.isqrt(c.numerator)
        rd = math.isqrt(c.denominator)
        if rn * rn == c.numerator and rd * rd == c.denominator:
            return Fraction(rn, rd)
        return None

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class RatFunc:
    """Rational function in one parameter over QQ, denominator monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = UniPoly.one(QQ)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = UniPoly.one(QQ)
        elif den.degree > 0:
            num, den = reduce_fraction_poly(num, den)
        else:
            lead = den.coefficient(0)
            if lead != Fraction(1):
                num = num / lead
            den = UniPoly.one(QQ)
        self.num = num
        self.den = den

    def is_polynomial(self):
        return self.den.degree == 0

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc(UniPoly.constant(QQ, Fraction(other)))
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc(UniPoly.constant(QQ, Fraction(other)))
        if isinstance(other, UniPoly) and other.ctx == QQ:
            return RatFunc(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if n < 0:
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def evaluate(self, t0):
        """Value at t = t0 (a Fraction); raises ZeroDivisionError at poles."""
        t0 = Fraction(t0)
        d = self.den(t0)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at specialization")
        return self.num(t0) / d

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"


class RationalFunctionField:
    """The field QQ(t) of rational functions in one named parameter."""

    def __init__(self, parameter="t"):
        self.parameter = parameter
        self.zero = RatFunc(UniPoly.zero(QQ))
        self.one = RatFunc(UniPoly.one(QQ))

    def coerce(self, v):
        if isinstance(v, RatFunc):
            return v
        if isinstance(v, (int, Fraction)):
            return RatFunc(UniPoly.constant(QQ, Fraction(v)))
        if isinstance(v, UniPoly) and v.ctx == QQ:
            return RatFunc(v)
        raise TypeError(f"cannot coerce {v!r} into QQ({self.parameter})")

    def t(self):
        return RatFunc(UniPoly.x(QQ))

    def sqrt(self, c):
        c = self.coerce(c)
        from .poly import poly_sqrt

        rn = poly_sqrt(c.num)
        if rn is None:
            return None
        rd = poly_sqrt(c.den)
        if rd is None:
            return None
        root = RatFunc(rn, rd)
        # Canonical sign: positive leading coefficient of the numerator.
        if root.num.lead < 0:
            root = -root
        return root

    def __eq__(self, other):
        return (isinstance(other, RationalFunctionField)
                and other.parameter == self.parameter)

    def __hash__(self):
        return hash(("QQ(t)", self.parameter))

    def __repr__(self):
        return f"QQ({self.parameter})"


QQ_T = RationalFunctionField("t")


class QuadElem:
    """Element a + b*sqrt(delta) of a quadratic extension."""

    __slots__ = ("a", "b", "field")

    def __init__(self, a, b, field):
        self.a = field.base.coerce(a)
        self.b = field.base.coerce(b)
        self.field = field

    def conjugate(self):
        return QuadElem(self.a, -self.b, self.field)

    def norm(self):
        """a^2 - delta*b^2, an element of the base field."""
        return self.a * self.a - self.field.delta * self.b * self.b

    def is_base(self):
        return self.b == self.field.base.zero

    def __bool__(self):
        z = self.field.base.zero
        return self.a != z or self.b != z

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b, self.field))

    def _coerce(self, other):
        if isinstance(other, QuadElem):
            if other.field != self.field:
                return None
            return other
        try:
            return QuadElem(self.field.base.coerce(other),
                            self.field.base.zero, self.field)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadElem(self.a + other.a, self.b + other.b, self.field)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.a, -self.b, self.field)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = self.field.delta
        return QuadElem(self.a * other.a + d * self.b * other.b,
                        self.a * other.b + self.b * other.a, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = other.norm()
        if not _nonzero(n):
            raise ZeroDivisionError("division by zero in quadratic extension")
        inv = QuadElem(other.a / n, -other.b / n, self.field)
        return self * inv

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if n < 0:
            return (self.field.one / self) ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self):
        return f"QuadElem({self.a!r}, {self.b!r})"


def _nonzero(c):
    if isinstance(c, RatFunc):
        return bool(c)
    return c != 0


class QuadraticExtensionField:
    """Base field with sqrt(delta) adjoined; delta a base non-square.

    Only extensions of QQ or QQ(t) are supported; nesting is rejected.
    """

    def __init__(self, base, delta):
        if isinstance(base, QuadraticExtensionField):
            raise TypeError("nested quadratic extensions are not supported")
        delta = base.coerce(delta)
        if base.sqrt(delta) is not None:
            raise ValueError("delta is a square in the base field")
        self.base = base
        self.delta = delta
        self.zero = QuadElem(base.zero, base.zero, self)
        self.one = QuadElem(base.one, base.zero, self)
        self.root = QuadElem(base.zero, base.one, self)

    def coerce(self, v):
        if isinstance(v, QuadElem):
            if v.field != self:
                raise TypeError("element of a different quadratic extension")
            return v
        return QuadElem(self.base.coerce(v), self.base.zero, self)

    def sqrt(self, c):
        c = self.coerce(c)
        zero = self.base.zero
        if c.b == zero:
            r = self.base.sqrt(c.a)
            if r is not None:
                return QuadElem(r, zero, self)
            # sqrt(a) = sqrt(a/delta) * sqrt(delta) when a/delta is a square
            r = self.base.sqrt(c.a / self.delta)
            if r is not None:
                return QuadElem(zero, r, self)
            return None
        # (x + y*sqrt(delta))^2 = c: x^2 is a root of z^2 - a z + delta b^2/4
        disc = self.base.sqrt(c.norm())
        if disc is None:
            return None
        two = self.base.coerce(2)
        for sign in (self.base.one, -self.base.one):
            z = (c.a + sign * disc) / two
            x = self.base.sqrt(z)
            if x is not None and _nonzero(x):
                y = c.b / (two * x)
                return QuadElem(x, y, self)
        return None

    def __eq__(self, other):
        return (isinstance(other, QuadraticExtensionField)
                and other.base == self.base and other.delta == self.delta)

    def __hash__(self):
        return hash(("quadext", self.base, self.delta))

    def __repr__(self):
        return f"{self.base!r}(sqrt({self.delta!r}))"


def ratfunc_specialize_poly(p, t0):
    """Specialize a UniPoly over QQ(t) at t = t0, giving a UniPoly over QQ.

    Raises ZeroDivisionError if any coefficient has a pole at t0.
    """
    t0 = Fraction(t0)
    return UniPoly(QQ, [c.evaluate(t0) for c in p.coeffs])


def poly_over_qq_to_qqt(p, ctx=QQ_T):
    """Lift a UniPoly over QQ to a UniPoly over QQ(t) with constant coeffs."""
    return UniPoly(ctx, [ctx.coerce(c) for c in p.coeffs])


def t_degree(p):
    """Max parameter degree of the coefficients of a UniPoly over QQ(t).

    Requires every coefficient to be polynomial in the parameter.
    """
    deg = -1
    for c in p.coeffs:
        if not c.is_polynomial():
            raise ValueError("coefficient is not polynomial in the parameter")
        deg = max(deg, c.num.degree)
    return deg
