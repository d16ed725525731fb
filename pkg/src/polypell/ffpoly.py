"""Fraction-free polynomials over QQ(t) for the continued fraction engine.

Arithmetic on polynomials whose coefficients are rational functions in a
parameter grinds to a halt when every coefficient operation reduces its own
little fraction.  An FFPoly stores the X-coefficients as integer parameter
polynomials over one shared denominator, so each operation does its integer
work in bulk and cancels content once per result instead of once per
coefficient.

Integer parameter polynomials ("zp") are plain lists of bigints, ascending
by degree, the empty list meaning zero.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .poly import (UniPoly, _gcd_big, _int_content, _int_poly_gcd_cof,
                   _int_poly_mul, _int_primitive, _int_try_div, _mpz,
                   _qq_int_parts)

try:
    from gmpy2 import divexact as _divexact
except ImportError:  # pragma: no cover
    def _divexact(a, b):
        return a // b

_ONE = [_mpz(1)]


def zp_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    while out and not out[-1]:
        out.pop()
    return out


def zp_neg(a):
    return [-c for c in a]


def zp_sub(a, b):
    return zp_add(a, zp_neg(b))


def zp_mul(a, b):
    if not a or not b:
        return []
    return _int_poly_mul(a, b)


def zp_scale(a, c):
    if not c:
        return []
    return [x * c for x in a]


def zp_gcd(a, b):
    """Primitive-part gcd (integer content of the inputs is ignored)."""
    if not a:
        return _int_primitive(list(b))
    if not b:
        return _int_primitive(list(a))
    G, _, _ = _int_poly_gcd_cof(list(a), list(b))
    return _int_primitive(list(G))


def zp_div(a, b):
    """Exact quotient a/b in the integer parameter polynomials."""
    if not a:
        return []
    if len(b) == 1:
        g = b[0]
        if g == 1:
            return list(a)
        if g == -1:
            return zp_neg(a)
        return [_divexact(c, g) if c else c for c in a]
    q = _int_try_div(a, b)
    assert q is not None
    return q


class FFPoly:
    """X-polynomial with zp coefficients over a common zp denominator."""

    __slots__ = ("coeffs", "den")

    def __init__(self, coeffs, den):
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        if not coeffs:
            self.coeffs = []
            self.den = _ONE
            return
        den, coeffs = _cancel(den, coeffs)
        if den[-1] < 0:
            den = zp_neg(den)
            coeffs = [zp_neg(c) for c in coeffs]
        self.coeffs = coeffs
        self.den = den

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs


def _cancel(den, coeffs):
    """Divide the denominator and all coefficients by their full content.

    The gcd fold runs over the coefficients first (smallest operands, and an
    early exit skips the large denominator entirely when they are already
    coprime as a set)."""
    ic = _int_content(den)
    for c in coeffs:
        if ic == 1:
            break
        if c:
            ic = _gcd_big(ic, _int_content(c))
    g = None
    for c in coeffs:
        if c:
            g = c if g is None else zp_gcd(g, c)
            if len(g) == 1:
                break
    if len(g) > 1:
        g = zp_gcd(g, den)
    full = _int_primitive(list(g))
    if ic > 1:
        full = zp_scale(full, ic)
    if full != _ONE:
        den = zp_div(den, full)
        coeffs = [zp_div(c, full) for c in coeffs]
    return den, coeffs


FF_ZERO = FFPoly([], _ONE)
FF_ONE = FFPoly([list(_ONE)], _ONE)


def ff_add(f, g):
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    d = zp_gcd(f.den, g.den)
    mf = zp_div(g.den, d)
    mg = zp_div(f.den, d)
    n = max(len(f.coeffs), len(g.coeffs))
    coeffs = []
    for i in range(n):
        a = f.coeffs[i] if i < len(f.coeffs) else []
        b = g.coeffs[i] if i < len(g.coeffs) else []
        coeffs.append(zp_add(zp_mul(a, mf), zp_mul(b, mg)))
    return FFPoly(coeffs, zp_mul(f.den, mf))


def ff_neg(f):
    out = FFPoly.__new__(FFPoly)
    out.coeffs = [zp_neg(c) for c in f.coeffs]
    out.den = f.den
    return out


def ff_sub(f, g):
    return ff_add(f, ff_neg(g))


def ff_mul(f, g):
    if f.is_zero() or g.is_zero():
        return FF_ZERO
    out = [[] for _ in range(len(f.coeffs) + len(g.coeffs) - 1)]
    for i, a in enumerate(f.coeffs):
        if not a:
            continue
        for j, b in enumerate(g.coeffs):
            if b:
                out[i + j] = zp_add(out[i + j], zp_mul(a, b))
    return FFPoly(out, zp_mul(f.den, g.den))


def ff_divmod(f, g):
    """f = q*g + r in X over QQ(t), exact; deg r < deg g."""
    assert not g.is_zero()
    if f.degree < g.degree:
        return FF_ZERO, f
    lg = g.coeffs[-1]
    delta = f.degree - g.degree
    scale = list(_ONE)
    for _ in range(delta + 1):
        scale = zp_mul(scale, lg)
    rem = [zp_mul(c, scale) for c in f.coeffs]
    ng = len(g.coeffs)
    quo = [[] for _ in range(delta + 1)]
    for i in range(delta, -1, -1):
        c = rem[i + ng - 1]
        if not c:
            continue
        step = zp_div(c, lg)
        quo[i] = step
        for j, gc in enumerate(g.coeffs):
            if gc:
                rem[i + j] = zp_sub(rem[i + j], zp_mul(step, gc))
    qden = zp_mul(f.den, scale)
    q = FFPoly([zp_mul(c, g.den) for c in quo], list(qden))
    r = FFPoly(rem[:ng - 1], qden)
    return q, r


def ff_is_scalar_multiple(f, g):
    """Whether f = c*g for a nonzero constant c in the parameter field.

    Cheap cross-ratio test on the raw coefficients; the shared denominators
    drop out of the proportionality."""
    if f.is_zero() or g.is_zero():
        return False
    if f.degree != g.degree:
        return False
    fl, gl = f.coeffs[-1], g.coeffs[-1]
    for a, b in zip(f.coeffs, g.coeffs):
        if bool(a) != bool(b):
            return False
        if a and zp_mul(a, gl) != zp_mul(b, fl):
            return False
    return True


def ff_from_unipoly(p):
    """FFPoly from a UniPoly over QQ(t)."""
    parts = []
    for c in p.coeffs:
        if not c:
            parts.append(None)
            continue
        A, da = _qq_int_parts(c.num)
        B, db = _qq_int_parts(c.den)
        ca = _int_content(A)
        cb = _int_content(B)
        parts.append((Fraction(int(ca) * db, int(cb) * da),
                      [x // ca for x in A], [x // cb for x in B]))
    den_poly = list(_ONE)
    den_int = 1
    for part in parts:
        if part is None:
            continue
        s, _, bhat = part
        g = zp_gcd(den_poly, bhat)
        den_poly = zp_mul(den_poly, zp_div(bhat, g))
        d = s.denominator
        den_int = den_int // math.gcd(den_int, d) * d
    coeffs = []
    for part in parts:
        if part is None:
            coeffs.append([])
            continue
        s, ahat, bhat = part
        m = s.numerator * (den_int // s.denominator)
        coeffs.append(zp_scale(zp_mul(ahat, zp_div(den_poly, bhat)), m))
    return FFPoly(coeffs, zp_scale(den_poly, den_int))


def ff_to_unipoly(f, ctx):
    """UniPoly over QQ(t) from an FFPoly."""
    from .fields import QQ, RatFunc

    den = UniPoly(QQ, [Fraction(int(c)) for c in f.den])
    out = []
    for c in f.coeffs:
        num = UniPoly(QQ, [Fraction(int(x)) for x in c])
        out.append(RatFunc(num, den))
    return UniPoly(ctx, out)
