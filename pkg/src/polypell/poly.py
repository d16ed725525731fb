"""Univariate polynomials over an exact field given by a context object.

A context must provide ``zero``, ``one``, ``coerce(value)`` and
``sqrt(element)``; coefficients themselves support exact field arithmetic
through the usual operators.  The zero polynomial has degree -1.
"""

from __future__ import annotations

import math
from fractions import Fraction

try:  # GMP bigints make the heavy QQ[t] kernels subquadratic
    from gmpy2 import gcd as _gcd_big, mpz as _mpz
except ImportError:  # pragma: no cover
    _gcd_big = math.gcd
    _mpz = int

try:  # C-level limb concatenation for Kronecker substitution
    from gmpy2 import pack as _limb_pack, unpack as _limb_unpack
except ImportError:  # pragma: no cover
    _limb_pack = _limb_unpack = None

from .errors import DivisionByZeroPoly, ZeroPolynomial


def _make_fraction(n, d):
    """Fraction n/d reduced with the fast bigint gcd, skipping the slow
    normalization in Fraction.__new__."""
    if d < 0:
        n, d = -n, -d
    if d != 1:
        g = _gcd_big(n, d)
        if g > 1:
            n //= g
            d //= g
    f = Fraction.__new__(Fraction)
    f._numerator = int(n)
    f._denominator = int(d)
    return f


class UniPoly:
    """Dense univariate polynomial, coefficients ascending by degree."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        cs = [ctx.coerce(c) for c in coeffs]
        while cs and cs[-1] == ctx.zero:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx):
        return cls(ctx, (ctx.one,))

    @classmethod
    def constant(cls, ctx, c):
        return cls(ctx, (c,))

    @classmethod
    def x(cls, ctx):
        return cls(ctx, (ctx.zero, ctx.one))

    @classmethod
    def monomial(cls, ctx, c, n):
        return cls(ctx, (ctx.zero,) * n + (ctx.coerce(c),))

    # -- basic queries -------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    @property
    def lead(self):
        if not self.coeffs:
            return self.ctx.zero
        return self.coeffs[-1]

    def coefficient(self, n):
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return self.ctx.zero

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    # -- arithmetic ----------------------------------------------------

    def _coerce_other(self, other):
        if isinstance(other, UniPoly):
            if other.ctx != self.ctx:
                raise ValueError("mixed polynomial contexts")
            return other
        try:
            c = self.ctx.coerce(other)
        except (TypeError, ValueError):
            return None
        return UniPoly.constant(self.ctx, c)

    def __add__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        z = self.ctx.zero
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(self.ctx)
        if type(self.coeffs[0]) is Fraction:
            return _mul_qq(self, other)
        z = self.ctx.zero
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == z:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(self.ctx, out)

    __rmul__ = __mul__

    def scale(self, c):
        c = self.ctx.coerce(c)
        return UniPoly(self.ctx, [a * c for a in self.coeffs])

    def __truediv__(self, c):
        if isinstance(c, UniPoly):
            q, r = poly_divmod(self, c)
            if not r.is_zero():
                raise ValueError("inexact polynomial division")
            return q
        c = self.ctx.coerce(c)
        if c == self.ctx.zero:
            raise ZeroDivisionError("division by zero constant")
        return UniPoly(self.ctx, [a / c for a in self.coeffs])

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative exponent")
        result = UniPoly.one(self.ctx)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    # -- calculus & evaluation ------------------------------------------

    def derivative(self):
        ctx = self.ctx
        out = [self.coeffs[i] * ctx.coerce(i) for i in range(1, len(self.coeffs))]
        return UniPoly(ctx, out)

    def __call__(self, x):
        """Evaluate by Horner's rule; ``x`` is coerced into the context."""
        x = self.ctx.coerce(x)
        acc = self.ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_in(self, ctx, x):
        """Evaluate at ``x`` living in another context containing the image
        of this polynomial's coefficients (e.g. a quadratic extension)."""
        acc = ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * x + ctx.coerce(c)
        return acc

    def map_coefficients(self, ctx, fn):
        return UniPoly(ctx, [fn(c) for c in self.coeffs])

    def taylor_shift(self, x0):
        """Coefficients of p(x0 + e) as a polynomial in e."""
        ctx = self.ctx
        x0 = ctx.coerce(x0)
        acc = UniPoly.zero(ctx)
        shift = UniPoly(ctx, (x0, ctx.one))  # substitute X = x0 + e
        for c in reversed(self.coeffs):
            acc = acc * shift + UniPoly.constant(ctx, c)
        return acc

    def compose(self, inner):
        """p(inner(X)) by Horner's rule on polynomials."""
        acc = UniPoly.zero(self.ctx)
        for c in reversed(self.coeffs):
            acc = acc * inner + UniPoly.constant(self.ctx, c)
        return acc

    def monic(self):
        if self.is_zero():
            return self
        return self / self.lead

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"


def _qq_int_parts(p):
    """Integer coefficient list and common denominator of a QQ polynomial."""
    den = 1
    for c in p.coeffs:
        d = c.denominator
        den = den // math.gcd(den, d) * d
    return [_mpz(c.numerator) * (den // c.denominator) for c in p.coeffs], den


def _int_poly_mul(A, B):
    """Product of integer coefficient lists; Kronecker substitution packs
    large operands into single bigints to use fast integer multiplication."""
    la, lb = len(A), len(B)
    bits = max(max(abs(c).bit_length() for c in A),
               max(abs(c).bit_length() for c in B))
    if min(la, lb) < 8 or bits < 64:
        out = [_mpz(0)] * (la + lb - 1)
        for i, a in enumerate(A):
            if not a:
                continue
            for j, b in enumerate(B):
                out[i + j] += a * b
        return out
    k = _round8(2 * bits + min(la, lb).bit_length() + 2)
    out = _unpack(_pack(A, k) * _pack(B, k), k)
    out += [_mpz(0)] * (la + lb - 1 - len(out))
    return out


def _round8(k):
    return (k + 7) & ~7


def _pack(coeffs, k):
    """Evaluate an integer coefficient list at 2^k (k a multiple of 8):
    linear-time limb concatenation, negatives split off."""
    if _limb_pack is not None:
        if all(c >= 0 for c in coeffs):
            return _limb_pack(coeffs, k)
        pos = [c if c > 0 else 0 for c in coeffs]
        neg = [-c if c < 0 else 0 for c in coeffs]
        return _limb_pack(pos, k) - _limb_pack(neg, k)
    kb = k >> 3
    n = len(coeffs)
    pos = bytearray(kb * n)
    neg = bytearray(kb * n)
    for i, c in enumerate(coeffs):
        if c > 0:
            pos[i * kb:i * kb + kb] = int(c).to_bytes(kb, "little")
        elif c:
            neg[i * kb:i * kb + kb] = int(-c).to_bytes(kb, "little")
    return _mpz(int.from_bytes(pos, "little")
                - int.from_bytes(neg, "little"))


def _unpack(g, k):
    """Balanced base-2^k digits of g, low to high."""
    if g < 0:
        return [-d for d in _unpack(-g, k)]
    if _limb_unpack is not None:
        digits = _limb_unpack(_mpz(g), k)
    else:
        kb = k >> 3
        nd = (int(g).bit_length() // k) + 1
        b = int(g).to_bytes(nd * kb, "little")
        digits = [_mpz(int.from_bytes(b[i * kb:i * kb + kb], "little"))
                  for i in range(nd)]
    half = 1 << (k - 1)
    base = 1 << k
    out = []
    carry = 0
    for d in digits:
        d = d + carry
        if d > half:
            d -= base
            carry = 1
        else:
            carry = 0
        out.append(d)
    if carry:
        out.append(_mpz(1))
    while out and not out[-1]:
        out.pop()
    return out


def _mul_qq(p, q):
    """Product over QQ via integer convolution: one Fraction normalization
    per output coefficient instead of one per term."""
    A, da = _qq_int_parts(p)
    B, db = _qq_int_parts(q)
    out = _int_poly_mul(A, B)
    d = da * db
    return UniPoly(p.ctx, [_make_fraction(c, d) for c in out])


def _divmod_qq(a, b):
    """Long division over QQ on integer coefficients.  With lb = lead of the
    integer form of b and delta = deg a - deg b, the classical pseudo-division
    identity makes every step of dividing lb^(delta+1)*a by b exact in ZZ."""
    A, da = _qq_int_parts(a)
    B, db = _qq_int_parts(b)
    delta = len(A) - len(B)
    lb = B[-1]
    scale = lb ** (delta + 1)
    rem = [c * scale for c in A]
    nb = len(B)
    q = [0] * (delta + 1)
    for i in range(delta, -1, -1):
        c = rem[i + nb - 1]
        if not c:
            continue
        f = c // lb
        q[i] = f
        for j, bc in enumerate(B):
            rem[i + j] -= f * bc
    qden = da * scale
    ctx = a.ctx
    return (UniPoly(ctx, [_make_fraction(c * db, qden) for c in q]),
            UniPoly(ctx, [_make_fraction(c, qden) for c in rem[:nb - 1]]))


def poly_divmod(a, b):
    """Long division: a = q*b + r with deg r < deg b."""
    if not isinstance(a, UniPoly) or not isinstance(b, UniPoly):
        raise TypeError("poly_divmod expects UniPoly arguments")
    if a.ctx != b.ctx:
        raise ValueError("mixed polynomial contexts")
    if b.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    ctx = a.ctx
    if a.degree < b.degree:
        return UniPoly.zero(ctx), a
    if a.coeffs and type(a.coeffs[0]) is Fraction:
        return _divmod_qq(a, b)
    rem = list(a.coeffs)
    db, lb = b.degree, b.lead
    q = [ctx.zero] * (a.degree - db + 1)
    for i in range(a.degree - db, -1, -1):
        c = rem[i + db]
        if c == ctx.zero:
            continue
        f = c / lb
        q[i] = f
        for j, bc in enumerate(b.coeffs):
            rem[i + j] = rem[i + j] - f * bc
    return UniPoly(ctx, q), UniPoly(ctx, rem[:db])


def poly_gcd(a, b):
    """Monic greatest common divisor."""
    if a.is_zero() and b.is_zero():
        raise ZeroPolynomial("gcd of two zero polynomials")
    from .fields import RationalField, RationalFunctionField
    if isinstance(a.ctx, RationalFunctionField):
        return _gcd_over_ratfunc(a, b)
    if isinstance(a.ctx, RationalField):
        return _gcd_over_qq(a, b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _gcd_over_qq(a, b):
    """Gcd over QQ via integer-coefficient gcd, avoiding Fraction swell."""
    A = _int_coeffs(a)
    B = _int_coeffs(b)
    G, _, _ = _int_poly_gcd_cof(A, B)
    return UniPoly(a.ctx, [Fraction(int(c)) for c in G]).monic()


def _int_poly_gcd_cof(A, B):
    """Gcd G of primitive integer-coefficient lists, with the cofactors
    A/G and B/G (None for a zero input)."""
    if not A:
        return B, None, [_mpz(1)]
    if not B:
        return A, [_mpz(1)], None
    if len(A) == 1 or len(B) == 1:
        return [_mpz(1)], A, B
    got = _heuristic_int_gcd(A, B)
    if got is not None:
        return got
    A0, B0 = A, B
    while B:
        R = _int_pseudo_rem(A, B)
        A, B = B, _int_primitive(R)
    return A, _int_try_div(A0, A), _int_try_div(B0, A)


def _heuristic_int_gcd(A, B):
    """Heuristic gcd: evaluate at a power of two, take one integer gcd,
    reconstruct balanced digits, certify by exact division (returning the
    two cofactors).  Returns None when the attempts fail and the caller
    must fall back to a remainder sequence."""
    bits = max(max(abs(c).bit_length() for c in A),
               max(abs(c).bit_length() for c in B))
    k = _round8(bits + 4)
    for _ in range(6):
        g = _gcd_big(_pack(A, k), _pack(B, k))
        if g:
            G = _int_primitive(_unpack(g, k))
            if len(G) == 1:
                # a certified constant gcd: the inputs are coprime
                return [_mpz(1)], A, B
            qa = _int_try_div(A, G)
            if qa is not None:
                qb = _int_try_div(B, G)
                if qb is not None:
                    return G, qa, qb
        k = _round8(k + (k >> 1) + 8)
    return None


def _int_try_div(A, G):
    """Exact quotient A/G of integer polynomials, or None when G does not
    divide A.  Division is done by Kronecker substitution: a nonzero integer
    remainder at 2^k disproves divisibility, and a reconstructed quotient is
    certified by multiplying back."""
    if not A:
        return []
    if len(G) > len(A):
        return None
    if len(G) == 1:
        g = G[0]
        if g == 1:
            return list(A)
        out = []
        for c in A:
            q, r = divmod(c, g)
            if r:
                return None
            out.append(q)
        return out
    bits_a = max(abs(c).bit_length() for c in A)
    bits_g = max(abs(c).bit_length() for c in G)
    k = _round8(bits_a + bits_g + len(A).bit_length() + 4)
    for _ in range(4):
        q, r = divmod(_pack(A, k), _pack(G, k))
        if r:
            return None
        Q = _unpack(q, k)
        if (len(Q) == len(A) - len(G) + 1
                and _int_poly_mul(Q, G) == A):
            return Q
        k = _round8(2 * k)
    # The quotient digits did not stabilize; do the schoolbook division.
    rem = list(A)
    ng = len(G)
    lead = G[-1]
    out = [_mpz(0)] * (len(A) - ng + 1)
    for i in range(len(A) - ng, -1, -1):
        c = rem[i + ng - 1]
        if not c:
            continue
        f, r = divmod(c, lead)
        if r:
            return None
        out[i] = f
        for j, gc in enumerate(G):
            rem[i + j] -= f * gc
    if any(rem):
        return None
    return out


def reduce_fraction_poly(num, den):
    """num/den over QQ in lowest terms with monic denominator, computed on
    integer coefficients; returns the pair (num', den') of UniPoly."""
    ctx = num.ctx
    if num.is_zero():
        return num, UniPoly.one(ctx)
    A, da = _qq_int_parts(num)
    B, db = _qq_int_parts(den)
    ca, cb = _int_content(A), _int_content(B)
    A = [c // ca for c in A]
    B = [c // cb for c in B]
    G, qa, qb = _int_poly_gcd_cof(A, B)
    if len(G) > 1:
        A, B = qa, qb
    lb = B[-1]
    s = _make_fraction(ca * db, cb * da * lb)
    num_p = UniPoly(ctx, [_make_fraction(c * s.numerator, s.denominator)
                          for c in A])
    den_p = UniPoly(ctx, [_make_fraction(c, lb) for c in B])
    return num_p, den_p


def _int_coeffs(p):
    """Coefficients of p cleared to primitive integers, ascending."""
    if p.is_zero():
        return []
    return _int_primitive(_qq_int_parts(p)[0])


def _int_content(coeffs):
    content = _mpz(0)
    for c in coeffs:
        if c:
            content = _gcd_big(content, c)
            if content == 1:
                break
    return content


def _int_primitive(coeffs):
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return []
    content = _int_content(coeffs)
    if content == 1:
        return coeffs
    return [c // content for c in coeffs]


def _int_pseudo_rem(A, B):
    """Integer pseudo-remainder of A by B in the main variable; exact."""
    lead = B[-1]
    A = list(A)
    while len(A) >= len(B):
        if A[-1] == 0:
            A.pop()
            continue
        shift = len(A) - len(B)
        top = A[-1]
        A = [c * lead for c in A]
        for i, bc in enumerate(B):
            A[shift + i] -= top * bc
        while A and A[-1] == 0:
            A.pop()
    return A


def _gcd_over_ratfunc(a, b):
    """Gcd over the rational function field via a primitive pseudo-remainder
    sequence in the parameter-polynomial domain, avoiding the coefficient
    swell of naive Euclid."""
    A = _clear_to_param_polys(a)
    B = _clear_to_param_polys(b)
    while B:
        R = _pseudo_rem(A, B)
        A, B = B, _primitive(R)
    result = UniPoly(a.ctx, [a.ctx.coerce(c) for c in A])
    return result.monic()


def _clear_to_param_polys(p):
    """Coefficients of p as parameter polynomials (denominators cleared),
    made primitive; ascending, trailing zeros stripped."""
    if p.is_zero():
        return []
    from .fields import QQ
    lcm = UniPoly.one(QQ)
    for c in p.coeffs:
        if c:
            g = poly_gcd(lcm, c.den) if c.den.degree > 0 else UniPoly.one(QQ)
            lcm = lcm * (c.den / g)
    out = []
    for c in p.coeffs:
        out.append(c.num * (lcm / c.den) if c else UniPoly.zero(QQ))
    return _primitive(out)


def _primitive(coeffs):
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    if not coeffs:
        return []
    content = None
    for c in coeffs:
        if c.is_zero():
            continue
        content = c.monic() if content is None else poly_gcd(content, c)
        if content.degree == 0:
            break
    return [c / content for c in coeffs]


def _pseudo_rem(A, B):
    """Pseudo-remainder of A by B in the X variable, parameter-poly
    coefficients; exact, no fractions introduced."""
    lead = B[-1]
    A = list(A)
    while len(A) >= len(B):
        if A[-1].is_zero():
            A.pop()
            continue
        shift = len(A) - len(B)
        top = A[-1]
        A = [c * lead for c in A]
        for i, bc in enumerate(B):
            A[shift + i] = A[shift + i] - top * bc
        while A and A[-1].is_zero():
            A.pop()
    return A


def poly_ext_gcd(a, b):
    """Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic."""
    ctx = a.ctx
    r0, r1 = a, b
    u0, u1 = UniPoly.one(ctx), UniPoly.zero(ctx)
    v0, v1 = UniPoly.zero(ctx), UniPoly.one(ctx)
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero():
        raise ZeroPolynomial("extended gcd of two zero polynomials")
    lead = r0.lead
    return r0 / lead, u0 / lead, v0 / lead


def inv_mod(a, m):
    """Inverse of a modulo m; requires gcd(a, m) = 1."""
    g, u, _ = poly_ext_gcd(a, m)
    if g.degree != 0:
        raise ValueError("element is not invertible modulo m")
    return u % m


def is_squarefree(d):
    """True iff gcd(d, d') is constant."""
    if d.is_zero():
        raise ZeroPolynomial("squarefree test of the zero polynomial")
    if d.degree == 0:
        return True
    return poly_gcd(d, d.derivative()).degree == 0


def poly_sqrt(p):
    """Exact square root of a polynomial, or None if p is not a square."""
    if p.is_zero():
        return UniPoly.zero(p.ctx)
    if p.degree % 2 != 0:
        return None
    ctx = p.ctx
    lead_root = ctx.sqrt(p.lead)
    if lead_root is None:
        return None
    d = p.degree // 2
    c = [ctx.zero] * (d + 1)
    c[d] = lead_root
    two_lead = lead_root + lead_root
    for e in range(2 * d - 1, d - 1, -1):
        k = e - d
        s = p.coefficient(e)
        for i in range(k + 1, d):
            j = e - i
            if d > j > k:
                s = s - c[i] * c[j]
        c[k] = s / two_lead
    root = UniPoly(ctx, c)
    if root * root == p:
        return root
    return None


def resultant(f, g):
    """Resultant of f and g via the Euclidean remainder sequence."""
    ctx = f.ctx
    if f.is_zero() or g.is_zero():
        return ctx.zero
    sign = ctx.one
    res = ctx.one
    while g.degree > 0:
        r = f % g
        if r.is_zero():
            return ctx.zero
        lg = g.lead
        exp = f.degree - r.degree
        fac = ctx.one
        for _ in range(exp):
            fac = fac * lg
        res = res * fac
        if (f.degree * g.degree) % 2 == 1:
            sign = -sign
        f, g = g, r
    fac = ctx.one
    for _ in range(f.degree):
        fac = fac * g.lead
    return sign * res * fac


def discriminant(f):
    """disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f)."""
    n = f.degree
    if n < 1:
        raise ZeroPolynomial("discriminant needs positive degree")
    r = resultant(f, f.derivative())
    r = r / f.lead
    if (n * (n - 1) // 2) % 2 == 1:
        r = -r
    return r


def rational_roots(p):
    """Roots of p lying in QQ, with multiplicities, as a list of pairs.

    Only valid for polynomials over the rational field.
    """
    from fractions import Fraction

    if p.is_zero():
        raise ZeroPolynomial("root extraction from the zero polynomial")
    # Clear denominators to integer coefficients.
    dens = [c.denominator for c in p.coeffs]
    lcm = 1
    for d in dens:
        g = _gcd_int(lcm, d)
        lcm = lcm // g * d
    ints = [int(c * lcm) for c in p.coeffs]
    while ints and ints[0] == 0:
        ints.pop(0)
    # Trailing zero coefficients stripped above correspond to root 0.
    roots = []
    shift = len(p.coeffs) - len(ints)
    if shift:
        roots.append((Fraction(0), shift))
        q = p
        for _ in range(shift):
            q = q // UniPoly.x(p.ctx)
    else:
        q = p
    if not ints or len(ints) == 1:
        return roots
    a0, an = abs(ints[0]), abs(ints[-1])
    candidates = set()
    for num in _divisors(a0):
        for den in _divisors(an):
            if _gcd_int(num, den) == 1:
                candidates.add(Fraction(num, den))
                candidates.add(Fraction(-num, den))
    x = UniPoly.x(p.ctx)
    for cand in sorted(candidates):
        if q(cand) == 0:
            mult = 0
            lin = x - UniPoly.constant(p.ctx, cand)
            while True:
                quo, rem = poly_divmod(q, lin)
                if not rem.is_zero():
                    break
                q = quo
                mult += 1
            roots.append((cand, mult))
    return roots


def _gcd_int(a, b):
    return math.gcd(a, b)


def _divisors(n):
    if n == 0:
        return [1]
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return out
