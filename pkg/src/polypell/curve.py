"""The nonsingular hyperelliptic model of Y^2 = D(X) with two points at
infinity, its points and divisors, and exact divisors of functions R + Y*S.

Branch convention: the plus point at infinity is the branch on which Y
expands as minus the canonical series root s of D.  Hence
ord at inf+ of (R + Y*S) = -top(R - s*S) and ord at inf- = -top(R + s*S);
the two tops always satisfy top(R - s*S) + top(R + s*S) = deg(R^2 - D*S^2),
which is used to pin cancellations exactly.

Finite support is tracked three ways: explicit points with coordinates in
the base field or in one quadratic extension, conjugation-closed clusters
(u, r) of the points (alpha, r(alpha)) over the roots of a squarefree u
coprime to D, and symmetric pairs (both points above every root of u).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (LeadingCoefficientNotASquare, NotSquarefree, OddDegree,
                     UnsupportedSupport, ZeroFunction)
from .fields import QuadElem, QuadraticExtensionField, RationalField
from .laurent import LaurentSeries, sqrt_series
from .poly import (UniPoly, inv_mod, is_squarefree, poly_divmod, poly_gcd,
                   rational_roots)

_BIG = 1 << 30  # stand-in for the order of the zero polynomial


@dataclass(frozen=True)
class InfPoint:
    sign: int  # +1 or -1

    @property
    def place_degree(self):
        return 1

    def __repr__(self):
        return "inf+" if self.sign > 0 else "inf-"


INF_PLUS = InfPoint(1)
INF_MINUS = InfPoint(-1)


@dataclass(frozen=True)
class FinitePoint:
    x: object
    y: object  # base element or QuadElem; 0 at Weierstrass points

    @property
    def place_degree(self):
        return 1

    def is_weierstrass(self):
        if isinstance(self.y, QuadElem):
            return not self.y
        return self.y == 0 or not self.y

    def __repr__(self):
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class Cluster:
    """The points (alpha, r(alpha)) over the roots of a squarefree monic u.

    r is reduced mod u and satisfies r^2 = D mod u; the Weierstrass flavor
    has u | D and r = 0.
    """

    u: UniPoly
    r: UniPoly

    @property
    def place_degree(self):
        return self.u.degree

    def is_weierstrass(self):
        return self.r.is_zero()

    def __repr__(self):
        return f"Cluster({self.u!r}, {self.r!r})"


@dataclass(frozen=True)
class PairCluster:
    """Both points above every root of a squarefree monic u coprime to D."""

    u: UniPoly

    @property
    def place_degree(self):
        return 2 * self.u.degree

    def __repr__(self):
        return f"PairCluster({self.u!r})"


class Divisor:
    """Formal integer combination of curve points."""

    __slots__ = ("support",)

    def __init__(self, support=None):
        self.support = {}
        if support:
            for pt, m in (support.items() if isinstance(support, dict) else support):
                if m:
                    self.support[pt] = self.support.get(pt, 0) + m
            self.support = {p: m for p, m in self.support.items() if m}

    def degree(self):
        return sum(m * p.place_degree for p, m in self.support.items())

    def get(self, pt):
        return self.support.get(pt, 0)

    def items(self):
        return self.support.items()

    def is_zero(self):
        return not self.support

    def __add__(self, other):
        out = dict(self.support)
        for p, m in other.support.items():
            out[p] = out.get(p, 0) + m
        return Divisor(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Divisor({p: -m for p, m in self.support.items()})

    def __rmul__(self, k):
        return Divisor({p: k * m for p, m in self.support.items()})

    __mul__ = __rmul__

    def __eq__(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        return self.support == other.support

    def __hash__(self):
        return hash(frozenset(self.support.items()))

    def __repr__(self):
        return f"Divisor({self.support!r})"


def involution(point):
    """The hyperelliptic involution Y -> -Y on points."""
    if isinstance(point, InfPoint):
        return InfPoint(-point.sign)
    if isinstance(point, FinitePoint):
        return FinitePoint(point.x, -point.y)
    if isinstance(point, Cluster):
        if point.r.is_zero():
            return point
        return Cluster(point.u, (-point.r) % point.u)
    if isinstance(point, PairCluster):
        return point
    raise TypeError(f"not a curve point: {point!r}")


def involution_divisor(div):
    return Divisor({involution(p): m for p, m in div.items()})


class HyperCurve:
    """Nonsingular model of Y^2 = D(X), deg D = 2d >= 4, genus d-1."""

    def __init__(self, D):
        if D.is_zero() or D.degree % 2 != 0:
            raise OddDegree("D must have positive even degree")
        if D.degree < 4:
            raise OddDegree("genus 0 models (deg D = 2) are not supported")
        if not is_squarefree(D):
            raise NotSquarefree("D must be squarefree")
        if D.ctx.sqrt(D.lead) is None:
            raise LeadingCoefficientNotASquare(
                "leading coefficient of D must be a square in the field")
        self.D = D
        self.ctx = D.ctx
        self.half_degree = D.degree // 2
        self.genus = self.half_degree - 1
        self._branch = None
        self._ext_cache = {}

    # -- series and extensions ------------------------------------------

    def branch_series(self, prec):
        """The canonical series root s of D, valid down to exponent prec."""
        if self._branch is None or (self._branch.prec is not None
                                    and self._branch.prec > prec):
            self._branch = sqrt_series(self.D, min(prec, -self.D.degree - 8))
        return self._branch

    def quad_ext(self, delta):
        key = delta
        if key not in self._ext_cache:
            self._ext_cache[key] = QuadraticExtensionField(self.ctx, delta)
        return self._ext_cache[key]

    # -- points -----------------------------------------------------------

    def points_above(self, x):
        """The one or two points with first coordinate x; the plus point
        carries the canonical square root of D(x)."""
        x = self.ctx.coerce(x)
        value = self.D(x)
        if not _nonzero(value):
            return (FinitePoint(x, self.ctx.zero),)
        root = self.ctx.sqrt(value)
        if root is not None:
            return (FinitePoint(x, root), FinitePoint(x, -root))
        ext = self.quad_ext(value)
        return (FinitePoint(x, ext.root), FinitePoint(x, -ext.root))

    def infinity_difference(self):
        """The divisor inf+ - inf-."""
        return Divisor({INF_PLUS: 1, INF_MINUS: -1})

    # -- divisors of x-polynomials ----------------------------------------

    def divisor_of_linear(self, x):
        """div(X - x)."""
        pts = self.points_above(x)
        sup = {INF_PLUS: -1, INF_MINUS: -1}
        if len(pts) == 1:
            sup[pts[0]] = 2
        else:
            sup[pts[0]] = 1
            sup[pts[1]] = 1
        return Divisor(sup)

    def divisor_of_x_polynomial(self, p, hints=()):
        """Exact divisor of a nonzero polynomial in X alone."""
        if p.is_zero():
            raise ZeroFunction("the zero function has no divisor")
        work = p.monic()
        div = Divisor()
        deg_total = p.degree
        for x in _candidate_roots(work, work.ctx, hints):
            m = _multiplicity(work, x)
            if m:
                lin = UniPoly.x(work.ctx) - UniPoly.constant(work.ctx, x)
                for _ in range(m):
                    work = work / lin
                div = div + m * self.divisor_of_linear(x)
        if work.degree > 0:
            residual = work.monic()
            if not is_squarefree(residual):
                raise UnsupportedSupport(
                    "repeated non-rational factor in an x-polynomial")
            d_here = _coerce_poly(self.D, residual.ctx)
            g = poly_gcd(residual, d_here)
            if g.degree == residual.degree:
                div = div + Divisor({
                    Cluster(residual, UniPoly.zero(residual.ctx)): 2,
                    INF_PLUS: -residual.degree,
                    INF_MINUS: -residual.degree,
                })
            elif g.degree == 0:
                div = div + Divisor({
                    PairCluster(residual): 1,
                    INF_PLUS: -residual.degree,
                    INF_MINUS: -residual.degree,
                })
            else:
                raise UnsupportedSupport(
                    "non-rational factor mixing Weierstrass and ordinary points")
        assert div.degree() == 0
        return div

    # -- divisors of general functions --------------------------------------

    def divisor_of_function(self, R, S, denominator=(), hints=()):
        """Exact divisor of (R + Y*S) / prod (X - x_j)^{k_j}.

        ``denominator`` is a list of (x, k) pairs (or (poly, k) pairs);
        ``hints`` supplies candidate x-coordinates of zeros, needed over
        fields without rational root extraction.  Raises UnsupportedSupport
        if zeros live above places this representation cannot express.
        """
        if R.is_zero() and S.is_zero():
            raise ZeroFunction("R and S are both zero")
        work_ctx = R.ctx if not R.is_zero() else S.ctx
        hints = tuple(hints) + tuple(
            x for x, _k in denominator if not isinstance(x, UniPoly))
        div = self._divisor_of_numerator(R, S, work_ctx, hints)
        for x, k in denominator:
            if isinstance(x, UniPoly):
                div = div - k * self.divisor_of_x_polynomial(x, hints=hints)
            else:
                div = div - k * self.divisor_of_linear(x)
        assert div.degree() == 0
        return div

    def _divisor_of_numerator(self, R, S, ctx, hints):
        if S.is_zero():
            return self.divisor_of_x_polynomial(R, hints=hints)
        if R.is_zero():
            div_y = self._divisor_of_y(S.ctx, hints)
            return div_y + self.divisor_of_x_polynomial(S, hints=hints)
        g = poly_gcd(R, S)
        div = Divisor()
        if g.degree > 0:
            div = self.divisor_of_x_polynomial(g, hints=hints)
            R, S = R / g, S / g
        return div + self._divisor_of_primitive(R, S, hints)

    def _divisor_of_y(self, ctx, hints):
        """div(Y) = the Weierstrass points minus d*(inf+ + inf-)."""
        d_here = _coerce_poly(self.D, ctx)
        div = Divisor()
        work = d_here.monic()
        for x in _candidate_roots(work, ctx, hints):
            m = _multiplicity(work, x)
            if m:
                assert m == 1
                lin = UniPoly.x(ctx) - UniPoly.constant(ctx, x)
                work = work / lin
                div = div + Divisor({FinitePoint(x, ctx.zero): 1})
        if work.degree > 0:
            div = div + Divisor({Cluster(work, UniPoly.zero(ctx)): 1})
        div = div + Divisor({INF_PLUS: -self.half_degree,
                             INF_MINUS: -self.half_degree})
        assert div.degree() == 0
        return div

    def _divisor_of_primitive(self, R, S, hints):
        """Divisor of R + Y*S with gcd(R, S) = 1 and R, S both nonzero."""
        ctx = R.ctx
        d_here = _coerce_poly(self.D, ctx)
        norm = R * R - d_here * S * S
        if norm.is_zero():
            raise ZeroFunction("R^2 = D*S^2 is impossible for squarefree D")
        support = {}
        work = norm.monic()
        for x in _candidate_roots(work, ctx, hints):
            m = _multiplicity(work, x)
            if m == 0:
                continue
            lin = UniPoly.x(ctx) - UniPoly.constant(ctx, x)
            for _ in range(m):
                work = work / lin
            value = d_here(x)
            if not _nonzero(value):
                a = _BIG if R.is_zero() else _multiplicity(R, x)
                b = _BIG if S.is_zero() else _multiplicity(S, x)
                order = min(2 * a, 2 * b + 1)
                assert order == m
                support[FinitePoint(x, ctx.zero)] = order
            else:
                plus, minus = self._points_above_in(ctx, x, value)
                a_plus = self._branch_order(R, S, d_here, x, plus.y, m)
                support[plus] = a_plus
                support[minus] = m - a_plus
        if work.degree > 0:
            residual = work
            if not is_squarefree(residual):
                raise UnsupportedSupport(
                    "zero of multiplicity >= 2 above a non-rational place")
            if poly_gcd(residual, d_here).degree > 0:
                raise UnsupportedSupport(
                    "zero above a non-rational Weierstrass place")
            s_mod = S % residual
            g, sinv, _ = _try_inverse(s_mod, residual)
            if g is None:
                raise UnsupportedSupport(
                    "branch of a non-rational zero is not expressible")
            r = (-(R % residual) * sinv) % residual
            support[Cluster(residual, r)] = 1
        t_plus, t_minus = self.infinity_tops(R, S)
        div = Divisor(support) + Divisor({INF_PLUS: -t_plus,
                                          INF_MINUS: -t_minus})
        assert div.degree() == 0
        return div

    def _points_above_in(self, ctx, x, value):
        """Plus/minus points above x when D(x) = value != 0, for functions
        with coefficients in ctx (the base field or one extension of it)."""
        root = ctx.sqrt(value)
        if root is not None:
            return FinitePoint(x, root), FinitePoint(x, -root)
        if ctx == self.ctx:
            ext = self.quad_ext(value)
            return FinitePoint(x, ext.root), FinitePoint(x, -ext.root)
        raise UnsupportedSupport(
            "zero above a second quadratic extension of the base field")

    def _branch_order(self, R, S, d_here, x, y0, m):
        """ord of R + Y*S at the point (x, y0), bounded above by m."""
        ctx = R.ctx
        lin = UniPoly.x(ctx) - UniPoly.constant(ctx, x)
        modulus = lin ** (m + 1)
        if isinstance(y0, QuadElem):
            ext = y0.field
            r_ext = _coerce_poly(R, ext)
            s_ext = _coerce_poly(S, ext)
            d_ext = _coerce_poly(d_here, ext)
            lin_e = UniPoly.x(ext) - UniPoly.constant(ext, ext.coerce(x))
            mod_e = lin_e ** (m + 1)
            y = lift_branch(d_ext, lin_e, UniPoly.constant(ext, y0), m + 1)
            val = (r_ext + y * s_ext) % mod_e
            order = _multiplicity(val, ext.coerce(x)) if not val.is_zero() else m + 1
        else:
            y = lift_branch(d_here, lin, UniPoly.constant(ctx, y0), m + 1)
            val = (R + y * S) % modulus
            order = _multiplicity(val, x) if not val.is_zero() else m + 1
        assert order <= m
        return order

    def infinity_tops(self, R, S):
        """(top(R - s*S), top(R + s*S)), exact via the norm identity."""
        ctx = R.ctx if not R.is_zero() else S.ctx
        d_here = _coerce_poly(self.D, ctx)
        if S.is_zero():
            return R.degree, R.degree
        if R.is_zero():
            t = self.half_degree + S.degree
            return t, t
        norm_deg = (R * R - d_here * S * S).degree
        max_top = max(R.degree, S.degree + self.half_degree)
        prec = norm_deg - max_top - 1
        s = self.branch_series(prec - S.degree - 1)
        if ctx != self.ctx:
            s = LaurentSeries(ctx, s.top, [ctx.coerce(c) for c in s.coeffs],
                              s.prec)
        s_S = s * LaurentSeries.from_poly(S)
        r_series = LaurentSeries.from_poly(R)
        minus = (r_series - s_S).truncate(prec)
        plus = (r_series + s_S).truncate(prec)
        if not minus.is_zero_to_precision():
            t_plus = minus.top
            t_minus = norm_deg - t_plus
            if not plus.is_zero_to_precision():
                assert plus.top == t_minus
            return t_plus, t_minus
        if not plus.is_zero_to_precision():
            t_minus = plus.top
            return norm_deg - t_minus, t_minus
        raise AssertionError("both branches vanished beyond provable depth")


def normalize_divisor(curve, div, extra_moduli=()):
    """Canonical support representation of a divisor.

    Cluster moduli from different computations may factor the same places
    differently (one degree-12 cluster versus two degree-6 ones).  This
    splits all moduli against a gcd-closed basis (refined further by
    ``extra_moduli``, e.g. the moduli of a divisor being compared against),
    extracts rational places as explicit points, and merges conjugate
    cluster pairs into PairClusters, so equal divisors become syntactically
    equal.
    """
    base = curve.ctx
    basis = []
    for u in list(_cluster_moduli(div)) + list(extra_moduli):
        _insert_modulus(basis, _maybe_lower(u.monic(), base))
    support = {}

    def add(pt, m):
        support[pt] = support.get(pt, 0) + m

    for point, m in div.items():
        if isinstance(point, Cluster):
            u = _maybe_lower(point.u, base)
            r = _maybe_lower(point.r, base)
            for w in basis:
                if _mixed_mod(u, w).is_zero():
                    part = _maybe_lower(_mixed_mod(r, w), base)
                    _add_cluster_part(curve, add, w, part, m)
        elif isinstance(point, PairCluster):
            u = _maybe_lower(point.u, base)
            for w in basis:
                if _mixed_mod(u, w).is_zero():
                    _add_pair_part(curve, add, w, m)
        else:
            add(_lower_point(point, base), m)
    # merge conjugate ordinary clusters into pairs
    for point in list(support):
        if not isinstance(point, Cluster) or point.is_weierstrass():
            continue
        conj = involution(point)
        if conj == point or conj not in support:
            continue
        k = min(support.get(point, 0), support.get(conj, 0))
        if k > 0:
            support[point] -= k
            support[conj] -= k
            add(PairCluster(point.u), k)
    return Divisor(support)


def divisors_equal(curve, a, b):
    """Equality of divisors up to the representation of their support."""
    if a == b:
        return True
    mods_a = _cluster_moduli(a)
    mods_b = _cluster_moduli(b)
    return normalize_divisor(curve, a, mods_b) == \
        normalize_divisor(curve, b, mods_a)


def _cluster_moduli(div):
    return tuple(p.u for p in div.support
                 if isinstance(p, (Cluster, PairCluster)))


def _maybe_lower(p, base):
    """p over the base field when every coefficient descends, else p."""
    if p.ctx == base:
        return p
    coeffs = []
    for c in p.coeffs:
        if isinstance(c, QuadElem) and not c.b:
            coeffs.append(c.a)
        else:
            return p
    return UniPoly(base, coeffs)


def _lower_elem(v):
    if isinstance(v, QuadElem) and not v.b:
        return v.a
    return v


def _lower_point(point, base):
    if isinstance(point, FinitePoint):
        return FinitePoint(_lower_elem(point.x), _lower_elem(point.y))
    return point


def _common_ctx(a, b):
    if a.ctx == b.ctx:
        return a, b
    if isinstance(a.ctx, QuadraticExtensionField):
        if isinstance(b.ctx, QuadraticExtensionField):
            return None, None  # distinct extensions never share factors
        return a, _coerce_poly(b, a.ctx)
    return _coerce_poly(a, b.ctx), b


def _mixed_gcd(u, v):
    a, b = _common_ctx(u, v)
    if a is None:
        return None
    return poly_gcd(a, b)


def _mixed_mod(u, w):
    a, b = _common_ctx(u, w)
    if a is None:
        return u  # incomparable: treat as nonzero remainder
    return a % b


def _mixed_div(u, g):
    a, b = _common_ctx(u, g)
    return (a / b).monic()


def _insert_modulus(basis, u):
    """Refine the gcd-closed basis of squarefree moduli with u."""
    for v in list(basis):
        if u.degree == 0:
            return
        g = _mixed_gcd(u, v)
        if g is None or g.degree == 0:
            continue
        if g.degree < v.degree:
            basis.remove(v)
            _insert_modulus(basis, g)
            _insert_modulus(basis, _mixed_div(v, g))
        u = _mixed_div(u, g)
    if u.degree > 0:
        basis.append(u)


def _add_cluster_part(curve, add, w, r, m):
    if w.degree == 1:
        x = -w.coefficient(0)
        y = r(x)
        if not _nonzero(y):
            y = w.ctx.zero
        add(FinitePoint(x, y), m)
    else:
        add(Cluster(w, r), m)


def _add_pair_part(curve, add, w, m):
    if w.degree == 1:
        x = -w.coefficient(0)
        for pt in curve.points_above(x):
            add(pt, m)
        if len(curve.points_above(x)) == 1:
            add(curve.points_above(x)[0], m)  # Weierstrass counts twice
    else:
        add(PairCluster(w), m)


def lift_branch(D, u, r0, k):
    """The branch of Y above the place u: y with y^2 = D mod u^k and
    y = r0 mod u, via Newton lifting.  Requires gcd(2*r0, u) = 1."""
    ctx = D.ctx
    y = r0 % u
    prec = 1
    while prec < k:
        prec = min(2 * prec, k)
        modulus = u ** prec
        inv = inv_mod((y + y) % modulus, modulus)
        y = ((y * y + D) * inv) % modulus
    return y


def _coerce_poly(p, ctx):
    if p.ctx == ctx:
        return p
    return UniPoly(ctx, [ctx.coerce(c) for c in p.coeffs])


def _nonzero(c):
    if isinstance(c, QuadElem):
        return bool(c)
    return bool(c) if not isinstance(c, (int,)) else c != 0


def _multiplicity(p, x):
    """Multiplicity of the root x in p (0 if not a root)."""
    ctx = p.ctx
    lin = UniPoly.x(ctx) - UniPoly.constant(ctx, ctx.coerce(x))
    m = 0
    while True:
        q, r = poly_divmod(p, lin)
        if not r.is_zero():
            return m
        p = q
        m += 1
        if p.is_zero():
            return m


def _candidate_roots(p, ctx, hints):
    seen = []
    if isinstance(ctx, RationalField):
        for x, _m in rational_roots(p):
            seen.append(x)
    for x in hints:
        # over a quadratic extension keep hints as base-field values, so the
        # points they produce match the base representation of the divisor
        if not isinstance(ctx, QuadraticExtensionField):
            x = ctx.coerce(x)
        if x not in seen:
            seen.append(x)
    return seen


def _try_inverse(a, m):
    from .poly import poly_ext_gcd
    if a.is_zero():
        return None, None, None
    g, u, v = poly_ext_gcd(a, m)
    if g.degree != 0:
        return None, None, None
    return g, u % m, v
