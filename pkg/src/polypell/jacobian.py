"""Principality decisions on the Jacobian of Y^2 = D(X).

A degree-zero divisor is principal exactly when some function
(R + Y*S) / prod u_j(X)^{k_j} has that divisor.  The search clears finite
poles with x-polynomial multipliers, bounds the ansatz degrees by the
resulting pole orders at infinity, imposes the local vanishing conditions as
exact linear equations on the coefficients of R and S, and solves for the
kernel.  Every candidate is re-verified by recomputing its divisor from
scratch; by Riemann-Roch the solution space has dimension at most one, which
is asserted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import (Cluster, Divisor, FinitePoint, INF_MINUS, INF_PLUS,
                    InfPoint, PairCluster, divisors_equal, involution,
                    lift_branch)
from .errors import (BudgetExceeded, InternalVerificationFailure,
                     UnsupportedSupport)
from .fields import QuadElem
from .linalg import hermite_normal_form, nullspace
from .poly import UniPoly


@dataclass(frozen=True)
class PrincipalityCertificate:
    """A function with the requested divisor: (R + Y*S) / prod u^k."""

    R: UniPoly
    S: UniPoly
    denominator: tuple  # ((u or x, k), ...)
    divisor: Divisor


def is_principal(curve, div, hints=()):
    """Decide whether the degree-zero divisor is principal.

    Returns a PrincipalityCertificate, or None when the class is nonzero.
    """
    if div.degree() != 0:
        raise ValueError("principality is defined for degree-zero divisors")
    if div.is_zero():
        one = UniPoly.one(curve.ctx)
        return PrincipalityCertificate(one, UniPoly.zero(curve.ctx), (), div)
    work_ctx = _working_field(curve, div)
    den, cleared = _clear_finite_poles(curve, div)
    o_plus = cleared.get(INF_PLUS)
    o_minus = cleared.get(INF_MINUS)
    d = curve.half_degree
    nmax = max(-o_plus, -o_minus)
    if nmax < 0:
        return None
    n_r = nmax + 1
    n_s = max(0, nmax - d + 1)
    ncols = n_r + n_s
    rows = []
    rows.extend(_infinity_rows(curve, work_ctx, n_r, n_s, o_plus, o_minus))
    for point, mult in cleared.items():
        if isinstance(point, InfPoint) or mult <= 0:
            continue
        rows.extend(_finite_rows(curve, work_ctx, point, mult, n_r, n_s))
    kernel = nullspace(rows, ncols, work_ctx)
    if not kernel:
        return None
    if len(kernel) > 1:
        raise InternalVerificationFailure(
            "principality system has kernel dimension > 1")
    vec = kernel[0]
    R = UniPoly(work_ctx, vec[:n_r])
    S = UniPoly(work_ctx, vec[n_r:])
    support_hints = tuple(hints) + _support_hints(div)
    check = curve.divisor_of_function(R, S, denominator=den,
                                      hints=support_hints)
    if not divisors_equal(curve, check, div):
        raise InternalVerificationFailure(
            "candidate function does not have the requested divisor")
    return PrincipalityCertificate(R, S, tuple(den), div)


def order_of_class(curve, div, bound, hints=()):
    """Smallest k in 1..bound with k*div principal, with its certificate.

    Returns (k, certificate) or None when no multiple in range is principal.
    """
    for k in range(1, bound + 1):
        cert = is_principal(curve, k * div, hints=hints)
        if cert is not None:
            return k, cert
    return None


def relation_lattice(curve, points, coefficient_bounds, l_bound,
                     budget=None, hints=(), cache=None):
    """All relations sum_i e_i * P_i + l * Q = 0 in the Jacobian inside the
    box |e_i| <= coefficient_bounds[i], |l| <= l_bound, where Q is the class
    of inf+ - inf-.

    Returns (relations, basis): the list of relation vectors (e_1..e_h, l)
    found in the box, and a Hermite normal form basis of the lattice they
    span.  ``budget`` caps the number of principality tests.
    """
    q_div = curve.infinity_difference()
    found = [[0] * (len(points) + 1)]
    tested = 0
    cache = {} if cache is None else cache
    for vec in _box_vectors(list(coefficient_bounds) + [l_bound]):
        key = tuple(vec)
        if key in cache:
            principal = cache[key]
        else:
            if budget is not None and tested >= budget:
                raise BudgetExceeded(
                    f"relation search exceeded {budget} principality tests")
            tested += 1
            div = Divisor()
            for e, p in zip(vec, points):
                if e:
                    div = div + e * p
            if vec[-1]:
                div = div + vec[-1] * q_div
            principal = is_principal(curve, div, hints=hints) is not None
            cache[key] = principal
            cache[tuple(-c for c in key)] = principal
        if principal:
            found.append(list(vec))
            found.append([-c for c in vec])
    basis = hermite_normal_form(found)
    nontrivial = [v for v in found if any(v)]
    return nontrivial, basis


def _box_vectors(bounds):
    """Nonzero vectors in the box with positive leading nonzero entry,
    in lexicographic order."""

    def rec(i):
        if i == len(bounds):
            yield []
            return
        for c in range(-bounds[i], bounds[i] + 1):
            for rest in rec(i + 1):
                yield [c] + rest

    for v in rec(0):
        for c in v:
            if c > 0:
                yield v
                break
            if c < 0:
                break


# -- internals -------------------------------------------------------------


def _working_field(curve, div):
    ext = None
    for point, _m in div.items():
        ys = []
        if isinstance(point, FinitePoint):
            ys = [point.x, point.y]
        for v in ys:
            if isinstance(v, QuadElem):
                if ext is None:
                    ext = v.field
                elif ext != v.field:
                    raise UnsupportedSupport(
                        "divisor spans two distinct quadratic extensions")
    return ext if ext is not None else curve.ctx


def _clear_finite_poles(curve, div):
    """Multiply by x-polynomials until the finite part is effective.

    Returns (denominator list, cleared divisor).
    """
    den = []
    cleared = div
    handled = set()
    for point, mult in div.items():
        if isinstance(point, InfPoint) or point in handled:
            continue
        conj = involution(point)
        handled.add(point)
        handled.add(conj)
        m_conj = div.get(conj) if conj != point else mult
        if isinstance(point, FinitePoint):
            if point.is_weierstrass():
                k = (-mult + 1) // 2 if mult < 0 else 0
            else:
                k = max(0, -mult, -m_conj)
            place = point.x
        elif isinstance(point, Cluster):
            if point.is_weierstrass():
                k = (-mult + 1) // 2 if mult < 0 else 0
            else:
                k = max(0, -mult, -m_conj)
            place = point.u
        elif isinstance(point, PairCluster):
            k = max(0, -mult)
            place = point.u
        else:
            raise UnsupportedSupport(f"unknown point type {point!r}")
        if k > 0:
            den.append((place, k))
            if isinstance(place, UniPoly):
                cleared = cleared + k * curve.divisor_of_x_polynomial(place)
            else:
                cleared = cleared + k * curve.divisor_of_linear(place)
    for point, mult in cleared.items():
        if not isinstance(point, InfPoint):
            assert mult >= 0
    return den, cleared


def _coerce_poly_to(p, ctx):
    if p.ctx == ctx:
        return p
    return UniPoly(ctx, [ctx.coerce(c) for c in p.coeffs])


def _infinity_rows(curve, ctx, n_r, n_s, o_plus, o_minus):
    """Rows forcing top(R - s*S) <= -o_plus and top(R + s*S) <= -o_minus."""
    d = curve.half_degree
    nmax = n_r - 1
    low = min(-o_plus, -o_minus) + 1
    prec = low - max(0, n_s - 1) - 2
    s = curve.branch_series(min(prec, -1))
    zero = ctx.zero
    rows = []
    for sign, bound in ((-1, -o_plus), (1, -o_minus)):
        for e in range(nmax, bound, -1):
            row = [zero] * (n_r + n_s)
            if 0 <= e < n_r:
                row[e] = ctx.one
            for j in range(n_s):
                c = ctx.coerce(s.coefficient(e - j))
                if sign < 0:
                    c = -c
                row[n_r + j] = c
            rows.append(row)
    return rows


def _finite_rows(curve, ctx, point, mult, n_r, n_s):
    """Rows forcing ord(R + Y*S) >= mult at the given point or cluster."""
    d_here = _coerce_poly_to(curve.D, ctx)
    x_poly = UniPoly.x(ctx)
    if isinstance(point, FinitePoint):
        lin = x_poly - UniPoly.constant(ctx, ctx.coerce(point.x))
        if point.is_weierstrass():
            return _parity_rows(ctx, lin, mult, n_r, n_s)
        modulus = lin ** mult
        y = lift_branch(d_here, lin,
                        UniPoly.constant(ctx, ctx.coerce(point.y)), mult)
        return _branch_rows(ctx, modulus, y, n_r, n_s)
    if isinstance(point, Cluster):
        u = _coerce_poly_to(point.u, ctx)
        if point.is_weierstrass():
            return _parity_rows(ctx, u, mult, n_r, n_s)
        modulus = u ** mult
        y = lift_branch(d_here, u, _coerce_poly_to(point.r, ctx), mult)
        return _branch_rows(ctx, modulus, y, n_r, n_s)
    if isinstance(point, PairCluster):
        u = _coerce_poly_to(point.u, ctx)
        m = u ** mult
        rows = []
        rows.extend(_divisibility_rows(ctx, m, 0, n_r, n_r + n_s))
        rows.extend(_divisibility_rows(ctx, m, n_r, n_s, n_r + n_s))
        return rows
    raise UnsupportedSupport(f"unknown point type {point!r}")


def _parity_rows(ctx, u, mult, n_r, n_s):
    """Weierstrass place u: u^ceil(c/2) | R and u^ceil((c-1)/2) | S."""
    rows = []
    k_r = (mult + 1) // 2
    k_s = mult // 2
    if k_r:
        rows.extend(_divisibility_rows(ctx, u ** k_r, 0, n_r, n_r + n_s))
    if k_s:
        rows.extend(_divisibility_rows(ctx, u ** k_s, n_r, n_s, n_r + n_s))
    return rows


def _divisibility_rows(ctx, modulus, offset, ncoef, ncols):
    """Rows expressing modulus | (polynomial with unknown coefficients at
    columns offset..offset+ncoef-1)."""
    rows = {}
    for j in range(ncoef):
        rem = (UniPoly.x(ctx) ** j) % modulus
        for e in range(modulus.degree):
            c = rem.coefficient(e)
            if c != ctx.zero:
                rows.setdefault(e, [ctx.zero] * ncols)[offset + j] = c
    return list(rows.values())


def _branch_rows(ctx, modulus, y, n_r, n_s):
    """Rows expressing modulus | (R + y*S)."""
    rows = {e: [ctx.zero] * (n_r + n_s) for e in range(modulus.degree)}
    for j in range(n_r):
        rem = (UniPoly.x(ctx) ** j) % modulus
        for e in range(modulus.degree):
            c = rem.coefficient(e)
            if c != ctx.zero:
                rows[e][j] = c
    for j in range(n_s):
        rem = (y * UniPoly.x(ctx) ** j) % modulus
        for e in range(modulus.degree):
            c = rem.coefficient(e)
            if c != ctx.zero:
                rows[e][n_r + j] = c
    return [r for r in rows.values() if any(c != ctx.zero for c in r)]


def _support_hints(div):
    xs = []
    for point, _m in div.items():
        if isinstance(point, FinitePoint) and not isinstance(point.x, QuadElem):
            if point.x not in xs:
                xs.append(point.x)
    return tuple(xs)
