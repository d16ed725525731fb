"""Exact linear algebra: kernels via fraction-free elimination, and Hermite
normal form for integer relation lattices.

Matrices over QQ are cleared to integers and eliminated with the Bareiss
scheme; matrices over QQ(t) are cleared to polynomials in the parameter and
eliminated the same way (the Bareiss divisions stay exact in the domain).
Quadratic-extension matrices fall back to plain field elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .fields import (QQ, QuadElem, QuadraticExtensionField, RatFunc,
                     RationalField, RationalFunctionField)
from .poly import UniPoly, poly_divmod


def nullspace(rows, ncols, ctx):
    """Basis of the right kernel of the matrix given by ``rows``.

    Empty rows are allowed; returns a list of kernel vectors with entries in
    ``ctx``.
    """
    rows = [r for r in rows if any(_nz(c) for c in r)]
    if not rows:
        return [_unit_vector(ctx, ncols, j) for j in range(ncols)]
    if isinstance(ctx, RationalField):
        domain_rows = [_clear_row_qq(r) for r in rows]
        ech, pivots = _bareiss_echelon(domain_rows, ncols,
                                       lambda a, b: a // b, lambda a: a == 0)
        return _kernel_from_echelon(ech, pivots, ncols, ctx,
                                    lambda a: Fraction(a))
    if isinstance(ctx, RationalFunctionField):
        domain_rows = [_clear_row_qqt(r) for r in rows]
        ech, pivots = _bareiss_echelon(domain_rows, ncols, _poly_exact_div,
                                       lambda a: a.is_zero())
        return _kernel_from_echelon(ech, pivots, ncols, ctx,
                                    lambda a: RatFunc(a))
    if isinstance(ctx, QuadraticExtensionField) and isinstance(
            ctx.base, (RationalField, RationalFunctionField)):
        return _ext_nullspace(rows, ncols, ctx)
    return _field_kernel(rows, ncols, ctx)


def _ext_nullspace(rows, ncols, ctx):
    """Kernel over a quadratic extension via a doubled base-field system.

    An unknown z_j = u_j + v_j*sqrt(delta) and an entry c = c0 + c1*sqrt(delta)
    contribute c*z_j = (c0*u_j + delta*c1*v_j) + (c1*u_j + c0*v_j)*sqrt(delta),
    so each extension row becomes two base rows over the 2*ncols base
    unknowns.  The base kernel is the extension kernel viewed as a base
    space (twice the dimension); an extension basis is extracted from it.
    """
    base = ctx.base
    delta = ctx.delta
    base_rows = []
    for row in rows:
        real = []
        imag = []
        for c in row:
            c = ctx.coerce(c)
            real.extend([c.a, delta * c.b])
            imag.extend([c.b, c.a])
        base_rows.append(real)
        base_rows.append(imag)
    base_kernel = nullspace(base_rows, 2 * ncols, base)
    candidates = []
    for vec in base_kernel:
        candidates.append([QuadElem(vec[2 * j], vec[2 * j + 1], ctx)
                           for j in range(ncols)])
    return _independent_over(candidates, ctx)


def _independent_over(vectors, ctx):
    """Greedy extraction of a maximal linearly independent subset."""
    basis = []
    reduced = []
    for v in vectors:
        w = list(v)
        for r in reduced:
            lead = next(j for j, c in enumerate(r) if _nz(c))
            if _nz(w[lead]):
                f = w[lead] / r[lead]
                w = [a - f * b for a, b in zip(w, r)]
        if any(_nz(c) for c in w):
            reduced.append(w)
            basis.append(v)
    return basis


def _nz(c):
    if isinstance(c, (UniPoly,)):
        return not c.is_zero()
    if isinstance(c, (RatFunc, QuadElem)):
        return bool(c)
    return c != 0


def _unit_vector(ctx, n, j):
    v = [ctx.zero] * n
    v[j] = ctx.one
    return v


def _clear_row_qq(row):
    lcm = 1
    for c in row:
        d = c.denominator
        lcm = lcm // gcd(lcm, d) * d
    return [int(c * lcm) for c in row]


def _clear_row_qqt(row):
    den = UniPoly.one(QQ)
    for c in row:
        if not c:
            continue
        q, r = poly_divmod(den, c.den)
        if not r.is_zero():
            den = den * c.den / _poly_gcd(den, c.den)
    out = []
    for c in row:
        v = c.num * (den / c.den) if c else UniPoly.zero(QQ)
        out.append(v)
    return out


def _poly_gcd(a, b):
    from .poly import poly_gcd
    if a.is_zero() and b.is_zero():
        return UniPoly.one(QQ)
    return poly_gcd(a, b)


def _poly_exact_div(a, b):
    q, r = poly_divmod(a, b)
    assert r.is_zero(), "Bareiss division was not exact"
    return q


def _bareiss_echelon(rows, ncols, exact_div, is_zero):
    """Fraction-free row echelon form; returns (rows, pivot column list)."""
    m = [list(r) for r in rows]
    pivots = []
    prev = None
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if not is_zero(m[i][col]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        piv = m[r][col]
        for i in range(r + 1, len(m)):
            for j in range(col + 1, ncols):
                num = m[i][j] * piv - m[i][col] * m[r][j]
                m[i][j] = num if prev is None else exact_div(num, prev)
            m[i][col] = m[i][col] - m[i][col]
        prev = piv
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def _kernel_from_echelon(ech, pivots, ncols, ctx, to_field):
    free_cols = [j for j in range(ncols) if j not in pivots]
    basis = []
    frows = [[to_field(c) for c in row] for row in ech]
    for fc in free_cols:
        v = [ctx.zero] * ncols
        v[fc] = ctx.one
        for i in range(len(pivots) - 1, -1, -1):
            pc = pivots[i]
            s = ctx.zero
            for j in range(pc + 1, ncols):
                s = s + frows[i][j] * v[j]
            v[pc] = -s / frows[i][pc]
        basis.append(v)
    return basis


def _field_kernel(rows, ncols, ctx):
    """Plain Gauss-Jordan kernel over any exact field."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if _nz(m[i][col]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        piv = m[r][col]
        m[r] = [c / piv for c in m[r]]
        for i in range(len(m)):
            if i != r and _nz(m[i][col]):
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    free_cols = [j for j in range(ncols) if j not in pivots]
    basis = []
    for fc in free_cols:
        v = [ctx.zero] * ncols
        v[fc] = ctx.one
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def hermite_normal_form(vectors):
    """Row-style Hermite normal form of the lattice spanned by the integer
    vectors; returns a list of basis rows with positive pivots."""
    if not vectors:
        return []
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    ncols = len(rows[0])
    basis = []
    col = 0
    while rows and col < ncols:
        # reduce the current column by gcd steps
        while True:
            nonzero = [r for r in rows if r[col] != 0]
            if len(nonzero) <= 1:
                break
            nonzero.sort(key=lambda r: abs(r[col]))
            a = nonzero[0]
            for r in nonzero[1:]:
                q = r[col] // a[col]
                for j in range(ncols):
                    r[j] -= q * a[j]
        pivot = None
        for r in rows:
            if r[col] != 0:
                pivot = r
                break
        if pivot is not None:
            rows.remove(pivot)
            if pivot[col] < 0:
                pivot = [-c for c in pivot]
            basis.append(pivot)
        rows = [r for r in rows if any(r)]
        col += 1
    # reduce entries above each pivot
    for i in range(len(basis) - 1, -1, -1):
        pc = next(j for j, c in enumerate(basis[i]) if c != 0)
        for k in range(i):
            q = basis[k][pc] // basis[i][pc]
            if q:
                for j in range(len(basis[i])):
                    basis[k][j] -= q * basis[i][j]
    return basis
