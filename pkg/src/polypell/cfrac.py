"""Continued fractions of sqrt(D) in K((1/X)) and the Pell solvers built on
them.

The complete quotients (P_n + sqrt(D))/Q_n are carried exactly as polynomial
pairs; a truncated Laurent expansion of sqrt(D) is used only once, to extract
its polynomial part.  Every step is certified by the exact degree invariants
deg P_(n+1) = d, deg Q_(n+1) <= d-1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (DegreeTooLarge, DegreeTooSmall, NotSquarefree, OddDegree)
from .fields import QQ, RationalFunctionField, t_degree
from .laurent import sqrt_series
from .poly import UniPoly, is_squarefree, poly_divmod, poly_sqrt


@dataclass(frozen=True)
class CFracStep:
    partial_quotient: UniPoly   # a_n
    state_p: UniPoly            # P_n
    state_q: UniPoly            # Q_n
    convergent_p: UniPoly       # p_n
    convergent_q: UniPoly       # q_n
    norm: UniPoly               # p_n^2 - D q_n^2 = (-1)^(n+1) Q_(n+1)


class _LazyStep:
    """CFracStep facade over fraction-free data, converting each field to a
    UniPoly on first access (the solvers only ever touch ``norm``)."""

    __slots__ = ("_ctx", "_raw", "_vals")

    def __init__(self, ctx, raw):
        self._ctx = ctx
        self._raw = raw  # (a, P, Q, p, q, Q_next, n)
        self._vals = {}

    def _get(self, name, index):
        if name not in self._vals:
            from .ffpoly import ff_to_unipoly
            val = ff_to_unipoly(self._raw[index], self._ctx)
            if name == "norm" and self._raw[6] % 2 == 0:
                val = -val
            self._vals[name] = val
        return self._vals[name]

    @property
    def partial_quotient(self):
        return self._get("partial_quotient", 0)

    @property
    def state_p(self):
        return self._get("state_p", 1)

    @property
    def state_q(self):
        return self._get("state_q", 2)

    @property
    def convergent_p(self):
        return self._get("convergent_p", 3)

    @property
    def convergent_q(self):
        return self._get("convergent_q", 4)

    @property
    def norm(self):
        return self._get("norm", 5)


@dataclass(frozen=True)
class CFracExpansion:
    D: UniPoly
    steps: tuple

    @property
    def half_degree(self):
        return self.D.degree // 2


@dataclass(frozen=True)
class PellReport:
    solvable: bool
    A: UniPoly = None
    B: UniPoly = None
    max_steps: int = 0
    steps_used: int = 0

    @property
    def status(self):
        return "pellian" if self.solvable else "not-pellian-within"


@dataclass(frozen=True)
class AlmostPellReport:
    status: str  # "exact" | "up-to-constant" | "not-within"
    A: UniPoly = None
    B: UniPoly = None
    constant: object = None  # c with A^2 - D B^2 = c*F
    max_steps: int = 0
    steps_used: int = 0


def _validate(D, min_degree=2):
    if D.is_zero() or D.degree % 2 != 0:
        raise OddDegree("D must be a nonzero polynomial of even degree")
    if D.degree < min_degree:
        raise DegreeTooSmall(f"D must have degree at least {min_degree}")
    if not is_squarefree(D):
        raise NotSquarefree("D must be squarefree")
    if poly_sqrt(D) is not None:
        raise NotSquarefree("D must not be a perfect square")


def expand(D, max_steps):
    """Continued fraction expansion of sqrt(D), max_steps partial quotients.

    Writing G for the polynomial part of sqrt(D), the fractional part of
    sqrt(D) has degree <= -1, so the floor of (P + sqrt(D))/Q equals the
    polynomial quotient of P + G by Q: the whole expansion runs on exact
    polynomial division.
    """
    _validate(D)
    if isinstance(D.ctx, RationalFunctionField):
        return _expand_parametric(D, max_steps)
    ctx = D.ctx
    d = D.degree // 2
    G = sqrt_series(D, 0).polynomial_part()
    lead = G.lead
    P = UniPoly.zero(ctx)
    Q = UniPoly.one(ctx)
    p_prev, q_prev = UniPoly.one(ctx), UniPoly.zero(ctx)
    p_cur, q_cur = None, None
    steps = []
    for n in range(max_steps):
        a, _ = poly_divmod(P + G, Q)
        assert n == 0 or a.degree >= 1
        P_next = a * Q - P
        Q_next, rem = poly_divmod(D - P_next * P_next, Q)
        assert rem.is_zero()  # holds for any polynomial a
        # floor-correctness certificates, exact
        assert P_next.degree == d and P_next.lead == lead
        assert Q_next.degree <= d - 1
        if p_cur is None:
            p_new, q_new = a, UniPoly.one(ctx)
        else:
            p_new = a * p_cur + p_prev
            q_new = a * q_cur + q_prev
        p_prev, q_prev, p_cur, q_cur = p_cur, q_cur, p_new, q_new
        if p_prev is None:
            p_prev, q_prev = UniPoly.one(ctx), UniPoly.zero(ctx)
        norm = Q_next if n % 2 == 1 else -Q_next
        steps.append(CFracStep(a, P, Q, p_new, q_new, norm))
        P, Q = P_next, Q_next
    return CFracExpansion(D, tuple(steps))


def _expand_parametric(D, max_steps):
    """The same expansion run fraction-free over QQ(t), where reducing every
    coefficient individually is prohibitively slow."""
    from .ffpoly import (FF_ONE, FF_ZERO, ff_add, ff_divmod, ff_from_unipoly,
                         ff_mul, ff_sub)

    ctx = D.ctx
    d = D.degree // 2
    G = sqrt_series(D, 0).polynomial_part()
    Dff = ff_from_unipoly(D)
    Gff = ff_from_unipoly(G)
    P, Q = FF_ZERO, FF_ONE
    Q_prev = None
    p_prev, q_prev = FF_ONE, FF_ZERO
    p_cur, q_cur = None, None
    raw = []
    for n in range(max_steps):
        a, _ = ff_divmod(ff_add(P, Gff), Q)
        assert n == 0 or a.degree >= 1
        P_next = ff_sub(ff_mul(a, Q), P)
        if n == 0:
            Q_next = ff_sub(Dff, ff_mul(P_next, P_next))
        else:
            # Q_(n+1) = Q_(n-1) + a_n (P_n - P_(n+1)), avoiding a division
            Q_next = ff_add(Q_prev, ff_mul(a, ff_sub(P, P_next)))
        assert P_next.degree == d
        assert Q_next.degree <= d - 1
        if p_cur is None:
            p_new, q_new = a, FF_ONE
        else:
            p_new = ff_add(ff_mul(a, p_cur), p_prev)
            q_new = ff_add(ff_mul(a, q_cur), q_prev)
        p_prev, q_prev, p_cur, q_cur = p_cur, q_cur, p_new, q_new
        if p_prev is None:
            p_prev, q_prev = FF_ONE, FF_ZERO
        raw.append((a, P, Q, p_new, q_new, Q_next, n))
        Q_prev, P, Q = Q, P_next, Q_next
    steps = tuple(_LazyStep(ctx, r) for r in raw)
    return CFracExpansion(D, steps)


def default_max_steps(D):
    """64 over QQ, 16 over QQ(t) where coefficients blow up."""
    if isinstance(D.ctx, RationalFunctionField):
        return 16
    return 64


def solve_pell(D, max_steps):
    """Search the convergents for a solution of A^2 - D B^2 = 1."""
    expansion = expand(D, max_steps)
    for i, step in enumerate(expansion.steps):
        if isinstance(step, _LazyStep):
            qn = step._raw[5]
            if qn.is_zero() or qn.degree > 0:
                continue
        p, q = step.convergent_p, step.convergent_q
        r = step.norm
        if r.is_zero() or r.degree > 0:
            continue
        c = r.coefficient(0)
        if c == D.ctx.one:
            return PellReport(True, p, q, max_steps, i + 1)
        # norm-1 normalization: (p + q*sqrt(D))^2 / c has norm exactly 1
        A = (p * p + D * q * q) / c
        B = (p * q + p * q) / c
        return PellReport(True, A, B, max_steps, i + 1)
    return PellReport(False, max_steps=max_steps, steps_used=len(expansion.steps))


def solve_almost_pell(D, F, max_steps):
    """Search the convergents for A^2 - D B^2 = F with deg F <= d-1.

    Returns an exact witness when the matching constant is a square in the
    field, otherwise the witness up to that constant (the equation is then
    solvable over the algebraic closure).
    """
    _validate(D, min_degree=4)
    if F.is_zero():
        raise DegreeTooLarge("F must be nonzero")
    d = D.degree // 2
    if F.degree > d - 1:
        raise DegreeTooLarge(
            "the convergent criterion applies only for deg F <= d-1")
    expansion = expand(D, max_steps)
    ctx = D.ctx
    F_ff = None
    for i, step in enumerate(expansion.steps):
        if isinstance(step, _LazyStep):
            # fraction-free filter: the norm is +-Q_(n+1), so it matches c*F
            # exactly when the raw state is a scalar multiple of F
            from .ffpoly import ff_from_unipoly, ff_is_scalar_multiple
            if F_ff is None:
                F_ff = ff_from_unipoly(F)
            if not ff_is_scalar_multiple(step._raw[5], F_ff):
                continue
        p, q = step.convergent_p, step.convergent_q
        r = step.norm
        if r.is_zero():
            continue
        quo, rem = poly_divmod(r, F)
        if not rem.is_zero() or quo.degree != 0:
            continue
        c = quo.coefficient(0)
        root = ctx.sqrt(c)
        if root is not None:
            return AlmostPellReport("exact", p / root, q / root,
                                    ctx.one, max_steps, i + 1)
        return AlmostPellReport("up-to-constant", p, q, c, max_steps, i + 1)
    return AlmostPellReport("not-within", max_steps=max_steps,
                            steps_used=len(expansion.steps))


@dataclass(frozen=True)
class NonSolvabilityReport:
    proven: bool
    reason: str

    @property
    def status(self):
        return "proven" if self.proven else "inconclusive"


def prove_not_identically_solvable(D_t, F):
    """Certify that A^2 - D_t B^2 = F has no solution with B != 0 over the
    algebraic closure of QQ(t).

    The certificate combines the convergent criterion (valid for
    deg F <= d-1, which forces any solution to have coefficients rational in
    the parameter), a parity count of parameter degrees after clearing
    denominators, and a check that no specialization of D_t is a perfect
    square.  Any unmet hypothesis yields an inconclusive verdict.
    """
    ctx = D_t.ctx
    if not isinstance(ctx, RationalFunctionField):
        return NonSolvabilityReport(False, "D_t is not a parametric family")
    if D_t.is_zero() or D_t.degree % 2 != 0 or D_t.degree < 4:
        return NonSolvabilityReport(False, "D_t must have even degree >= 4")
    try:
        tau = t_degree(D_t)
    except ValueError:
        return NonSolvabilityReport(
            False, "coefficients of D_t are not polynomial in the parameter")
    if tau % 2 == 0:
        return NonSolvabilityReport(
            False, "parameter degree of D_t is not odd")
    if not is_squarefree(D_t):
        return NonSolvabilityReport(False, "D_t is not squarefree")
    lead = D_t.lead
    if lead.num.degree != 0:
        return NonSolvabilityReport(
            False, "leading coefficient of D_t depends on the parameter")
    if QQ.sqrt(lead.num.coefficient(0)) is None:
        return NonSolvabilityReport(
            False, "leading coefficient of D_t is not a rational square")
    d = D_t.degree // 2
    F_const = _constant_in_t(F, ctx)
    if F_const is None:
        return NonSolvabilityReport(False, "F depends on the parameter")
    if F_const.is_zero():
        return NonSolvabilityReport(False, "F must be nonzero")
    if F_const.degree > d - 1:
        return NonSolvabilityReport(
            False, "deg F > d-1: the convergent criterion does not apply")
    # No specialization of D_t may be a perfect square: the polynomial part
    # G of sqrt(D_t) has coefficients polynomial in the parameter (the
    # recursion divides only by the constant leading root), and D at t0 is a
    # square exactly when every coefficient of D_t - G^2 vanishes at t0.
    G = sqrt_series(D_t, 0).polynomial_part()
    r = D_t - G * G
    if r.is_zero():
        return NonSolvabilityReport(False, "D_t is a perfect square")
    g = None
    for c in r.coeffs:
        if not c:
            continue
        if not c.is_polynomial():
            return NonSolvabilityReport(
                False, "square-defect coefficients are not polynomial")
        g = c.num if g is None else _poly_gcd_qq(g, c.num)
    if g.degree > 0:
        return NonSolvabilityReport(
            False, "some specialization of D_t may be a perfect square")
    return NonSolvabilityReport(True, "parameter-degree parity and "
                                      "square-specialization checks hold")


def _constant_in_t(F, ctx):
    """F as a UniPoly over QQ when it does not involve the parameter."""
    if F.ctx == QQ:
        return F
    if F.ctx != ctx:
        raise ValueError("F lives in an unrelated context")
    coeffs = []
    for c in F.coeffs:
        if not c.is_polynomial() or c.num.degree > 0:
            return None
        coeffs.append(c.num.coefficient(0))
    return UniPoly(QQ, coeffs)


def _poly_gcd_qq(a, b):
    from .poly import poly_gcd
    if a.is_zero() and b.is_zero():
        return a
    return poly_gcd(a, b)
