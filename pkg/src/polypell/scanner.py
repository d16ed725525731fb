"""Height-ordered scanning of parametric families D_t for special parameter
values where the almost-Pell equation becomes solvable, plus the pullback
along the quartic substitution X -> X^4 for the transformed family
Y^2 = X1^4 + X1^2 + t*X1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bridge import factor_target, reduce_common_roots, \
    solve_almost_pell_via_jacobian
from .cfrac import prove_not_identically_solvable, solve_almost_pell
from .curve import HyperCurve
from .errors import (BudgetExceeded, DegreeTooLarge, NonSplitTarget,
                     NotASolution, NotSquarefree)
from .fields import QQ, RationalFunctionField, ratfunc_specialize_poly
from .poly import UniPoly, discriminant, is_squarefree


@dataclass(frozen=True)
class Family:
    """A parametric almost-Pell problem A^2 - D_t B^2 = F over QQ(t)."""

    D_t: UniPoly
    F: UniPoly

    def __post_init__(self):
        ctx = self.D_t.ctx
        if not isinstance(ctx, RationalFunctionField):
            raise ValueError("D_t must live over the rational function field")
        if self.D_t.degree % 2 != 0 or self.D_t.degree < 4:
            raise ValueError("D_t must have even X-degree >= 4")
        if not is_squarefree(self.D_t):
            raise NotSquarefree("D_t must be squarefree over QQ(t)")
        if ctx.sqrt(self.D_t.lead) is None:
            raise ValueError("leading X-coefficient of D_t must be a square")

    @property
    def x_degree(self):
        return self.D_t.degree

    def discriminant_in_x(self):
        return discriminant(self.D_t)


@dataclass(frozen=True)
class Degenerate:
    reason: str


@dataclass(frozen=True)
class ScanEntry:
    t0: Fraction
    status: str  # "solvable" | "not-within-budget" | "degenerate"
    engine: str = None  # "cfrac" | "jacobian"
    A: UniPoly = None
    B: UniPoly = None
    constant: object = None
    reason: str = None


@dataclass(frozen=True)
class ScanReport:
    family: Family
    height_bound: int
    max_steps: int
    l_bound: int
    generic_verdict: str
    entries: tuple


def rationals_of_height_up_to(T):
    """All rationals a/b in lowest terms with max(|a|, |b|) <= T, sorted by
    (height, numerator, denominator)."""
    if T < 1:
        raise ValueError("the height bound must be at least 1")
    out = []
    from math import gcd
    for a in range(-T, T + 1):
        for b in range(1, T + 1):
            if gcd(abs(a), b) == 1 and max(abs(a), b) <= T:
                out.append(Fraction(a, b))
    out.sort(key=lambda q: (max(abs(q.numerator), q.denominator),
                            q.numerator, q.denominator))
    return out


def specialize(family, t0):
    """(D0, F0) at t = t0, or Degenerate when the specialization leaves the
    family's shape (degree drop, pole, lost squarefreeness)."""
    t0 = Fraction(t0)
    try:
        D0 = ratfunc_specialize_poly(family.D_t, t0)
        F0 = ratfunc_specialize_poly(family.F, t0)
    except ZeroDivisionError:
        return Degenerate("a coefficient has a pole at t0")
    if D0.degree != family.D_t.degree:
        return Degenerate("the X-degree of D drops at t0")
    if F0.is_zero():
        return Degenerate("F vanishes at t0")
    if not is_squarefree(D0):
        return Degenerate("D is not squarefree at t0")
    return D0, F0


def scan(family, height_bound, max_steps=16, l_bound=None):
    """Try to solve the specialized equation at every parameter value of
    height up to the bound, with the continued fraction engine always and
    the divisor-class engine when F specializes to a split polynomial.

    Budgets are structural (expansion steps, relation box size), so the
    report is deterministic and machine independent.
    """
    if l_bound is None:
        l_bound = family.x_degree + 10
    generic = prove_not_identically_solvable(family.D_t, family.F)
    entries = []
    for t0 in rationals_of_height_up_to(height_bound):
        entries.append(_scan_one(family, t0, max_steps, l_bound))
    return ScanReport(family, height_bound, max_steps, l_bound,
                      generic.status, tuple(entries))


def _scan_one(family, t0, max_steps, l_bound):
    specialized = specialize(family, t0)
    if isinstance(specialized, Degenerate):
        return ScanEntry(t0, "degenerate", reason=specialized.reason)
    D0, F0 = specialized
    budget_hit = None
    try:
        report = solve_almost_pell(D0, F0, max_steps)
    except DegreeTooLarge as exc:
        return ScanEntry(t0, "degenerate", reason=str(exc))
    if report.status == "exact":
        _check_witness(D0, F0, report.A, report.B, QQ.one)
        return ScanEntry(t0, "solvable", "cfrac", report.A, report.B, QQ.one)
    if report.status == "up-to-constant":
        _check_witness(D0, F0, report.A, report.B, report.constant)
        return ScanEntry(t0, "solvable", "cfrac", report.A, report.B,
                         report.constant)
    # second engine: divisor classes, when F0 splits over QQ
    try:
        reduced, _removed = reduce_common_roots(D0, F0)
        target = factor_target(D0, reduced)
        curve = HyperCurve(D0)
        jac = solve_almost_pell_via_jacobian(curve, target, l_bound)
    except NonSplitTarget:
        jac = None
    except BudgetExceeded as exc:
        jac = None
        budget_hit = str(exc)
    if jac is not None and jac.status in ("exact", "up-to-constant"):
        w = jac.witness
        constant = QQ.one if jac.status == "exact" else jac.constant
        _check_witness(D0, reduced, w.A, w.B, constant)
        return ScanEntry(t0, "solvable", "jacobian", w.A, w.B, constant)
    return ScanEntry(t0, "not-within-budget", reason=budget_hit)


def _check_witness(D0, F0, A, B, constant):
    lhs = A * A - D0 * B * B
    rhs = F0 * UniPoly.constant(QQ, constant)
    if lhs != rhs or B.is_zero():
        raise NotASolution("scan produced an invalid witness")


def beta_pullback(A1, B1, t0):
    """Pull a solution of A1^2 - (X^4 + X^2 + t0*X) B1^2 = c*(X - 1) back
    along X -> X^4, Y -> X^2*Y to a solution of
    A^2 - (X^12 + X^4 + t0) B^2 = c*(X^4 - 1).

    The constant c is accepted (and returned) because the equation need only
    be solvable up to a constant over the algebraic closure; c = 1 gives the
    exact pullback.  Returns (A, B, c).
    """
    ctx = A1.ctx
    t0 = ctx.coerce(t0)
    x = UniPoly.x(ctx)
    one = UniPoly.one(ctx)
    D1 = x ** 4 + x ** 2 + UniPoly.constant(ctx, t0) * x
    if B1.is_zero():
        raise NotASolution("trivial input: B1 = 0")
    norm = A1 * A1 - D1 * B1 * B1
    quo, rem = divmod(norm, x - one)
    if not rem.is_zero() or quo.degree != 0:
        raise NotASolution("input does not solve the transformed equation")
    c = quo.coefficient(0)
    quartic = x ** 4
    A = A1.compose(quartic)
    B = (x * x) * B1.compose(quartic)
    D = x ** 12 + x ** 4 + UniPoly.constant(ctx, t0)
    assert A * A - D * B * B == (quartic - one) * UniPoly.constant(ctx, c)
    return A, B, c
