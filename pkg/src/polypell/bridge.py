"""Translations between almost-Pell solutions and divisor-class relations.

For F = beta * prod (X - alpha_i)^{a_i} with distinct roots, the classes
P_i = [alpha_i^+ - inf-] (ordinary roots, i <= h) or [alpha_i - inf-]
(Weierstrass roots, i > h) and Q = [inf+ - inf-] control solvability of
A^2 - D B^2 = F: a nontrivial solution yields an integer relation
sum g_i P_i + l Q = 0 with |g_i| <= a_i and g_i = a_i mod 2, and every such
relation can be turned back into a solution.  Both directions are
constructive here and re-verified by exact polynomial identities.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import (Divisor, HyperCurve, INF_MINUS, INF_PLUS, involution)
from .errors import (BudgetExceeded, NonSplitTarget, NotARelation,
                     NotASolution, ParityViolation, TrivialSolution)
from .jacobian import is_principal
from .poly import UniPoly, rational_roots


@dataclass(frozen=True)
class FactoredTarget:
    """F = beta * prod (X - alpha_i)^{a_i}; roots with D(alpha_i) != 0 come
    first (split_rank many), Weierstrass roots after them with a_i = 1."""

    beta: object
    factors: tuple  # ((alpha_i, a_i), ...)
    split_rank: int

    def polynomial(self, ctx):
        p = UniPoly.constant(ctx, self.beta)
        x = UniPoly.x(ctx)
        for alpha, a in self.factors:
            p = p * (x - UniPoly.constant(ctx, alpha)) ** a
        return p


@dataclass(frozen=True)
class PellPointsSetup:
    curve: object
    target: FactoredTarget
    points: tuple  # degree-0 divisors P_i, aligned with target.factors
    Q: Divisor

    @property
    def roots(self):
        return tuple(alpha for alpha, _a in self.target.factors)


@dataclass(frozen=True)
class RelationVector:
    coefficients: tuple
    l: int

    def is_zero(self):
        return self.l == 0 and not any(self.coefficients)


@dataclass(frozen=True)
class SolutionWitness:
    A: UniPoly
    B: UniPoly
    beta: object
    exponents: tuple

    def target_polynomial(self, ctx, roots):
        p = UniPoly.constant(ctx, self.beta)
        x = UniPoly.x(ctx)
        for alpha, e in zip(roots, self.exponents):
            p = p * (x - UniPoly.constant(ctx, alpha)) ** e
        return p


def reduce_common_roots(D, F):
    """Divide out (X - alpha)^2 from F at common roots of D and F until the
    multiplicity there is at most one; solvability is unchanged.

    Returns (reduced F, list of (alpha, count) recording removed squares).
    """
    if F.is_zero():
        raise NotASolution("F must be nonzero")
    from .poly import poly_gcd
    removed = []
    common = poly_gcd(D, F)
    if common.degree == 0:
        return F, removed
    ctx = F.ctx
    x = UniPoly.x(ctx)
    for alpha, _m in _roots_of(common):
        lin = x - UniPoly.constant(ctx, alpha)
        count = 0
        while _multiplicity_of(F, lin) >= 2:
            F = F / (lin * lin)
            count += 1
        if count:
            removed.append((alpha, count))
    return F, removed


def factor_target(D, F):
    """Split F over the base field into a FactoredTarget.

    Raises NonSplitTarget when F has an irreducible factor of degree > 1;
    assumes reduce_common_roots was already applied.
    """
    if F.is_zero():
        raise NonSplitTarget("F must be nonzero")
    ctx = F.ctx
    work = F
    x = UniPoly.x(ctx)
    ordinary = []
    weierstrass = []
    for alpha, m in _roots_of(F):
        lin = x - UniPoly.constant(ctx, alpha)
        for _ in range(m):
            work = work / lin
        if D(alpha):
            ordinary.append((alpha, m))
        else:
            if m != 1:
                raise NotASolution(
                    "common roots of D and F must be reduced first")
            weierstrass.append((alpha, m))
    if work.degree > 0:
        raise NonSplitTarget(
            "F has an irreducible factor of degree > 1 over the base field")
    beta = work.coefficient(0)
    factors = tuple(ordinary + weierstrass)
    return FactoredTarget(beta, factors, len(ordinary))


def build_points(curve, target):
    """The divisor classes P_i and Q attached to the roots of F."""
    points = []
    for i, (alpha, _a) in enumerate(target.factors):
        above = curve.points_above(alpha)
        if i < target.split_rank:
            assert len(above) == 2
            plus = above[0]
            p_div = Divisor({plus: 1, INF_MINUS: -1})
            # conjugation identity: [a+ - inf-] + [a- - inf+] = div(X - a)
            minus_div = Divisor({involution(plus): 1, INF_PLUS: -1})
            assert p_div + minus_div == curve.divisor_of_linear(alpha)
        else:
            assert len(above) == 1
            p_div = Divisor({above[0]: 1, INF_MINUS: -1})
        points.append(p_div)
    return PellPointsSetup(curve, target, tuple(points),
                           curve.infinity_difference())


def solution_to_relation(setup, A, B):
    """The relation sum g_i P_i + l Q = 0 induced by a solution of
    A^2 - D B^2 = F, via the divisor of f+ = A + Y*B."""
    curve = setup.curve
    target = setup.target
    ctx = curve.ctx
    if B.is_zero():
        raise TrivialSolution("solutions with B = 0 carry no relation")
    F = target.polynomial(ctx)
    if A * A - curve.D * B * B != F:
        raise NotASolution("A^2 - D B^2 != F")
    div = curve.divisor_of_function(A, B, hints=setup.roots)
    gs = []
    l = div.get(INF_PLUS)
    for i, (alpha, a) in enumerate(target.factors):
        above = curve.points_above(alpha)
        if i < target.split_rank:
            plus = above[0]
            b_plus = div.get(plus)
            b_minus = div.get(involution(plus))
            assert b_plus + b_minus == a
            gs.append(b_plus - b_minus)
            l += b_minus
        else:
            b = div.get(above[0])
            assert b == a
            gs.append(b)
    relation = RelationVector(tuple(gs), l)
    assert not relation.is_zero()
    for g, (_alpha, a) in zip(gs, target.factors):
        assert abs(g) <= a and (g - a) % 2 == 0
    check = _relation_divisor(setup, relation)
    if is_principal(curve, check, hints=setup.roots) is None:
        raise NotASolution("derived relation failed re-verification")
    return relation


def relation_to_solution(setup, relation):
    """A solution witness A^2 - D B^2 = beta * prod (X-alpha_i)^{|e_i|}
    built from a principal relation sum e_i P_i + l Q = 0."""
    curve = setup.curve
    target = setup.target
    ctx = curve.ctx
    if relation.is_zero():
        raise NotARelation("the zero relation carries no solution")
    es = relation.coefficients
    for i in range(target.split_rank, len(es)):
        if es[i] % 2 == 0 and es[i] != 0:
            raise ParityViolation(
                "exponents at Weierstrass roots must be odd or zero")
    div = _relation_divisor(setup, relation)
    cert = is_principal(curve, div, hints=setup.roots)
    if cert is None:
        raise NotARelation("the combination is not principal")
    # f+ = f * prod over negative exponents of (X - alpha_i)^{|e_i|}
    mult = UniPoly.one(cert.R.ctx)
    x = UniPoly.x(cert.R.ctx)
    for (alpha, _a), e in zip(target.factors, es):
        if e < 0:
            mult = mult * (x - UniPoly.constant(cert.R.ctx,
                                                cert.R.ctx.coerce(alpha))) ** (-e)
    R, S = cert.R * mult, cert.S * mult
    for u, k in cert.denominator:
        den = u if isinstance(u, UniPoly) else \
            x - UniPoly.constant(cert.R.ctx, cert.R.ctx.coerce(u))
        for _ in range(k):
            R, S = R / den, S / den
    A, B = R, S
    assert not B.is_zero()
    exponents = tuple(abs(e) for e in es)
    norm = A * A - curve.D * B * B
    shape = SolutionWitness(A, B, ctx.one, exponents).target_polynomial(
        ctx, setup.roots)
    quo = norm / shape
    assert quo.degree == 0
    beta = quo.coefficient(0)
    return SolutionWitness(A, B, beta, exponents)


@dataclass(frozen=True)
class JacobianPellReport:
    status: str  # "exact" | "up-to-constant" | "not-within"
    witness: SolutionWitness = None
    relation: RelationVector = None
    constant: object = None  # c with A^2 - D B^2 = c * F
    l_bound: int = 0


def solve_almost_pell_via_jacobian(curve, target, l_bound, budget=None,
                                   cache=None):
    """Search the admissible relation box for a solution of
    A^2 - D B^2 = beta * prod (X - alpha_i)^{a_i}."""
    setup = build_points(curve, target)
    ctx = curve.ctx
    F = target.polynomial(ctx)
    tested = 0
    cache = {} if cache is None else cache
    fallback = None
    fast_filter = _SpecializationFilter(curve, setup.roots)
    for gs, l in _admissible_relations(target, l_bound):
        relation = RelationVector(gs, l)
        key = (gs, l)
        if key in cache:
            principal = cache[key]
        else:
            if budget is not None and tested >= budget:
                raise BudgetExceeded(
                    f"relation search exceeded {budget} principality tests")
            tested += 1
            if fast_filter.rejects(gs, l):
                principal = False
            else:
                principal = is_principal(
                    curve, _relation_divisor(setup, relation),
                    hints=setup.roots) is not None
            cache[key] = principal
            cache[(tuple(-g for g in gs), -l)] = principal
        if not principal:
            continue
        witness = relation_to_solution(setup, relation)
        witness = _pad_witness(setup, witness)
        # rescale to match F exactly when the constant ratio is a square
        ratio = target.beta / witness.beta
        root = ctx.sqrt(ratio)
        if root is not None:
            witness = SolutionWitness(witness.A * root, witness.B * root,
                                      target.beta, witness.exponents)
            assert (witness.A * witness.A
                    - curve.D * witness.B * witness.B) == F
            return JacobianPellReport("exact", witness, relation,
                                      ctx.one, l_bound)
        if fallback is None:
            constant = witness.beta / target.beta
            fallback = JacobianPellReport("up-to-constant", witness,
                                          relation, constant, l_bound)
    if fallback is not None:
        return fallback
    return JacobianPellReport("not-within", l_bound=l_bound)


def solvable_exponents(curve, roots, box, l_bound, budget=None):
    """The exponent vectors (a_1..a_m) in the box for which
    A^2 - D B^2 = (X-alpha_1)^{a_1} ... (X-alpha_m)^{a_m} is solvable over
    the algebraic closure, decided by the bounded relation search.

    ``box`` gives the maximal multiplicity per root.
    """
    ctx = curve.ctx
    roots = tuple(ctx.coerce(a) for a in roots)
    box = tuple(box)
    is_weierstrass = [not curve.D(a) for a in roots]
    # principality of every admissible (g, l) in the enclosing box, cached
    cache = {}
    tested = 0
    q_div = curve.infinity_difference()
    point_divs = []
    for alpha, w in zip(roots, is_weierstrass):
        above = curve.points_above(alpha)
        point_divs.append(Divisor({above[0]: 1, INF_MINUS: -1}))
    g_ranges = []
    for bound, w in zip(box, is_weierstrass):
        top = min(bound, 1) if w else bound
        g_ranges.append(range(-top, top + 1))
    fast_filter = _SpecializationFilter(curve, roots)

    def principal(gs, l):
        nonlocal tested
        key = (gs, l)
        if key in cache:
            return cache[key]
        if budget is not None and tested >= budget:
            raise BudgetExceeded(
                f"exponent scan exceeded {budget} principality tests")
        tested += 1
        if fast_filter.rejects(gs, l):
            ans = False
        else:
            div = Divisor()
            for g, p in zip(gs, point_divs):
                if g:
                    div = div + g * p
            if l:
                div = div + l * q_div
            ans = is_principal(curve, div, hints=roots) is not None
        cache[key] = ans
        cache[(tuple(-g for g in gs), -l)] = ans
        return ans

    relations = []
    for gs in _grid(g_ranges):
        for l in range(-l_bound, l_bound + 1):
            if not any(gs) and l == 0:
                continue
            if principal(gs, l):
                relations.append((gs, l))
    solvable = set()
    for a_vec in _grid([range(b + 1) for b in box]):
        ok = False
        for gs, _l in relations:
            if all(abs(g) <= a and (g - a) % 2 == 0
                   for g, a in zip(gs, a_vec)):
                ok = True
                break
        if ok:
            solvable.add(a_vec)
    return solvable


# -- internals -------------------------------------------------------------


class _SpecializationFilter:
    """Sound fast rejection of generic principality over the rational
    function field.

    The specialization map on divisor classes at a parameter value of good
    reduction is a homomorphism, so a combination whose every branch-sign
    variant is nonprincipal in some specialized Jacobian is nonprincipal
    generically.  (The variants are needed because the specialization of a
    chosen square root branch is only determined up to sign.)
    """

    def __init__(self, curve, roots):
        from .fields import QQ, RationalFunctionField, ratfunc_specialize_poly
        self.active = False
        ctx = curve.ctx
        if not isinstance(ctx, RationalFunctionField):
            return
        if not curve.D.lead.is_polynomial() or curve.D.lead.num.degree > 0:
            return  # branch matching at infinity needs a constant lead
        alphas = []
        for a in roots:
            if not a.is_polynomial() or a.num.degree > 0:
                return
            alphas.append(a.num.coefficient(0))
        self.specials = []
        from fractions import Fraction
        for cand in (0, 1, -1, 2, -2, 3, -3, 5):
            if len(self.specials) == 2:
                break
            t0 = Fraction(cand)
            try:
                D0 = ratfunc_specialize_poly(curve.D, t0)
            except ZeroDivisionError:
                continue
            if D0.degree != curve.D.degree:
                continue
            from .poly import is_squarefree
            if not is_squarefree(D0):
                continue
            curve0 = HyperCurve(D0)
            pts = []
            ok = True
            for alpha, alpha_t in zip(alphas, roots):
                generic_w = not curve.D(alpha_t)
                special_w = not D0(alpha)
                if generic_w != special_w:
                    ok = False
                    break
                pts.append(curve0.points_above(alpha))
            if not ok:
                continue
            self.specials.append((curve0, alphas, pts))
        self.active = bool(self.specials)
        self.cache = {}

    def rejects(self, gs, l):
        """True when the combination is provably nonprincipal generically."""
        if not self.active:
            return False
        key = (tuple(gs), l)
        if key in self.cache:
            return self.cache[key]
        verdict = False
        for curve0, alphas, pts in self.specials:
            if self._all_variants_nonprincipal(curve0, alphas, pts, gs, l):
                verdict = True
                break
        self.cache[key] = verdict
        self.cache[(tuple(-g for g in gs), -l)] = verdict
        return verdict

    def _all_variants_nonprincipal(self, curve0, alphas, pts, gs, l):
        free = [i for i, g in enumerate(gs)
                if g and len(pts[i]) == 2]
        q0 = curve0.infinity_difference()
        for mask in range(1 << len(free)):
            div = Divisor()
            for i, g in enumerate(gs):
                if not g:
                    continue
                if i in free and (mask >> free.index(i)) & 1:
                    point = pts[i][1]
                else:
                    point = pts[i][0]
                div = div + g * Divisor({point: 1, INF_MINUS: -1})
            if l:
                div = div + l * q0
            if is_principal(curve0, div, hints=alphas) is not None:
                return False
        return True


def _relation_divisor(setup, relation):
    div = Divisor()
    for e, p in zip(relation.coefficients, setup.points):
        if e:
            div = div + e * p
    if relation.l:
        div = div + relation.l * setup.Q
    return div


def _pad_witness(setup, witness):
    """Multiply by (X - alpha_i)^{(a_i - |e_i|)/2} so the witness exponents
    match the target multiplicities exactly."""
    target = setup.target
    ctx = setup.curve.ctx
    x = UniPoly.x(ctx)
    A, B = witness.A, witness.B
    beta = witness.beta
    exps = list(witness.exponents)
    for i, ((alpha, a), e) in enumerate(zip(target.factors, exps)):
        gap = a - e
        assert gap >= 0 and gap % 2 == 0
        if gap:
            pad = (x - UniPoly.constant(ctx, alpha)) ** (gap // 2)
            A, B = A * pad, B * pad
            exps[i] = a
    return SolutionWitness(A, B, beta, tuple(exps))


def _admissible_relations(target, l_bound):
    """Admissible (g, l) in deterministic order: increasing |l|, then
    lexicographic g."""
    ranges = []
    for i, (_alpha, a) in enumerate(target.factors):
        if i < target.split_rank:
            ranges.append([g for g in range(-a, a + 1) if (g - a) % 2 == 0])
        else:
            ranges.append([-1, 1] if a % 2 else [0])
    for l_abs in range(l_bound + 1):
        ls = [0] if l_abs == 0 else [l_abs, -l_abs]
        for l in ls:
            for gs in _grid(ranges):
                if l == 0 and not any(gs):
                    continue
                yield gs, l


def _grid(ranges):
    if not ranges:
        yield ()
        return
    for head in ranges[0]:
        for tail in _grid(ranges[1:]):
            yield (head,) + tail


def _roots_of(p):
    """Roots of p in the base field, with multiplicities.

    Over the rational function field only roots constant in the parameter
    are found (t-dependent targets are out of scope for the root-based
    engine; the continued fraction engine covers them).
    """
    from .fields import QQ, RationalFunctionField
    ctx = p.ctx
    if isinstance(ctx, RationalFunctionField):
        coeffs = []
        for c in p.coeffs:
            if not c.is_polynomial() or c.num.degree > 0:
                return []
            coeffs.append(c.num.coefficient(0))
        return [(ctx.coerce(alpha), m)
                for alpha, m in rational_roots(UniPoly(QQ, coeffs))]
    return rational_roots(p)


def _multiplicity_of(p, lin):
    from .poly import poly_divmod
    m = 0
    while True:
        q, r = poly_divmod(p, lin)
        if not r.is_zero():
            return m
        p, m = q, m + 1
