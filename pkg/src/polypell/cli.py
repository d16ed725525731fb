"""Command line front end.

Exit codes: 0 solved/verified, 1 not solvable within the given bounds,
2 input error, 3 degenerate input, 4 internal verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cfrac
from .bridge import (factor_target, reduce_common_roots,
                     solve_almost_pell_via_jacobian)
from .curve import Divisor, HyperCurve, INF_MINUS
from .errors import (InternalVerificationFailure, ParseError,
                     PolypellError, NonSplitTarget)
from .fields import QQ, QQ_T, RationalFunctionField
from .jacobian import order_of_class, relation_lattice
from .parsing import parse_poly, print_poly
from .poly import UniPoly
from .scanner import Family, beta_pullback, scan as scan_family

EXIT_SOLVED = 0
EXIT_NOT_WITHIN = 1
EXIT_INPUT = 2
EXIT_DEGENERATE = 3
EXIT_INTERNAL = 4


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return EXIT_INPUT
    emitter = _Emitter(args)
    try:
        handler = _HANDLERS[args.command]
        return handler(args, emitter)
    except ParseError as exc:
        emitter.fail(f"parse error at position {exc.position}: {exc}")
        return EXIT_INPUT
    except InternalVerificationFailure as exc:
        emitter.fail(f"internal verification failure: {exc}")
        return EXIT_INTERNAL
    except PolypellError as exc:
        emitter.fail(f"input error: {exc}")
        return EXIT_INPUT
    except ValueError as exc:
        emitter.fail(f"input error: {exc}")
        return EXIT_INPUT


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="polypell",
        description="Polynomial Pell equations via continued fractions "
                    "and divisor classes")
    sub = parser.add_subparsers(dest="command")

    def common(p):
        p.add_argument("--json", action="store_true",
                       help="emit a JSON report instead of text")

    p = sub.add_parser("cfrac", help="continued fraction of sqrt(D)")
    p.add_argument("--D", required=True)
    p.add_argument("--steps", type=int, default=None)
    common(p)

    p = sub.add_parser("pell", help="solve A^2 - D*B^2 = 1")
    p.add_argument("--D", required=True)
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument("--l-bound", type=int, default=None)
    common(p)

    p = sub.add_parser("almost-pell", help="solve A^2 - D*B^2 = F")
    p.add_argument("--D", required=True)
    p.add_argument("--F", required=True)
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument("--l-bound", type=int, default=None)
    common(p)

    p = sub.add_parser("relation",
                       help="divisor-class relation lattice for root points")
    p.add_argument("--D", required=True)
    p.add_argument("--roots", default="",
                   help="comma separated rational x-coordinates")
    p.add_argument("--g-bound", type=int, default=2)
    p.add_argument("--l-bound", type=int, default=None)
    common(p)

    p = sub.add_parser("order", help="order of a class in the Jacobian")
    p.add_argument("--D", required=True)
    p.add_argument("--alpha", default=None,
                   help="use [alpha+ - inf-] instead of [inf+ - inf-]")
    p.add_argument("--order-bound", type=int, default=12)
    common(p)

    p = sub.add_parser("scan", help="scan a parametric family over t")
    p.add_argument("--D", required=True)
    p.add_argument("--F", required=True)
    p.add_argument("--height-bound", type=int, default=3)
    p.add_argument("--max-steps", type=int, default=16)
    p.add_argument("--l-bound", type=int, default=None)
    common(p)

    p = sub.add_parser("verify-examples",
                       help="check the built-in worked identities")
    common(p)
    return parser


class _Emitter:
    def __init__(self, args):
        self.as_json = getattr(args, "json", False)
        self.command = args.command
        self.inputs = {}
        self.config = {}
        self.entries = []
        self.lines = []

    def input(self, name, value):
        self.inputs[name] = value

    def set_config(self, **kw):
        self.config.update(kw)

    def entry(self, data, text):
        self.entries.append(data)
        self.lines.append(text)

    def finish(self, verdict, code):
        if self.as_json:
            print(json.dumps({
                "command": self.command,
                "inputs": self.inputs,
                "config": self.config,
                "entries": self.entries,
                "verdict": verdict,
            }, indent=2))
        else:
            for line in self.lines:
                print(line)
            print(f"verdict: {verdict}")
        return code

    def fail(self, message):
        if self.as_json:
            print(json.dumps({
                "command": self.command,
                "inputs": self.inputs,
                "config": self.config,
                "entries": [],
                "verdict": message,
            }, indent=2))
        else:
            print(message, file=sys.stderr)


def _parse_d(text):
    return parse_poly(text)


def _default_l_bound(D):
    return D.degree + 10


def _cmd_cfrac(args, em):
    D = _parse_d(args.D)
    em.input("D", print_poly(D))
    steps = args.steps if args.steps is not None \
        else cfrac.default_max_steps(D)
    em.set_config(steps=steps)
    expansion = cfrac.expand(D, steps)
    for n, st in enumerate(expansion.steps):
        em.entry({
            "n": n,
            "partial_quotient": print_poly(st.partial_quotient),
            "convergent_p": print_poly(st.convergent_p),
            "convergent_q": print_poly(st.convergent_q),
        }, f"a_{n} = {print_poly(st.partial_quotient)}; "
           f"p_{n} = {print_poly(st.convergent_p)}; "
           f"q_{n} = {print_poly(st.convergent_q)}")
    return em.finish(f"{len(expansion.steps)} steps", EXIT_SOLVED)


def _cmd_pell(args, em):
    D = _parse_d(args.D)
    em.input("D", print_poly(D))
    max_steps = args.max_steps if args.max_steps is not None \
        else cfrac.default_max_steps(D)
    l_bound = args.l_bound if args.l_bound is not None else _default_l_bound(D)
    em.set_config(max_steps=max_steps, l_bound=l_bound)
    report = cfrac.solve_pell(D, max_steps)
    if report.solvable:
        em.entry({"engine": "cfrac", "A": print_poly(report.A),
                  "B": print_poly(report.B)},
                 f"A = {print_poly(report.A)}\nB = {print_poly(report.B)}")
        return em.finish("pellian", EXIT_SOLVED)
    if D.degree >= 4 and not isinstance(D.ctx, RationalFunctionField):
        target = factor_target(D, UniPoly.one(D.ctx))
        jac = solve_almost_pell_via_jacobian(HyperCurve(D), target, l_bound)
        if jac.status == "exact":
            w = jac.witness
            em.entry({"engine": "jacobian", "A": print_poly(w.A),
                      "B": print_poly(w.B)},
                     f"A = {print_poly(w.A)}\nB = {print_poly(w.B)}")
            return em.finish("pellian", EXIT_SOLVED)
    return em.finish("not pellian within bounds", EXIT_NOT_WITHIN)


def _cmd_almost_pell(args, em):
    D = _parse_d(args.D)
    F = parse_poly(args.F)
    if F.ctx != D.ctx:
        F = UniPoly(D.ctx, [D.ctx.coerce(c) for c in F.coeffs])
    em.input("D", print_poly(D))
    em.input("F", print_poly(F))
    max_steps = args.max_steps if args.max_steps is not None \
        else cfrac.default_max_steps(D)
    l_bound = args.l_bound if args.l_bound is not None else _default_l_bound(D)
    em.set_config(max_steps=max_steps, l_bound=l_bound)
    d = D.degree // 2
    if F.degree <= d - 1:
        report = cfrac.solve_almost_pell(D, F, max_steps)
        if report.status in ("exact", "up-to-constant"):
            em.entry({"engine": "cfrac", "status": report.status,
                      "A": print_poly(report.A), "B": print_poly(report.B),
                      "constant": str(report.constant)},
                     f"A = {print_poly(report.A)}\n"
                     f"B = {print_poly(report.B)}\n"
                     f"constant = {report.constant}")
            return em.finish(f"solvable ({report.status})", EXIT_SOLVED)
    try:
        reduced, _rm = reduce_common_roots(D, F)
        target = factor_target(D, reduced)
    except NonSplitTarget:
        em.entry({"notice": "F does not split over the base field; only "
                            "the continued fraction engine applies"},
                 "notice: F does not split; continued fraction engine only")
        return em.finish("not solvable within bounds", EXIT_NOT_WITHIN)
    jac = solve_almost_pell_via_jacobian(HyperCurve(D), target, l_bound)
    if jac.status in ("exact", "up-to-constant"):
        w = jac.witness
        em.entry({"engine": "jacobian", "status": jac.status,
                  "A": print_poly(w.A), "B": print_poly(w.B),
                  "constant": str(jac.constant)},
                 f"A = {print_poly(w.A)}\nB = {print_poly(w.B)}\n"
                 f"constant = {jac.constant}")
        return em.finish(f"solvable ({jac.status})", EXIT_SOLVED)
    return em.finish("not solvable within bounds", EXIT_NOT_WITHIN)


def _cmd_relation(args, em):
    D = _parse_d(args.D)
    em.input("D", print_poly(D))
    curve = HyperCurve(D)
    roots = []
    if args.roots.strip():
        for part in args.roots.split(","):
            roots.append(D.ctx.coerce(Fraction(part.strip())))
    l_bound = args.l_bound if args.l_bound is not None else _default_l_bound(D)
    em.set_config(g_bound=args.g_bound, l_bound=l_bound,
                  roots=[str(r) for r in roots])
    points = []
    for alpha in roots:
        above = curve.points_above(alpha)
        points.append(Divisor({above[0]: 1, INF_MINUS: -1}))
    relations, basis = relation_lattice(
        curve, points, [args.g_bound] * len(points), l_bound, hints=roots)
    for rel in relations:
        em.entry({"relation": rel}, f"relation: {rel}")
    for row in basis:
        em.entry({"basis_row": row}, f"basis: {row}")
    verdict = f"{len(relations)} relations, lattice rank {len(basis)}"
    return em.finish(verdict, EXIT_SOLVED)


def _cmd_order(args, em):
    D = _parse_d(args.D)
    em.input("D", print_poly(D))
    curve = HyperCurve(D)
    if args.alpha is not None:
        alpha = D.ctx.coerce(Fraction(args.alpha))
        above = curve.points_above(alpha)
        div = Divisor({above[0]: 1, INF_MINUS: -1})
        label = f"[({args.alpha})+ - inf-]"
        hints = [alpha]
    else:
        div = curve.infinity_difference()
        label = "[inf+ - inf-]"
        hints = []
    em.set_config(order_bound=args.order_bound, cls=label)
    result = order_of_class(curve, div, args.order_bound, hints=hints)
    if result is None:
        return em.finish(
            f"no order up to {args.order_bound}", EXIT_NOT_WITHIN)
    k, cert = result
    em.entry({"order": k, "R": print_poly(cert.R), "S": print_poly(cert.S)},
             f"order {k}: function ({print_poly(cert.R)}) "
             f"+ Y*({print_poly(cert.S)})")
    return em.finish(f"order {k}", EXIT_SOLVED)


def _cmd_scan(args, em):
    D = _parse_d(args.D)
    F = parse_poly(args.F)
    if not isinstance(D.ctx, RationalFunctionField):
        em.fail("input error: scan needs a family depending on t")
        return EXIT_INPUT
    if F.ctx != D.ctx:
        F = UniPoly(D.ctx, [D.ctx.coerce(c) for c in F.coeffs])
    em.input("D", print_poly(D))
    em.input("F", print_poly(F))
    family = Family(D, F)
    l_bound = args.l_bound if args.l_bound is not None \
        else _default_l_bound(D)
    em.set_config(height_bound=args.height_bound, max_steps=args.max_steps,
                  l_bound=l_bound)
    report = scan_family(family, args.height_bound, args.max_steps, l_bound)
    em.entry({"generic": report.generic_verdict},
             f"generic verdict: {report.generic_verdict}")
    solvable = 0
    for e in report.entries:
        data = {"t0": str(e.t0), "status": e.status}
        text = f"t0 = {e.t0}: {e.status}"
        if e.status == "solvable":
            solvable += 1
            data.update(engine=e.engine, A=print_poly(e.A),
                        B=print_poly(e.B), constant=str(e.constant))
            text += (f" [{e.engine}] A = {print_poly(e.A)}, "
                     f"B = {print_poly(e.B)}, constant = {e.constant}")
        elif e.reason:
            data["reason"] = e.reason
            text += f" ({e.reason})"
        em.entry(data, text)
    if solvable:
        return em.finish(f"{solvable} solvable specializations", EXIT_SOLVED)
    return em.finish("no solvable specialization within bounds",
                     EXIT_NOT_WITHIN)


def _cmd_verify_examples(args, em):
    failures = 0

    def check(name, ok):
        nonlocal failures
        em.entry({"example": name, "ok": bool(ok)},
                 f"{'PASS' if ok else 'FAIL'} {name}")
        if not ok:
            failures += 1

    A = parse_poly("2*X^5+1")
    B = parse_poly("2*X^2")
    D = parse_poly("X^6+X")
    check("(2X^5+1)^2 - (X^6+X)*(2X^2)^2 = 1",
          A * A - D * B * B == UniPoly.one(QQ))

    A = parse_poly("2*X^4-1")
    B = parse_poly("2")
    D = parse_poly("X*(X^7-X^3-1)")
    F = parse_poly("4*X+1")
    check("(2X^4-1)^2 - X(X^7-X^3-1)*2^2 = 4X+1",
          A * A - D * B * B == F)

    Dt = parse_poly("X^4+X^2+t*X")
    big = parse_poly("X^12+X^4+t")
    quartic = UniPoly.x(QQ_T) ** 4
    check("substitution identity D~(X^4) = X^4 * D(X)",
          Dt.compose(quartic) == quartic * big)

    A1 = parse_poly("X^2+1/2")
    B1 = parse_poly("1")
    try:
        _A, _B, c = beta_pullback(A1, B1, Fraction(1, 4))
        ok = c == Fraction(-1, 4)
    except PolypellError:
        ok = False
    check("beta pullback of the t0=1/4 witness (constant -1/4)", ok)

    if failures:
        return em.finish(f"{failures} examples failed", EXIT_INTERNAL)
    return em.finish("all examples verified", EXIT_SOLVED)


_HANDLERS = {
    "cfrac": _cmd_cfrac,
    "pell": _cmd_pell,
    "almost-pell": _cmd_almost_pell,
    "relation": _cmd_relation,
    "order": _cmd_order,
    "scan": _cmd_scan,
    "verify-examples": _cmd_verify_examples,
}


if __name__ == "__main__":
    sys.exit(main(argv=sys.argv[1:]))
