"""Parsing and canonical printing of polynomial expressions.

Grammar (whitespace ignored, no implicit multiplication):

    expr   := ('-')? term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' nat)?
    base   := rational | 'X' | 't' | '(' expr ')'

Rationals are lexed as a/b literals; exponents are nonnegative integer
literals.  An expression mentioning t parses over QQ(t), otherwise over QQ.
The printer emits descending powers with explicit '*' and '^' and rationals
as a/b; printing then reparsing is the identity.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .fields import QQ, QQ_T, RatFunc
from .poly import UniPoly


def parse_poly(text):
    """Parse an expression into a UniPoly over QQ or QQ(t)."""
    tokens = _lex(text)
    ctx = QQ_T if any(tok[0] == "t" for tok in tokens) else QQ
    parser = _Parser(tokens, ctx, text)
    poly = parser.expr()
    parser.expect("end")
    return poly


def _lex(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            num = int(text[i:j])
            if j < n and text[j] == "/":
                k = j + 1
                while k < n and text[k].isdigit():
                    k += 1
                if k == j + 1:
                    raise ParseError("expected digits after '/'", j + 1,
                                     ("integer",))
                tokens.append(("rational", Fraction(num, int(text[j + 1:k])),
                               i))
                i = k
            else:
                tokens.append(("integer", Fraction(num), i))
                i = j
            continue
        if ch == "X":
            tokens.append(("X", None, i))
        elif ch == "t":
            tokens.append(("t", None, i))
        elif ch in "+-*^()":
            tokens.append((ch, None, i))
        else:
            raise ParseError(f"unexpected character {ch!r}", i,
                             ("rational", "X", "t", "+", "-", "*", "^",
                              "(", ")"))
        i += 1
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, tokens, ctx, text):
        self.tokens = tokens
        self.pos = 0
        self.ctx = ctx
        self.text = text

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[0]}", tok[2],
                             (kind,))
        return self.advance()

    def expr(self):
        negate = False
        if self.peek()[0] == "-":
            self.advance()
            negate = True
        value = self.term()
        if negate:
            value = -value
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            value = value * self.factor()
        return value

    def factor(self):
        value = self.base()
        if self.peek()[0] == "^":
            self.advance()
            tok = self.peek()
            if tok[0] != "integer":
                raise ParseError(
                    "exponents must be nonnegative integer literals",
                    tok[2], ("integer",))
            self.advance()
            value = value ** int(tok[1])
        return value

    def base(self):
        tok = self.peek()
        if tok[0] in ("integer", "rational"):
            self.advance()
            return UniPoly.constant(self.ctx, self.ctx.coerce(tok[1]))
        if tok[0] == "X":
            self.advance()
            return UniPoly.x(self.ctx)
        if tok[0] == "t":
            self.advance()
            return UniPoly.constant(self.ctx, self.ctx.t())
        if tok[0] == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError(f"expected a value, found {tok[0]}", tok[2],
                         ("rational", "X", "t", "("))


def print_poly(p):
    """Canonical form: descending powers, explicit '*' and '^'."""
    if p.is_zero():
        return "0"
    parts = []
    for e in range(p.degree, -1, -1):
        c = p.coefficient(e)
        if not _nonzero(c):
            continue
        text, negative = _coefficient_text(c, e)
        if not parts:
            parts.append("-" + text if negative else text)
        else:
            parts.append(("-" if negative else "+") + text)
    return "".join(parts)


def _nonzero(c):
    return bool(c) if not isinstance(c, Fraction) else c != 0


def _coefficient_text(c, exponent):
    """(printed term, sign was extracted) for c*X^exponent."""
    if isinstance(c, RatFunc):
        body, negative = _ratfunc_text(c)
    else:
        negative = c < 0
        body = _fraction_text(-c if negative else c)
    if exponent == 0:
        return body, negative
    x_part = "X" if exponent == 1 else f"X^{exponent}"
    if body == "1":
        return x_part, negative
    return f"{body}*{x_part}", negative


def _fraction_text(q):
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _ratfunc_text(c):
    """Polynomial-in-t coefficients print as t-polynomials; a negative sign
    is extracted only from monomials so reparsing stays exact."""
    if not c.is_polynomial():
        raise ValueError(
            "cannot print a coefficient with a nontrivial denominator")
    num = c.num
    terms = [(e, num.coefficient(e)) for e in range(num.degree, -1, -1)
             if num.coefficient(e) != 0]
    if len(terms) == 1:
        e, q = terms[0]
        negative = q < 0
        q = -q if negative else q
        if e == 0:
            return _fraction_text(q), negative
        t_part = "t" if e == 1 else f"t^{e}"
        body = t_part if q == 1 else f"{_fraction_text(q)}*{t_part}"
        return body, negative
    parts = []
    for e, q in terms:
        sign = "-" if q < 0 else ("+" if parts else "")
        mag = -q if q < 0 else q
        if e == 0:
            body = _fraction_text(mag)
        else:
            t_part = "t" if e == 1 else f"t^{e}"
            body = t_part if mag == 1 else f"{_fraction_text(mag)}*{t_part}"
        parts.append(sign + body)
    return "(" + "".join(parts) + ")", False
