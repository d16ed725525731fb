"""Truncated Laurent series in descending powers of X.

A series stores coefficients for exponents ``top, top-1, ..., prec``;
``prec`` is the lowest exponent whose coefficient is known.  Series built
from polynomials are exact (``prec is None``): every lower coefficient is
genuinely zero.  Arithmetic propagates the weakest precision.
"""

from __future__ import annotations

from .errors import OddDegree, LeadingCoefficientNotASquare
from .poly import UniPoly


class LaurentSeries:
    __slots__ = ("ctx", "top", "coeffs", "prec")

    def __init__(self, ctx, top, coeffs, prec):
        """coeffs[i] is the coefficient of X^(top - i)."""
        self.ctx = ctx
        cs = [ctx.coerce(c) for c in coeffs]
        # strip leading zeros
        while cs and cs[0] == ctx.zero:
            cs.pop(0)
            top -= 1
        if prec is not None:
            cs = cs[: max(0, top - prec + 1)]
        if not cs:
            top = None
        self.top = top
        self.coeffs = tuple(cs)
        self.prec = prec

    @classmethod
    def from_poly(cls, p, prec=None):
        return cls(p.ctx, p.degree, list(reversed(p.coeffs)), prec)

    @classmethod
    def zero(cls, ctx, prec=None):
        return cls(ctx, None, (), prec)

    def is_zero_to_precision(self):
        return not self.coeffs

    def is_exact(self):
        return self.prec is None

    def coefficient(self, e):
        if self.top is None:
            if self.prec is None or e >= self.prec:
                return self.ctx.zero
            raise ValueError(f"coefficient at X^{e} below precision")
        if e > self.top:
            return self.ctx.zero
        if self.prec is not None and e < self.prec:
            raise ValueError(f"coefficient at X^{e} below precision")
        i = self.top - e
        if i < len(self.coeffs):
            return self.coeffs[i]
        return self.ctx.zero

    def _known_down_to(self):
        if self.prec is not None:
            return self.prec
        if self.top is None:
            return None  # exact zero: known everywhere
        return None

    def truncate(self, prec):
        """Forget coefficients below ``prec``."""
        if self.prec is not None and prec < self.prec:
            raise ValueError("cannot truncate below current precision")
        if self.top is None:
            return LaurentSeries(self.ctx, None, (), prec)
        return LaurentSeries(self.ctx, self.top, self.coeffs, prec)

    def polynomial_part(self):
        """Sum of the terms with nonnegative exponent, as a UniPoly."""
        if self.top is None or self.top < 0:
            return UniPoly.zero(self.ctx)
        out = [self.ctx.zero] * (self.top + 1)
        for i, c in enumerate(self.coeffs):
            e = self.top - i
            if e < 0:
                break
            out[e] = c
        return UniPoly(self.ctx, out)

    # -- arithmetic ----------------------------------------------------

    def _meet_prec(self, other):
        if self.prec is None:
            return other.prec
        if other.prec is None:
            return self.prec
        return max(self.prec, other.prec)

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        prec = self._meet_prec(other)
        lo_candidates = []
        for s in (self, other):
            if s.top is not None:
                lo_candidates.append(s.top - len(s.coeffs) + 1)
        if prec is not None:
            lo_candidates.append(prec)
        if not lo_candidates:
            return LaurentSeries.zero(self.ctx, prec)
        lo = min(lo_candidates)
        tops = [s.top for s in (self, other) if s.top is not None]
        if not tops:
            return LaurentSeries.zero(self.ctx, prec)
        top = max(tops)
        out = []
        for e in range(top, lo - 1, -1):
            out.append(self._coeff_or_zero(e) + other._coeff_or_zero(e))
        return LaurentSeries(self.ctx, top, out, prec)

    def _coeff_or_zero(self, e):
        if self.top is None or e > self.top:
            return self.ctx.zero
        i = self.top - e
        if i < len(self.coeffs):
            return self.coeffs[i]
        return self.ctx.zero

    def __neg__(self):
        return LaurentSeries(self.ctx, self.top if self.top is not None else None,
                             [-c for c in self.coeffs], self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        ctx = self.ctx
        if self.top is None or other.top is None:
            # at least one operand is zero to its precision
            if self.top is None and other.top is None:
                if self.prec is None or other.prec is None:
                    prec = None
                else:
                    prec = self.prec + other.prec
            elif self.top is None:
                prec = None if self.prec is None else self.prec + other.top
            else:
                prec = None if other.prec is None else other.prec + self.top
            return LaurentSeries.zero(ctx, prec)
        top = self.top + other.top
        prec = None
        if self.prec is not None:
            prec = self.prec + other.top
        if other.prec is not None:
            p2 = other.prec + self.top
            prec = p2 if prec is None else max(prec, p2)
        lo = top - (len(self.coeffs) + len(other.coeffs) - 2)
        if prec is not None:
            lo = max(lo, prec)
        z = ctx.zero
        out = [z] * (top - lo + 1)
        for i, a in enumerate(self.coeffs):
            if a == z:
                continue
            ea = self.top - i
            for j, b in enumerate(other.coeffs):
                e = ea + (other.top - j)
                if e < lo:
                    break
                out[top - e] = out[top - e] + a * b
        return LaurentSeries(ctx, top, out, prec)

    def inverse(self, prec):
        """Multiplicative inverse, computed down to exponent ``prec``."""
        if self.top is None:
            raise ZeroDivisionError("inverse of a zero series")
        ctx = self.ctx
        u = self.coeffs[0]
        top = -self.top
        if self.prec is not None and prec < self.prec - 2 * self.top:
            raise ValueError("operand precision too small for requested inverse")
        n = top - prec + 1
        inv = [ctx.zero] * n
        inv[0] = ctx.one / u
        for k in range(1, n):
            # coefficient of X^(self.top + top - k) in self*inv must vanish
            s = ctx.zero
            for j in range(1, min(k, len(self.coeffs) - 1) + 1):
                s = s + self.coeffs[j] * inv[k - j]
            inv[k] = -s / u
        return LaurentSeries(ctx, top, inv, prec)

    def __repr__(self):
        terms = ", ".join(f"X^{self.top - i}: {c}" for i, c in enumerate(self.coeffs))
        return f"LaurentSeries({terms}; prec={self.prec})"


def sqrt_series(d, prec):
    """Canonical square root of an even-degree polynomial as a Laurent series.

    The result s has s^2 == d on every exponent down to ``prec`` and its
    leading coefficient is the canonical square root of the leading
    coefficient of d.
    """
    if d.is_zero() or d.degree % 2 != 0:
        raise OddDegree("sqrt series needs a nonzero even-degree polynomial")
    ctx = d.ctx
    lead_root = ctx.sqrt(d.lead)
    if lead_root is None:
        raise LeadingCoefficientNotASquare(
            "leading coefficient is not a square in the field")
    half = d.degree // 2
    n = half - prec + 1
    if n < 1:
        n = 1
    c = [ctx.zero] * n  # c[i] is the coefficient of X^(half - i)
    c[0] = lead_root
    two_lead = lead_root + lead_root
    for k in range(1, n):
        # match the coefficient of X^(2*half - k) in s^2 with d
        s = d.coefficient(2 * half - k)
        for i in range(1, k):
            j = k - i
            if i < n and j < n:
                s = s - c[i] * c[j]
        c[k] = s / two_lead
    return LaurentSeries(ctx, half, c, half - n + 1)
