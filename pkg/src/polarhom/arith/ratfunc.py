"""Reduced univariate rational functions, partial fractions and conjugate sums."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from polarhom.arith.factor import factor_over
from polarhom.arith.numfield import NumberFieldElement, field_of, make_field
from polarhom.arith.poly import UniPoly, gcd, xgcd


class RatFunc:
    """num/den with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly | None = None):
        if not isinstance(num, UniPoly):
            num = UniPoly([num])
        den = UniPoly([1]) if den is None else (den if isinstance(den, UniPoly) else UniPoly([den]))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = UniPoly(), UniPoly([1])
            return
        g = gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lc
        self.num = num * (1 / lc)
        self.den = den * (1 / lc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc(({self.num}) / ({self.den}))"

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _c(self, other) -> "RatFunc":
        return other if isinstance(other, RatFunc) else RatFunc(other)

    def __add__(self, other) -> "RatFunc":
        o = self._c(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        return self + (-self._c(other))

    def __rsub__(self, other) -> "RatFunc":
        return self._c(other) - self

    def __mul__(self, other) -> "RatFunc":
        o = self._c(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        o = self._c(other)
        return RatFunc(self.num * o.den, self.den * o.num)

    def __call__(self, value):
        d = self.den(value)
        if d == 0:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num(value) / d

    def derivative(self) -> "RatFunc":
        return RatFunc(self.num.derivative() * self.den - self.num * self.den.derivative(), self.den * self.den)


@dataclass(frozen=True)
class PartialFractionTerm:
    pole: UniPoly      # monic irreducible
    order: int
    numerator: UniPoly  # degree < deg(pole)


def partial_fractions(f: RatFunc) -> tuple[UniPoly, list[PartialFractionTerm]]:
    """Polynomial part and full decomposition sum numerator/pole^order."""
    poly_part, rem = divmod(f.num, f.den)
    terms: list[PartialFractionTerm] = []
    if rem.is_zero():
        return poly_part, terms
    field = field_of(*f.num.coeffs, *f.den.coeffs)
    factors = factor_over(f.den, field)
    powers = [m ** k for m, k in factors]
    for idx, (m, k) in enumerate(factors):
        q = powers[idx]
        cof = UniPoly([1])
        for j, p in enumerate(powers):
            if j != idx:
                cof = cof * p
        # rem/den = A/q + ...; A = rem * cof^{-1} mod q
        g, s, _ = xgcd(cof, q)
        a = (rem * s) % q
        # m-adic expansion: a = sum c_j m^j, giving c_j / m^(k-j)
        j = 0
        while not a.is_zero():
            a, c = divmod(a, m)
            if not c.is_zero():
                terms.append(PartialFractionTerm(m, k - j, c))
            j += 1
    terms.sort(key=lambda t: ([str(c) for c in t.pole.coeffs], t.order))
    return poly_part, terms


def recombine(poly_part: UniPoly, terms: list[PartialFractionTerm]) -> RatFunc:
    total = RatFunc(poly_part)
    for t in terms:
        total = total + RatFunc(t.numerator, t.pole ** t.order)
    return total


def trace_sum(expr: RatFunc, conjugacy: UniPoly):
    """Sum of expr(a) over the roots a of the irreducible polynomial ``conjugacy``."""
    m = conjugacy.monic()
    if m.degree < 1:
        raise ValueError("conjugacy polynomial must have positive degree")
    if m.degree == 1:
        return expr(-m[0])
    K = make_field(m)
    a = K.gen()
    d = expr.den(a)
    if d == 0:
        raise ZeroDivisionError("expression has a pole at a root of the conjugacy polynomial")
    value = expr.num(a) / d
    if isinstance(value, NumberFieldElement):
        return value.trace()
    return Fraction(value) * m.degree


def field_trace(value) -> Fraction:
    """Absolute trace of a field value (rationals are their own trace)."""
    if isinstance(value, NumberFieldElement):
        return value.trace()
    return Fraction(value)
