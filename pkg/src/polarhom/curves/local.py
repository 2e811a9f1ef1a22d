"""Local parameters at points of a curve.

Conventions: x = a + t at finite points of P^1 and at non-Weierstrass affine
points, x = 1/t at infinity of P^1, t = y at Weierstrass points, and
x = t^-2 / lc(f) at infinity of a hyperelliptic model.
"""
from __future__ import annotations

from fractions import Fraction

from polarhom.arith.poly import UniPoly
from polarhom.curves.model import CurveModel, CurvePoint
from polarhom.curves.series import Laurent, poly_at


def local_coords(curve: CurveModel, p: CurvePoint, n: int):
    """Return (x(t), y(t) or None, dx/dt) with about ``n`` correct relative terms."""
    if curve.is_p1:
        if p.at_infinity:
            return Laurent(-1, [Fraction(1)]), None, Laurent(-2, [Fraction(-1)])
        return Laurent(0, [p.x, Fraction(1)]), None, Laurent.const(Fraction(1))
    f = curve.f
    if p.at_infinity:
        return _hyper_infinity(f, curve.genus, n)
    if p.y == 0:
        return _weierstrass(f, p.x, n)
    a, b = p.x, p.y
    shifted = f.compose(UniPoly([a, 1]))
    inv_b2 = 1 / (b * b)
    u = Laurent(0, [c * inv_b2 for c in shifted.coeffs])
    y = u.sqrt_one_plus(n) * b
    return Laurent(0, [a, Fraction(1)]), y, Laurent.const(Fraction(1))


def _hyper_infinity(f: UniPoly, g: int, n: int):
    lc = f.lc
    d = f.degree
    # U(t) = lc^(2g) t^(4g+2) f(t^-2/lc), constant term 1
    terms = [Fraction(0)] * (2 * d + 1)
    for k, c in enumerate(f.coeffs):
        terms[2 * d - 2 * k] = c * Fraction(lc) ** (2 * g - k)
    s = Laurent(0, terms).sqrt_one_plus(n)
    y = s * Laurent(-(2 * g + 1), [Fraction(1) / Fraction(lc) ** g])
    x = Laurent(-2, [1 / Fraction(lc)])
    dx = Laurent(-3, [Fraction(-2) / lc])
    return x, y, dx


def _weierstrass(f: UniPoly, e, n: int):
    shifted = f.compose(UniPoly([e, 1]))
    d = shifted.coeffs
    d1 = d[1]
    inv = 1 / d1
    h = UniPoly(d[2:])
    prec = n + 3
    # u = t^2/d1 is right mod t^4 and each pass gains two orders
    u = Laurent(2, [inv], 4)
    cur = 4
    while cur < prec:
        cur = min(prec, cur + 2)
        u = (Laurent(2, [Fraction(1)], cur) - u * u * poly_at(h, u)) * inv
    x = u + e
    y = Laurent(1, [Fraction(1)])
    return x, y, u.derivative()
