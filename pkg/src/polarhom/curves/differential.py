"""Rational differentials on curves: orders, residues, divisors."""
from __future__ import annotations

from fractions import Fraction

from polarhom.arith.factor import factor_over, factor_rational
from polarhom.arith.numfield import NumberFieldElement, field_of, make_field, simplify
from polarhom.arith.poly import UniPoly, gcd
from polarhom.arith.ratfunc import RatFunc
from polarhom.arith.scalar import Scalar
from polarhom.curves.local import local_coords
from polarhom.curves.model import INFINITY, CurveModel, CurvePoint, Divisor, Fiber, root_field
from polarhom.curves.series import Laurent, PrecisionError, poly_at

_MAX_TERMS = 1024


class HigherOrderPole(ValueError):
    """A residue was requested at a pole of order two or more."""


class Differential1:
    """(A + B*y)/C * dx/y on a hyperelliptic model, A/C * dz on P^1.

    The triple is kept reduced: gcd(A, B, C) = 1 and C monic.
    """

    __slots__ = ("curve", "A", "B", "C")

    def __init__(self, curve: CurveModel, A: UniPoly, B: UniPoly | None = None, C: UniPoly | None = None):
        A = A if isinstance(A, UniPoly) else UniPoly(A)
        B = UniPoly() if B is None else (B if isinstance(B, UniPoly) else UniPoly(B))
        C = UniPoly([1]) if C is None else (C if isinstance(C, UniPoly) else UniPoly(C))
        if C.is_zero():
            raise ZeroDivisionError("zero denominator")
        if curve.is_p1 and not B.is_zero():
            raise ValueError("differentials on P^1 have no y-part")
        if A.is_zero() and B.is_zero():
            C = UniPoly([1])
        else:
            g = gcd(gcd(A, B), C)
            if g.degree > 0:
                A, B, C = A // g, B // g, C // g
            inv = 1 / C.lc
            if inv != 1:
                A, B, C = A * inv, B * inv, C * inv
        self.curve = curve
        self.A, self.B, self.C = A, B, C

    @classmethod
    def p1(cls, num, den=None) -> "Differential1":
        return cls(CurveModel.p1(), num, None, den)

    # -- structure --------------------------------------------------------
    @property
    def r(self) -> RatFunc:
        if not self.curve.is_p1:
            raise AttributeError("r is only defined on P^1")
        return RatFunc(self.A, self.C)

    @property
    def field(self):
        return field_of(*self.A.coeffs, *self.B.coeffs, *self.C.coeffs)

    def is_zero(self) -> bool:
        return self.A.is_zero() and self.B.is_zero()

    def key(self):
        return (self.curve, self.A, self.B, self.C)

    def __eq__(self, other) -> bool:
        return isinstance(other, Differential1) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __add__(self, other: "Differential1") -> "Differential1":
        if other.curve != self.curve:
            raise ValueError("differentials live on different curves")
        return Differential1(
            self.curve,
            self.A * other.C + other.A * self.C,
            self.B * other.C + other.B * self.C,
            self.C * other.C,
        )

    def __neg__(self) -> "Differential1":
        return Differential1(self.curve, -self.A, -self.B, self.C)

    def __sub__(self, other: "Differential1") -> "Differential1":
        return self + (-other)

    def __mul__(self, c) -> "Differential1":
        if isinstance(c, Scalar):
            c = c.value
        return Differential1(self.curve, self.A * c, self.B * c, self.C)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return self.format()

    def format(self) -> str:
        if self.curve.is_p1:
            num = self.A.format("z")
            den = self.C.format("z")
            return f"({num})/({den}) dz" if self.C.degree > 0 else f"({num}) dz"
        parts = []
        if not self.A.is_zero():
            parts.append(f"({self.A.format('x')})")
        if not self.B.is_zero():
            parts.append(f"({self.B.format('x')})*y")
        num = " + ".join(parts) or "0"
        den = "" if self.C.degree == 0 else f"/({self.C.format('x')})"
        return f"[{num}]{den} dx/y"

    # -- local analysis --------------------------------------------------
    def expand(self, p: CurvePoint, terms: int) -> Laurent:
        x, y, dx = local_coords(self.curve, p, terms)
        den = poly_at(self.C, x)
        if self.curve.is_p1:
            return poly_at(self.A, x) * den.inverse(terms) * dx
        num = poly_at(self.A, x) + poly_at(self.B, x) * y
        return num * (den * y).inverse(terms) * dx


def ord_at(w: Differential1, p: CurvePoint) -> int:
    if w.is_zero():
        raise ValueError("order of the zero differential")
    terms = 8
    while terms <= _MAX_TERMS:
        s = w.expand(p, terms)
        if s.coeffs:
            return s.val
        terms *= 2
    raise PrecisionError("order not determined")  # pragma: no cover


def laurent_upto(w: Differential1, p: CurvePoint, k: int) -> Laurent:
    """Expansion known at least through t^k."""
    terms = 8
    while terms <= _MAX_TERMS:
        s = w.expand(p, terms)
        if s.prec is None or s.prec > k:
            return s
        terms *= 2
    raise PrecisionError("expansion did not reach the requested order")  # pragma: no cover


def residue_value(w: Differential1, p: CurvePoint):
    if w.is_zero():
        return Fraction(0)
    s = laurent_upto(w, p, -1)
    if s.coeffs and s.val < -1:
        raise HigherOrderPole(f"pole of order {-s.val} at {p!r}")
    return simplify(s.coefficient(-1))


def residue_at(w: Differential1, p: CurvePoint) -> Scalar:
    return Scalar(residue_value(w, p), 0)


# -- global analysis -----------------------------------------------------------

def _mult(m: UniPoly, p: UniPoly) -> int:
    if p.is_zero():
        return 10 ** 6
    k = 0
    while True:
        q, r = divmod(p, m)
        if not r.is_zero():
            return k
        k, p = k + 1, q


def _factors(p: UniPoly, fld):
    if p.degree <= 0:
        return []
    return [m for m, _ in factor_over(p, fld)]


def _place_root(m: UniPoly, fld):
    """A root of the irreducible factor m (over fld) and the field it lives in."""
    if m.degree == 1:
        return simplify(-m[0] / m[1])
    if fld is not None:
        raise NotImplementedError("places of degree > 1 over a non-rational base field")
    _, a = root_field(m)
    return a


def infinity_order(w: Differential1) -> int:
    curve = w.curve
    if curve.is_p1:
        return w.C.degree - w.A.degree - 2
    g = curve.genus
    cand = []
    if not w.A.is_zero():
        cand.append(-2 * w.A.degree)
    if not w.B.is_zero():
        cand.append(-2 * w.B.degree - 2 * g - 1)
    return min(cand) + 2 * w.C.degree + 2 * g - 2


def divisor_of(w: Differential1) -> Divisor:
    if w.is_zero():
        raise ValueError("divisor of the zero differential")
    curve = w.curve
    fld = w.field
    terms: dict = {}
    if curve.is_p1:
        for m in _unique(_factors(w.A, fld) + _factors(w.C, fld)):
            k = _mult(m, w.A) - _mult(m, w.C)
            if k:
                terms[CurvePoint(_place_root(m, fld), None, False)] = k
        terms[INFINITY] = infinity_order(w)
        return Divisor(terms)
    f = curve.f
    A, B, C = w.A, w.B, w.C
    g = gcd(A, B)
    A1, B1 = A // g, B // g
    n1 = A1 * A1 - B1 * B1 * f
    cands = _unique(_factors(C, fld) + _factors(g, fld) + _factors(n1, fld) + _factors(f, fld))
    for m in cands:
        a = _place_root(m, fld)
        mc = _mult(m, C)
        if f(a) == 0:
            ord_ = min(2 * _mult(m, A), 2 * _mult(m, B) + 1) - 2 * mc
            if ord_:
                terms[CurvePoint(a, Fraction(0), False)] = ord_
            continue
        base = _mult(m, g) - mc
        mu = _mult(m, n1)
        if mu == 0:
            if base:
                terms[Fiber(m.monic())] = base
            continue
        b0 = simplify(-A1(a) / B1(a))
        p0 = CurvePoint(a, b0, False)
        p1 = CurvePoint(a, simplify(-b0), False)
        if base + mu:
            terms[p0] = base + mu
        if base:
            terms[p1] = base
    terms[INFINITY] = infinity_order(w)
    return Divisor(terms)


def _unique(ms):
    out = []
    for m in ms:
        m = m.monic()
        if m not in out:
            out.append(m)
    return out


def fiber_points(curve: CurveModel, m: UniPoly) -> list[CurvePoint]:
    """One representative point per Galois orbit above the roots of the rational irreducible m.

    Orbits correspond to the factors of R(c) = Res_x(m(x), (c - kx)^2 - f(x))
    for a primitive element c = y + kx; on each factor field the x-coordinate
    is the root of gcd(m(x), (c - kx)^2 - f(x)). Above a root of f the
    orbit is the single Weierstrass orbit (theta, 0).
    """
    if (curve.f % m).is_zero():
        _, a = root_field(m)
        return [CurvePoint(a, Fraction(0), False)]
    if m.degree == 1:
        a = -m[0] / m[1]
        v = curve.f(a)
        r = _rational_sqrt(v)
        if r is not None:
            return [CurvePoint(a, r, False), CurvePoint(a, -r, False)]
        fld = make_field(UniPoly([-v, 0, 1]))
        return [CurvePoint(fld.element([a]), fld.gen(), False)]
    for k in range(12):
        pts = _fiber_points_shift(curve.f, m, k)
        if pts is not None:
            return pts
    raise ArithmeticError("no separating primitive element found")  # pragma: no cover


def _fiber_points_shift(f: UniPoly, m: UniPoly, k: int) -> list[CurvePoint] | None:
    # primitive element c = y + k*x
    R = _eliminant(f, m, k)
    if gcd(R, R.derivative()).degree > 0:
        return None
    out = []
    for r, _ in factor_rational(R):
        fld = make_field(r)
        c = fld.gen()
        emb = lambda v: fld.element([v])  # noqa: E731
        lin = UniPoly([c, fld.element([-k])])
        h = lin * lin - f.map_coeffs(emb)
        g = gcd(m.map_coeffs(emb), h)
        if g.degree != 1:
            return None
        a = simplify(-g[0] / g[1])
        out.append(CurvePoint(a, simplify(c - a * k), False))
    return out


def _eliminant(f: UniPoly, m: UniPoly, k: int) -> UniPoly:
    from polarhom.arith.mpoly import MPoly, bivariate_resultant

    x, c = MPoly.var(0, 2), MPoly.var(1, 2)
    mm = MPoly.from_univariate(m, 0, 2)
    h = (c - x * k) ** 2 - MPoly.from_univariate(f, 0, 2)
    return bivariate_resultant(mm, h, eliminate=0).monic()


def _rational_sqrt(v: Fraction):
    v = Fraction(v)
    if v < 0:
        return None
    from math import isqrt

    n, d = isqrt(v.numerator), isqrt(v.denominator)
    if n * n == v.numerator and d * d == v.denominator:
        return Fraction(n, d)
    return None


def pole_places(w: Differential1) -> list[tuple[CurvePoint | None, UniPoly | None, object]]:
    """Affine places where w may have poles, as (point, m, a).

    ``point`` is an orbit representative, or None for a fiber over a
    non-rational base field whose points are not constructed.
    """
    curve = w.curve
    fld = w.field
    out = []
    for m in _factors(w.C, fld):
        a = _place_root(m, fld)
        if curve.is_p1:
            out.append((CurvePoint(a, None, False), m, a))
        elif curve.f(a) == 0:
            out.append((CurvePoint(a, Fraction(0), False), m, a))
        elif fld is None:
            out.extend((p, m, a) for p in fiber_points(curve, m))
        else:
            r = _root_in(curve.f(a), fld)
            if r is None:
                out.append((None, m, a))
            else:
                out.extend((CurvePoint(a, s, False), m, a) for s in (r, simplify(-r)))
    return out


def _root_in(v, fld):
    from polarhom.arith.factor import roots_in

    rs = roots_in(UniPoly([-v, 0, 1]), fld)
    return simplify(rs[0]) if rs else None


def residue_sum_check(w: Differential1) -> Scalar:
    """Sum of all residues (exact); raises on higher-order poles."""
    if w.is_zero():
        return Scalar(0, 0)
    fld = w.field
    total = Fraction(0)
    done = set()
    for p, m, a in pole_places(w):
        if p is None:
            if m not in done:
                done.add(m)
                total = total + _fiber_residue(w, m, a)
            continue
        total = total + _orbit_sum(residue_value(w, p), p.degree, fld)
    total = total + residue_value(w, INFINITY)
    return Scalar(simplify(total), 0)


def _fiber_residue(w: Differential1, m: UniPoly, a):
    """Residue sum over both points above a root of m."""
    mc = _mult(m, w.C)
    if mc > 1:
        raise HigherOrderPole(f"pole of order {mc} over {m.format('x')}=0")
    return simplify(2 * w.B(a) / w.C.derivative()(a))


def _orbit_sum(v, degree: int, fld):
    """Sum of a value over the Galois orbit of its point (forms over Q only)."""
    if fld is not None:
        return v
    if isinstance(v, NumberFieldElement):
        return v.trace()
    return Fraction(v) * degree


def holomorphic_basis(curve: CurveModel) -> list[Differential1]:
    if curve.is_p1:
        return []
    return [Differential1(curve, UniPoly.monomial(i)) for i in range(curve.genus)]
