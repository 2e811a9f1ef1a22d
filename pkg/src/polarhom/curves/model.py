"""Curves: the projective line and odd-degree hyperelliptic models y^2 = f(x)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from polarhom.arith.numfield import NumberField, NumberFieldElement, field_of, make_field, simplify
from polarhom.arith.poly import UniPoly, gcd


class CurveError(ValueError):
    """Invalid curve data or a point not on the curve."""


@dataclass(frozen=True)
class CurveModel:
    kind: str
    f: UniPoly | None = None

    def __post_init__(self):
        if self.kind == "p1":
            if self.f is not None:
                raise CurveError("the projective line takes no f")
        elif self.kind == "hyperelliptic_odd":
            if self.f is None or self.f.degree < 3 or self.f.degree % 2 == 0:
                raise CurveError("hyperelliptic model needs odd deg f >= 3")
            if not self.f.is_rational():
                raise CurveError("f must have rational coefficients")
            if gcd(self.f, self.f.derivative()).degree > 0:
                raise CurveError("f must be squarefree")
        else:
            raise CurveError(f"unknown curve kind {self.kind!r}")

    @classmethod
    def p1(cls) -> "CurveModel":
        return cls("p1")

    @classmethod
    def hyperelliptic(cls, coeffs) -> "CurveModel":
        return cls("hyperelliptic_odd", UniPoly(coeffs))

    @property
    def is_p1(self) -> bool:
        return self.kind == "p1"

    @property
    def genus(self) -> int:
        return 0 if self.is_p1 else (self.f.degree - 1) // 2

    def point(self, x, y=None) -> "CurvePoint":
        """Affine point; on P^1 the coordinate is ``x`` (often written z)."""
        x = simplify(x)
        if self.is_p1:
            if y is not None:
                raise CurveError("points of P^1 have a single coordinate")
            return CurvePoint(x, None, False)
        if y is None:
            raise CurveError("hyperelliptic points need y")
        y = simplify(y)
        field_of(x, y)
        if y * y != self.f(x):
            raise CurveError(f"({x}, {y}) is not on y^2 = {self.f.format('x')}")
        return CurvePoint(x, y, False)

    def infinity(self) -> "CurvePoint":
        return INFINITY

    def is_weierstrass(self, p: "CurvePoint") -> bool:
        return not self.is_p1 and not p.at_infinity and p.y == 0

    def involution(self, p: "CurvePoint") -> "CurvePoint":
        if self.is_p1 or p.at_infinity:
            return p
        return CurvePoint(p.x, simplify(-p.y), False)

    def describe(self) -> str:
        if self.is_p1:
            return "P^1"
        return f"y^2 = {self.f.format('x')} (genus {self.genus})"


@dataclass(frozen=True)
class CurvePoint:
    x: object
    y: object
    at_infinity: bool

    @property
    def field(self) -> NumberField | None:
        if self.at_infinity:
            return None
        return field_of(self.x, *(() if self.y is None else (self.y,)))

    @property
    def degree(self) -> int:
        """Number of geometric points in the Galois orbit this point stands for."""
        fld = self.field
        return 1 if fld is None else fld.degree

    def is_rational(self) -> bool:
        return self.field is None

    def sort_key(self):
        if self.at_infinity:
            return (1, ())
        coords = [self.x] + ([] if self.y is None else [self.y])
        return (0, tuple(_key(c) for c in coords))

    def __repr__(self) -> str:
        if self.at_infinity:
            return "Infinity"
        if self.y is None:
            return f"[{_fmt(self.x)}]"
        return f"({_fmt(self.x)}, {_fmt(self.y)})"


INFINITY = CurvePoint(None, None, True)


def _key(c):
    if isinstance(c, NumberFieldElement):
        return (1, tuple(c.field.minpoly.coeffs), c.coeffs)
    return (0, (), (Fraction(c),))


def _fmt(c) -> str:
    if isinstance(c, NumberFieldElement):
        return repr(c)
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class Fiber:
    """Both points over the roots of an irreducible m(x) (non-Weierstrass)."""

    minpoly: UniPoly

    @property
    def degree(self) -> int:
        return 2 * self.minpoly.degree

    def sort_key(self):
        return (2, tuple(self.minpoly.coeffs))

    def __repr__(self) -> str:
        return f"Fiber[{self.minpoly.format('x')}=0]"


class Divisor:
    """Integer-weighted finite set of places (points or full x-fibers)."""

    def __init__(self, terms: dict | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @property
    def degree(self) -> int:
        return sum(w * k.degree for k, w in self.terms.items())

    def weight(self, place) -> int:
        return self.terms.get(place, 0)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def __eq__(self, other) -> bool:
        return isinstance(other, Divisor) and self.terms == other.terms

    def __repr__(self) -> str:
        return " + ".join(f"{w}*{k!r}" for k, w in self.items()) or "0"


def root_field(m: UniPoly) -> tuple[NumberField | None, object]:
    """Field generated by a root of the irreducible m, and that root."""
    if m.degree == 1:
        return None, -m[0] / m[1]
    fld = make_field(m.monic())
    return fld, fld.gen()
