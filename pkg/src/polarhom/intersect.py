"""Polar intersection numbers of curves in a polarly oriented plane.

Intersection points with irrational coordinates are handled in groups: one
point over the number field cut out by an irreducible factor of a sheared
resultant, standing for all its conjugates.  Sums over a group are field
traces, so the result stays exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from polarhom.arith.factor import factor_rational
from polarhom.arith.mpoly import MPoly, bivariate_resultant
from polarhom.arith.numfield import NumberFieldElement, make_field, simplify
from polarhom.arith.poly import UniPoly, gcd
from polarhom.arith.scalar import Scalar


class NonTransverse(ValueError):
    """Two curves meet tangentially (or share a component)."""


class PolarPrecondition(ValueError):
    """An evaluation point sits on a pole or zero of the data."""


@dataclass(frozen=True)
class PointGroup:
    minpoly: UniPoly          # x-shear eliminant factor defining the group's field
    x: object
    y: object

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    def coords(self) -> tuple:
        return (self.x, self.y)


def _shear(p: MPoly, c: int) -> MPoly:
    # x -> X - c*y
    X, y = MPoly.var(0), MPoly.var(1)
    return p.substitute([X - y * c, y])


def _as_poly_in_y(p: MPoly, x0, emb) -> UniPoly:
    out: dict[int, object] = {}
    for (i, j), c in p.terms.items():
        out[j] = out.get(j, 0) + emb(c) * x0 ** i
    if not out:
        return UniPoly()
    return UniPoly([out.get(j, 0) for j in range(max(out) + 1)])


def _groups_for_shear(F: MPoly, G: MPoly, c: int) -> list[PointGroup] | None:
    Fc, Gc = _shear(F, c), _shear(G, c)
    if Fc.degree_in(1) <= 0 and Gc.degree_in(1) <= 0:
        return None
    r = bivariate_resultant(Fc, Gc, eliminate=1)
    if r.is_zero():
        raise NonTransverse("the curves share a component")
    if r.degree <= 0:
        return []
    out = []
    for m, _ in factor_rational(r):
        if m.degree == 1:
            X0 = -m[0] / m[1]
            emb = Fraction
        else:
            fld = make_field(m)
            X0 = fld.gen()
            emb = lambda v, fld=fld: fld.element([v])  # noqa: E731
        g = gcd(_as_poly_in_y(Fc, X0, emb), _as_poly_in_y(Gc, X0, emb))
        if g.degree == 0:
            continue  # common root at infinity only
        if g.degree > 1:
            return None
        y0 = simplify(-g[0] / g[1])
        x0 = simplify(X0 - y0 * c)
        out.append(PointGroup(m, x0, y0))
    return out


def jacobian(F: MPoly, G: MPoly, p) -> object:
    fx, fy = F.diff(0)(*p), F.diff(1)(*p)
    gx, gy = G.diff(0)(*p), G.diff(1)(*p)
    return simplify(fx * gy - fy * gx)


def transverse_points(F: MPoly, G: MPoly, max_shear: int = 12) -> list[PointGroup]:
    """Affine intersection points of F = 0 and G = 0, certified transverse."""
    for c in range(max_shear):
        groups = _groups_for_shear(F, G, c)
        if groups is not None:
            break
    else:
        raise ArithmeticError("no separating shear found")
    for grp in groups:
        if jacobian(F, G, grp.coords()) == 0:
            raise NonTransverse(f"tangential intersection at group {grp.minpoly.format('x')}: ({grp.x}, {grp.y})")
    return groups


def group_sum(values) -> Fraction:
    """Sum over all conjugates of each (group, value) pair."""
    total = Fraction(0)
    for grp, v in values:
        v = simplify(v)
        if isinstance(v, NumberFieldElement):
            total += v.trace()
        else:
            total += Fraction(v) * grp.degree
    return total


@dataclass(frozen=True)
class Form1:
    """(P dx + Q dy) / D in the plane's coordinates."""

    P: MPoly
    Q: MPoly
    D: MPoly = field(default_factory=lambda: MPoly.const(1))

    def __call__(self, p, u):
        d = self.D(*p)
        if d == 0:
            raise PolarPrecondition(f"1-form has a pole at {p}")
        return (self.P(*p) * u[0] + self.Q(*p) * u[1]) / d

    def is_zero(self) -> bool:
        return self.P.is_zero() and self.Q.is_zero()

    def scaled(self, c) -> "Form1":
        return Form1(self.P * c, self.Q * c, self.D)


def tangent(F: MPoly, p) -> tuple:
    return (F.diff(1)(*p), -F.diff(0)(*p))


@dataclass(frozen=True)
class AmbientPlane:
    """The affine plane with mu = (num/den) dx^dy."""

    num: MPoly = field(default_factory=lambda: MPoly.const(1))
    den: MPoly = field(default_factory=lambda: MPoly.const(1))

    def density(self, p):
        n, d = self.num(*p), self.den(*p)
        if n == 0 or d == 0:
            raise PolarPrecondition(f"point {p} lies on the divisor of the volume form")
        return n / d


@dataclass(frozen=True)
class EmbeddedCycle1:
    F: MPoly
    form: Form1


def residue_2form_along_curve(G: MPoly, F: MPoly, H: MPoly | None = None) -> Form1:
    """Residue of G/(H F) dx^dy along F = 0, i.e. G dy/(H F_x) = -G dx/(H F_y).

    Returned in the dx-form -G/(H F_y) dx; fixed by beta = (dF/F) ^ rho.
    """
    H = H if H is not None else MPoly.const(1)
    if G.is_zero():
        return Form1(MPoly.const(0), MPoly.const(0))
    fy = F.diff(1)
    if fy.is_zero():
        return Form1(MPoly.const(0), G, H * F.diff(0))
    return Form1(-G, MPoly.const(0), H * fy)


def polar_intersection(amb: AmbientPlane, A: EmbeddedCycle1, B: EmbeddedCycle1) -> Scalar:
    if A.form.is_zero() or B.form.is_zero():
        return Scalar(0, 0)
    vals = []
    for grp in transverse_points(A.F, B.F):
        p = grp.coords()
        u, v = tangent(A.F, p), tangent(B.F, p)
        det = u[0] * v[1] - u[1] * v[0]
        vals.append((grp, A.form(p, u) * B.form(p, v) / (amb.density(p) * det)))
    return Scalar(group_sum(vals), 0)
