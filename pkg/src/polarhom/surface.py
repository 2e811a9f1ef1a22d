"""Polar 2-chains in the affine plane: rational 2-forms with poles on lines.

A line ax + by + c = 0 is parametrized as p(s) = p0 + s*d, with chart x = s
when b != 0 and y = s otherwise.  Residues follow the normal form
beta = (dl/l) ^ rho + eps, using dx^dy = dl ^ (a dy - b dx)/(a^2 + b^2).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from polarhom.arith.mpoly import MPoly
from polarhom.arith.poly import UniPoly
from polarhom.arith.scalar import Scalar
from polarhom.curves.differential import Differential1, residue_value
from polarhom.curves.model import CurvePoint

Line = tuple  # (a, b, c) meaning a*x + b*y + c


class ArrangementError(ValueError):
    """Pole lines violate the normal-crossing requirements."""


def make_line(a, b, c) -> Line:
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0 and b == 0:
        raise ArrangementError("degenerate line")
    return (a, b, c)


def line_chart(line: Line) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
    """Base point p0 and direction d of the chart p(s) = p0 + s*d."""
    a, b, c = line
    if b != 0:
        return (Fraction(0), -c / b), (Fraction(1), -a / b)
    return (-c / a, Fraction(0)), (Fraction(0), Fraction(1))


def _param(line: Line) -> tuple[UniPoly, UniPoly]:
    (x0, y0), (dx, dy) = line_chart(line)
    return UniPoly([x0, dx]), UniPoly([y0, dy])


def _restrict(p: MPoly, line: Line) -> UniPoly:
    xs, ys = _param(line)
    return _subst(p, xs, ys)


def _subst(p: MPoly, xs: UniPoly, ys: UniPoly) -> UniPoly:
    out = UniPoly()
    for (i, j), c in p.terms.items():
        out = out + (xs ** i) * (ys ** j) * c
    return out


def _lin(line: Line) -> MPoly:
    a, b, c = line
    return MPoly.linear([a, b], c)


def intersection(l1: Line, l2: Line):
    a1, b1, c1 = l1
    a2, b2, c2 = l2
    det = a1 * b2 - a2 * b1
    if det == 0:
        return None
    return ((b1 * c2 - b2 * c1) / det, (a2 * c1 - a1 * c2) / det)


def _proportional(l1: Line, l2: Line) -> bool:
    return all(l1[i] * l2[j] == l1[j] * l2[i] for i in range(3) for j in range(3))


@dataclass(frozen=True)
class Plane2Form:
    numerator: MPoly
    lines: tuple

    def __post_init__(self):
        lines = tuple(make_line(*ln) for ln in self.lines)
        object.__setattr__(self, "lines", lines)
        for l1, l2 in combinations(lines, 2):
            if _proportional(l1, l2):
                raise ArrangementError(f"repeated pole line {l1}")
        for trio in combinations(lines, 3):
            p = intersection(trio[0], trio[1])
            if p is not None and _eval_line(trio[2], p) == 0:
                raise ArrangementError(f"three pole lines meet at {p}")
            if p is None and intersection(trio[0], trio[2]) is None:
                raise ArrangementError("three parallel pole lines meet at one point at infinity")
        if not self.numerator.is_zero():
            for ln in lines:
                if _restrict(self.numerator, ln).is_zero():
                    raise ArrangementError(f"numerator vanishes on pole line {ln}")

    def is_zero(self) -> bool:
        return self.numerator.is_zero()


def _eval_line(line: Line, p) -> Fraction:
    return line[0] * p[0] + line[1] * p[1] + line[2]


def residue_along_line(beta: Plane2Form, line: Line) -> Differential1:
    line = make_line(*line)
    idx = [i for i, ln in enumerate(beta.lines) if _proportional(ln, line)]
    if not idx:
        raise ArrangementError(f"{line} is not a pole line")
    own = beta.lines[idx[0]]
    a, b, _ = own
    (_, _), (dx, dy) = line_chart(own)
    xs, ys = _param(own)
    num = _subst(beta.numerator, xs, ys) * ((a * dy - b * dx) / (a * a + b * b))
    den = UniPoly([1])
    for j, other in enumerate(beta.lines):
        if j != idx[0]:
            den = den * _subst(_lin(other), xs, ys)
    return Differential1.p1(num, den)


@dataclass
class LineChain1:
    terms: list = field(default_factory=list)  # (line, Differential1, Scalar)


def boundary2(beta: Plane2Form) -> LineChain1:
    if beta.is_zero():
        return LineChain1([])
    return LineChain1([(ln, residue_along_line(beta, ln), Scalar(1, 1)) for ln in beta.lines])


def plane_point(line: Line, s) -> tuple:
    """Projective key of the chart point s (a CurvePoint, possibly Infinity)."""
    (x0, y0), (dx, dy) = line_chart(line)
    if s.at_infinity:
        if dx != 0:
            return ("inf", Fraction(1), dy / dx)
        return ("inf", Fraction(0), Fraction(1))
    return ("aff", x0 + s.x * dx, y0 + s.x * dy)


def boundary1_lines(chain: LineChain1) -> dict:
    """Boundary of a line 1-chain: plane point -> Scalar."""
    from polarhom.polar.chains import form_poles

    out: dict = {}
    for line, w, weight in chain.terms:
        if w.is_zero():
            continue
        for s in form_poles(w):
            r = residue_value(w, s)
            if r == 0:
                continue
            key = plane_point(line, s)
            out[key] = out.get(key, Scalar(0, weight.tau_power + 1)) + weight * Scalar(r, 1)
    return {k: v for k, v in out.items() if not v.is_zero()}


@dataclass
class D2Report:
    points: list  # (point, line_i, line_j, res_i, res_j, sum)

    @property
    def ok(self) -> bool:
        return all(p[-1].is_zero() for p in self.points)


def d2_check(beta: Plane2Form) -> D2Report:
    chain = boundary2(beta)
    forms = {ln: (w, wt) for ln, w, wt in chain.terms}
    rows = []
    for l1, l2 in combinations(beta.lines, 2):
        p = intersection(l1, l2)
        if p is None or not forms:
            continue
        vals = []
        for ln in (l1, l2):
            w, wt = forms[ln]
            (x0, y0), (dx, dy) = line_chart(ln)
            s = (p[0] - x0) / dx if dx != 0 else (p[1] - y0) / dy
            vals.append(wt * Scalar(residue_value(w, CurvePoint(s, None, False)), 1))
        rows.append((p, l1, l2, vals[0], vals[1], vals[0] + vals[1]))
    return D2Report(rows)
