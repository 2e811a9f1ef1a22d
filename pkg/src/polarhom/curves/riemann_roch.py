"""Spaces of differentials with bounded poles and prescribed zeros.

Works over Q by default: a point with coordinates in a number field L stands
for its whole Galois orbit, and each L-valued condition contributes [L:Q]
rational rows.  With ``orbits=False`` every point is a single point and the
linear algebra runs over ``field`` (Q when None).
"""
from __future__ import annotations

from fractions import Fraction

from polarhom.arith.linalg import nullspace, solve
from polarhom.arith.numfield import NumberField, NumberFieldElement, coordinates, field_of
from polarhom.arith.poly import UniPoly
from polarhom.curves.differential import Differential1, residue_value
from polarhom.curves.local import local_coords
from polarhom.curves.model import INFINITY, CurveModel, CurvePoint
from polarhom.curves.series import Laurent, PrecisionError, poly_at


def x_minpoly(p: CurvePoint, orbits: bool) -> UniPoly:
    if orbits and isinstance(p.x, NumberFieldElement):
        return p.x.minpoly()
    return UniPoly([-p.x, 1])


def is_split(curve: CurveModel, p: CurvePoint) -> bool:
    """True when y is defined over Q(x), so P and its mirror image are separate orbits."""
    if curve.is_p1 or p.at_infinity:
        return True
    if not isinstance(p.x, NumberFieldElement):
        return p.degree == 1
    return p.x.minpoly().degree == p.degree


def _candidates(curve: CurveModel, C: UniPoly) -> list[Differential1]:
    c = C.degree
    if curve.is_p1:
        return [Differential1(curve, UniPoly.monomial(i), None, C) for i in range(c)]
    g = curve.genus
    out = [Differential1(curve, UniPoly.monomial(i), None, C) for i in range(g + c)]
    out += [Differential1(curve, UniPoly(), UniPoly.monomial(i), C) for i in range(c)]
    return out


def _conditions(curve: CurveModel, poles, zeros, orbits: bool) -> list[tuple[CurvePoint, int]]:
    """(point, bound): expansions at the point must have no terms below t^bound."""
    conds: dict[CurvePoint, int] = {}
    for p in poles:
        conds[p] = -1
    for p in poles:
        if curve.is_p1 or p.at_infinity or curve.is_weierstrass(p):
            continue
        q = curve.involution(p)
        if q not in conds and (not orbits or is_split(curve, p)):
            conds[q] = 0
    if INFINITY not in conds:
        conds[INFINITY] = 0
    for p in zeros:
        conds[p] = 1
    return sorted(conds.items(), key=lambda kv: kv[0].sort_key())


def _series_for(curve: CurveModel, p: CurvePoint, C: UniPoly, n_a: int, n_b: int, terms: int) -> list[Laurent]:
    x, y, dx = local_coords(curve, p, terms)
    inv_c = poly_at(C, x).inverse(terms)
    if curve.is_p1:
        base = inv_c * dx
        out, xp = [], Laurent.const(Fraction(1))
        for _ in range(n_a):
            out.append(xp * base)
            xp = xp * x
        return out
    base_b = inv_c * dx
    base_a = base_b * y.inverse(terms)
    out = []
    xp = Laurent.const(Fraction(1))
    powers = []
    for _ in range(max(n_a, n_b)):
        powers.append(xp)
        xp = xp * x
    out = [powers[i] * base_a for i in range(n_a)] + [powers[i] * base_b for i in range(n_b)]
    return out


def condition_matrix(curve: CurveModel, cands, C: UniPoly, conds, orbits: bool) -> list[list]:
    n_a = sum(1 for w in cands if w.B.is_zero())
    n_b = len(cands) - n_a
    rows: list[list] = []
    for p, bound in conds:
        terms = 16
        while True:
            series = _series_for(curve, p, C, n_a, n_b, terms)
            lo = min((s.val for s in series), default=bound)
            try:
                vals = [[s.coefficient(k) for s in series] for k in range(lo, bound)]
                break
            except PrecisionError:
                terms *= 2
                if terms > 4096:  # pragma: no cover
                    raise
        if orbits:
            d = p.degree
            for row in vals:
                coords = [coordinates(v, d) for v in row]
                for j in range(d):
                    rows.append([c[j] for c in coords])
        else:
            rows.extend(vals)
    return rows


def differential_space(
    curve: CurveModel, poles, zeros=(), field: NumberField | None = None, orbits: bool = True
) -> list[Differential1]:
    """Basis of differentials with at most simple poles in ``poles`` and zeros at ``zeros``."""
    poles = list(dict.fromkeys(poles))
    zeros = list(dict.fromkeys(zeros))
    if set(poles) & set(zeros):
        raise ValueError("a point cannot be both a pole and a zero")
    if not orbits:
        for p in poles + zeros:
            pf = p.field
            if pf is not None and pf != field:
                raise ValueError(f"{p!r} is not defined over {field}")
    C = UniPoly([1])
    seen = []
    for p in poles:
        if p.at_infinity:
            continue
        m = x_minpoly(p, orbits)
        if m not in seen:
            seen.append(m)
            C = C * m
    cands = _candidates(curve, C)
    if not cands:
        return []
    conds = _conditions(curve, poles, zeros, orbits)
    rows = condition_matrix(curve, cands, C, conds, orbits)
    kernel = nullspace(rows, len(cands)) if rows else [
        [Fraction(int(i == j)) for j in range(len(cands))] for i in range(len(cands))
    ]
    out = []
    for vec in kernel:
        w = _combine(curve, cands, vec)
        if not w.is_zero():
            out.append(w)
    return out


def _combine(curve, cands, vec) -> Differential1:
    A, B = UniPoly(), UniPoly()
    C = cands[0].C
    for c, w in zip(vec, cands):
        if c == 0:
            continue
        A = A + w.A * c * (C // w.C)
        B = B + w.B * c * (C // w.C)
    return Differential1(curve, A, B, C)


def third_kind(curve: CurveModel, P: CurvePoint, Q: CurvePoint) -> Differential1:
    """Simple poles at P and Q only, residue +1 at P and -1 at Q."""
    if P == Q:
        raise ValueError("third_kind needs two distinct points")
    fld = field_of(*(c for p in (P, Q) if not p.at_infinity for c in (p.x, p.y) if c is not None))
    if curve.is_p1:
        w = Differential1.p1([0])
        if not P.at_infinity:
            w = w + Differential1.p1([1], [-P.x, 1])
        if not Q.at_infinity:
            w = w - Differential1.p1([1], [-Q.x, 1])
        return w
    if not (curve.is_weierstrass(P) or curve.is_weierstrass(Q)):
        return _eta(curve, P) - _eta(curve, Q)
    return _solve_third_kind(curve, P, Q, fld)


def _eta(curve: CurveModel, p: CurvePoint) -> Differential1:
    if p.at_infinity:
        return Differential1(curve, UniPoly())
    half = Fraction(1, 2)
    return Differential1(curve, UniPoly([p.y * half]), UniPoly([half]), UniPoly([-p.x, 1]))


def _solve_third_kind(curve, P, Q, fld) -> Differential1:
    space = differential_space(curve, [P, Q], field=fld, orbits=False)
    row = [residue_value(w, P) for w in space]
    coeffs = solve([row], [Fraction(1)])
    if coeffs is None:  # pragma: no cover - the residue map onto P is surjective
        raise ArithmeticError("no differential with residue 1 at P")
    w = Differential1(curve, UniPoly())
    for c, b in zip(coeffs, space):
        if c != 0:
            w = w + b * c
    return w


def _orbit_rows(values, p: CurvePoint, orbits: bool) -> list[list]:
    if not orbits:
        return [list(values)]
    d = p.degree
    coords = [coordinates(v, d) for v in values]
    return [[c[j] for c in coords] for j in range(d)]


def residue_rows(forms, points, orbits: bool = True) -> list[list]:
    """Residues of ``forms`` at ``points``, one row per rational coordinate."""
    rows = []
    for p in points:
        rows.extend(_orbit_rows([residue_value(w, p) for w in forms], p, orbits))
    return rows


def vanishing_rows(forms, points, orbits: bool = True) -> list[list]:
    """Rows whose kernel is the combinations vanishing at every point."""
    from polarhom.curves.differential import laurent_upto

    rows = []
    for p in points:
        series = [laurent_upto(w, p, 0) if not w.is_zero() else None for w in forms]
        lo = min((s.val for s in series if s is not None and s.coeffs), default=0)
        for k in range(min(lo, 0), 1):
            vals = [Fraction(0) if s is None else s.coefficient(k) for s in series]
            rows.extend(_orbit_rows(vals, p, orbits))
    return rows
