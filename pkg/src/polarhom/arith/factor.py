"""Factorization over Q (sympy backend) and over simple number fields (Trager)."""
from __future__ import annotations

from fractions import Fraction

import sympy

from polarhom.arith.mpoly import MPoly, bivariate_resultant
from polarhom.arith.numfield import NumberField, NumberFieldElement
from polarhom.arith.poly import UniPoly, gcd, squarefree_part

_Z = sympy.Symbol("z")


def _to_sympy(p: UniPoly) -> sympy.Poly:
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)], _Z, domain="QQ")


def _from_sympy(sp: sympy.Poly) -> UniPoly:
    return UniPoly([Fraction(int(c.p), int(c.q)) for c in reversed(sp.all_coeffs())])


def factor_rational(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Monic irreducible factors over Q with multiplicities."""
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if not p.is_rational():
        raise TypeError("factor_rational needs rational coefficients")
    if p.degree <= 0:
        return []
    _, facs = sympy.factor_list(_to_sympy(p))
    out = [(_from_sympy(f).monic(), k) for f, k in facs]
    out.sort(key=lambda fk: (fk[0].degree, [str(c) for c in fk[0].coeffs]))
    return out


def is_irreducible(p: UniPoly) -> bool:
    facs = factor_rational(p)
    return len(facs) == 1 and facs[0][1] == 1


def _lift_to_mpoly(p: UniPoly, field: NumberField) -> MPoly:
    """p(x) with coefficients in Q(t) as a polynomial in (x, t)."""
    terms = {}
    for i, c in enumerate(p.coeffs):
        cs = c.coeffs if isinstance(c, NumberFieldElement) else (Fraction(c),)
        for j, cj in enumerate(cs):
            if cj != 0:
                terms[(i, j)] = terms.get((i, j), 0) + cj
    return MPoly(terms, 2)


def norm_poly(p: UniPoly, field: NumberField, shift: int = 0) -> UniPoly:
    """Norm_{K/Q} of p(x - shift*t), a rational polynomial in x."""
    x, t = MPoly.var(0), MPoly.var(1)
    lifted = _lift_to_mpoly(p, field).substitute([x - t * shift, t])
    m = MPoly.from_univariate(field.minpoly, 1, 2)
    return bivariate_resultant(m, lifted, eliminate=1)


def factor_over(p: UniPoly, field: NumberField | None) -> list[tuple[UniPoly, int]]:
    """Monic irreducible factors of p over ``field`` (Q when None)."""
    if field is None or field.degree == 1:
        rat = p.map_coeffs(lambda c: c.to_rational() if isinstance(c, NumberFieldElement) else c)
        return factor_rational(rat)
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    out = []
    from polarhom.arith.poly import squarefree_factor

    for sqf, mult in squarefree_factor(p.map_coeffs(lambda c: _embed(c, field))):
        for irr in _factor_squarefree(sqf, field):
            out.append((irr, mult))
    return out


def _embed(c, field: NumberField):
    if isinstance(c, NumberFieldElement):
        return c
    return NumberFieldElement(field, [c])


def _factor_squarefree(p: UniPoly, field: NumberField) -> list[UniPoly]:
    if p.degree <= 1:
        return [p.monic()] if p.degree == 1 else []
    theta = field.gen()
    for shift in range(0, 20):
        n = norm_poly(p, field, shift)
        if n.degree > 0 and squarefree_part(n).degree == n.degree:
            break
    else:  # pragma: no cover - generic shifts always succeed in characteristic zero
        raise ArithmeticError("no squarefree norm found")
    factors = []
    rest = p
    for q, _ in factor_rational(n):
        # q(x + shift*theta) over K
        shifted = q.map_coeffs(lambda c: _embed(c, field)).compose(UniPoly([theta * shift, 1]))
        g = gcd(rest, shifted)
        if g.degree > 0:
            factors.append(g)
            rest = rest.exact_div(g)
    if rest.degree > 0:
        factors.append(rest.monic())
    factors.sort(key=lambda f: f.degree)
    return factors


def roots_in(p: UniPoly, field: NumberField | None) -> list:
    """Roots of p lying in ``field`` (rationals when None), without multiplicity."""
    out = []
    for f, _ in factor_over(p, field):
        if f.degree == 1:
            r = -f[0] / f[1]
            out.append(r)
    return out
