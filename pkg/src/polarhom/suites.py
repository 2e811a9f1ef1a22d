"""Seeded reference suites: the homology tables, residue theorem, d^2 = 0,
Mayer-Vietoris exactness, intersection and linking numbers, and the Stokes oracle.

Every suite returns rows ``{"suite", "case", "expected", "computed", "pass"}``
built only from exact values or rounded decimals, so a report is a pure
function of the seed.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction

from polarhom.arith import MPoly, UniPoly
from polarhom.arith.factor import factor_rational
from polarhom.arith.numfield import make_field
from polarhom.curves import (
    INFINITY,
    CurveModel,
    Differential1,
    fiber_points,
    residue_sum_check,
    third_kind,
)
from polarhom.polar import PuncturedCurve, hp0_stabilized, hp1_punctured, hp_projective, mv_check
from polarhom.surface import ArrangementError, Plane2Form, boundary1_lines, boundary2, d2_check

P1 = CurveModel.p1()
ELLIPTIC = CurveModel.hyperelliptic([4, -4, 0, 1])  # y^2 = x^3 - 4x + 4
GENUS2 = CurveModel.hyperelliptic([1, 1, 0, 0, 0, 1])  # y^2 = x^5 + x + 1
FAMILIES = (("P1", P1), ("y^2=x^3-4x+4", ELLIPTIC), ("y^2=x^5+x+1", GENUS2))


def _row(suite: str, case: str, expected, computed, ok: bool | None = None) -> dict:
    if ok is None:
        ok = expected == computed
    return {"suite": suite, "case": case, "expected": expected, "computed": computed, "pass": bool(ok)}


def _frac(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# -- homology -------------------------------------------------------------------

def projective_rows(seed: int) -> list[dict]:
    rows = []
    for g, (name, C) in enumerate(FAMILIES):
        rows.append(_row("projective", f"{name} closed form", [1, g], list(hp_projective(C))))
        X = PuncturedCurve(C)
        rows.append(_row("projective", f"{name} finite support", [1, g], [hp0_stabilized(X, seed).value, hp1_punctured(X)]))
    return rows


def punctured_rows(seed: int) -> list[dict]:
    rows = []
    for (name, C), exp in zip(FAMILIES, ([2, 0], [1, 0], [1, 1])):
        X = PuncturedCurve(C, [INFINITY])
        rows.append(_row("punctured", f"{name} minus Infinity", exp, [hp0_stabilized(X, seed).value, hp1_punctured(X)]))
    return rows


def generic_pair(C: CurveModel) -> list:
    """Two points P, P' conjugate over Q(sqrt 2) with x = 1 +- sqrt 2.

    Their x-coordinates differ, so P' is not the hyperelliptic image of P.
    """
    return [fiber_points(C, UniPoly([-1, -2, 1]))[0]]


def special_rows(seed: int) -> list[dict]:
    C = GENUS2
    special = hp1_punctured(PuncturedCurve(C, [C.point(0, 1), C.point(0, -1)]))
    generic = hp1_punctured(PuncturedCurve(C, generic_pair(C)))
    return [
        _row("two punctures", "special {(0,1),(0,-1)}", 1, special),
        _row("two punctures", "generic pair over x^2-2x-1", 0, generic),
        _row("two punctures", "special minus generic", 1, special - generic),
    ]


# -- residue theorem --------------------------------------------------------------

def rational_points(C: CurveModel, height: int = 12) -> list:
    """Affine rational points with x = n/d, |n| <= height, d <= 4."""
    seen, out = set(), []
    for d in range(1, 5):
        for n in range(-height, height + 1):
            x = Fraction(n, d)
            if x in seen:
                continue
            seen.add(x)
            r = _sqrt_q(C.f(x))
            if r is not None:
                out.extend([C.point(x, r)] if r == 0 else [C.point(x, r), C.point(x, -r)])
    return out


def _sqrt_q(v: Fraction):
    v = Fraction(v)
    if v < 0:
        return None
    a, b = math.isqrt(v.numerator), math.isqrt(v.denominator)
    return Fraction(a, b) if a * a == v.numerator and b * b == v.denominator else None


def _rand_q(rng: random.Random, lo=-6, hi=6, den=4) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def _pool_p1(rng: random.Random) -> list:
    pts = {P1.point(_rand_q(rng)) for _ in range(4)} | {INFINITY}
    d = rng.choice([-3, -1, 2, 3, 5, 7])
    K = make_field(UniPoly([-d, 0, 1]))
    for _ in range(2):
        pts.add(P1.point(K.element([_rand_q(rng), Fraction(rng.choice([-2, -1, 1, 2]), rng.randint(1, 3))])))
    return sorted(pts, key=lambda p: repr(p.sort_key()))


def _pool_curve(C: CurveModel, rng: random.Random, rational: list) -> list:
    pts = set(rng.sample(rational, min(4, len(rational)))) | {INFINITY}
    if rng.random() < 0.15:
        # points over the field of a Weierstrass orbit
        factors = sorted((m for m, _ in factor_rational(C.f)), key=lambda m: (m.degree, repr(m.coeffs)))
        pts.add(fiber_points(C, rng.choice(factors))[0])
    else:
        while True:
            x0 = _rand_q(rng, -8, 8, 3)
            if C.f(x0) != 0 and _sqrt_q(C.f(x0)) is None:
                break
        pts.add(fiber_points(C, UniPoly([-x0, 1]))[0])
    return sorted(pts, key=lambda p: repr(p.sort_key()))


def random_third_kind(C: CurveModel, rng: random.Random, rational=None) -> Differential1:
    """Random rational combination of 1-3 third-kind differentials over one field."""
    pool = _pool_p1(rng) if C.is_p1 else _pool_curve(C, rng, rational)
    w = Differential1(C, UniPoly())
    for _ in range(rng.randint(1, 3)):
        P, Q = rng.sample(pool, 2)
        c = Fraction(rng.choice([-1, 1]) * rng.randint(1, 5), rng.randint(1, 3))
        w = w + third_kind(C, P, Q) * c
    return w


def residue_theorem_rows(seed: int, count: int = 100) -> list[dict]:
    rows = []
    for i, (name, C) in enumerate(FAMILIES):
        rng = random.Random(seed * 1009 + i)
        rational = None if C.is_p1 else rational_points(C)
        zero = nontrivial = 0
        for _ in range(count):
            w = random_third_kind(C, rng, rational)
            if not w.is_zero():
                nontrivial += 1
            if residue_sum_check(w).is_zero():
                zero += 1
        rows.append(_row("residue theorem", f"{name}: {count} combos ({nontrivial} nonzero)", f"{count}/{count} sums = 0", f"{zero}/{count} sums = 0"))
    return rows


# -- d^2 = 0 --------------------------------------------------------------------------

def random_arrangement(rng: random.Random, max_lines: int = 6) -> Plane2Form:
    k = rng.randint(2, max_lines)
    while True:
        lines = [(rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(k)]
        num = MPoly({(i, j): Fraction(rng.randint(-4, 4)) for i in range(3) for j in range(3 - i)}, 2)
        try:
            return Plane2Form(num, lines)
        except (ArrangementError, ValueError):
            continue


def d2_rows(seed: int, count: int = 50) -> list[dict]:
    rng = random.Random(seed * 1013 + 5)
    ok = points = 0
    for _ in range(count):
        rep = d2_check(random_arrangement(rng))
        ok += rep.ok
        points += len(rep.points)
    return [_row("d^2 = 0", f"{count} arrangements, {points} double points", f"{count}/{count}", f"{ok}/{count}")]


def d2_vanishing_row() -> dict:
    # numerator degree <= k - 3: no pole at infinity, so boundary of boundary is empty
    x, y = MPoly.var(0), MPoly.var(1)
    beta = Plane2Form(x + 2 * y, [(1, 0, 0), (0, 1, 0), (1, 1, -1), (1, -1, 2)])
    return _row("d^2 = 0", "4 lines, linear numerator: empty", 0, len(boundary1_lines(boundary2(beta))))


# -- Mayer-Vietoris -----------------------------------------------------------------------

def mv_configs(seed: int, count: int = 5) -> list:
    rng = random.Random(seed * 1019 + 7)
    pools = {
        "P1": [P1.point(0), P1.point(1), P1.point(-2), P1.point(Fraction(1, 2)), INFINITY],
        "y^2=x^3-4x+4": [ELLIPTIC.point(0, 2), ELLIPTIC.point(1, 1), ELLIPTIC.point(2, -2), ELLIPTIC.point(-2, 2), INFINITY],
        "y^2=x^5+x+1": [GENUS2.point(0, 1), GENUS2.point(0, -1), INFINITY],
    }
    out = []
    for i in range(count):
        name, C = FAMILIES[i % 3]
        pool = pools[name]
        S1 = rng.sample(pool, rng.randint(1, 2))
        S2 = rng.sample(pool, rng.randint(1, 2))
        out.append((name, C, S1, S2))
    return out


def mv_rows(seed: int) -> list[dict]:
    rows = []
    r = mv_check(P1, [P1.point(0)], [INFINITY], seed=seed)
    rows.append(_row("Mayer-Vietoris", "P1, S1={0}, S2={Infinity}: HP1(U12)->HP0(U1)+HP0(U2)->HP0(X)", [3, 4, 1], r.sequence[3:], r.ok and r.sequence[3:] == [3, 4, 1]))
    for name, C, S1, S2 in mv_configs(seed):
        r = mv_check(C, S1, S2, seed=seed)
        case = f"{name}, S1={S1}, S2={S2}"
        rows.append(_row("Mayer-Vietoris", case, "exact, alternating sum 0", "exact, alternating sum 0" if r.ok else "; ".join(r.failures()), r.ok and r.alternating_sum == 0))
    return rows


# -- intersection and linking ---------------------------------------------------------------

def intersection_rows() -> list[dict]:
    from polarhom.intersect import AmbientPlane, EmbeddedCycle1, Form1, polar_intersection

    x, y = MPoly.var(0), MPoly.var(1)
    one, zero = MPoly.const(1), MPoly.const(0)
    amb = AmbientPlane()
    a = polar_intersection(amb, EmbeddedCycle1(x - 1, Form1(zero, one)), EmbeddedCycle1(y - 1, Form1(one, zero)))
    b = polar_intersection(amb, EmbeddedCycle1(y - x * x, Form1(one, zero)), EmbeddedCycle1(y - 1, Form1(one, zero)))
    return [
        _row("intersection", "x=1 (dy) . y=1 (dx), mu = dx^dy", "-1", a.render()),
        _row("intersection", "y=x^2 (dx) . y=1 (dx), mu = dx^dy", "0", b.render()),
    ]


def linking_scene():
    from polarhom.linking import Ambient3, BoundingChain2, Plane, canonical_cycle

    s, t = MPoly.var(0), MPoly.var(1)
    C = canonical_cycle(Plane(1, 0, 0, -1), t * t - (s ** 3 - 4 * s + 4))
    S = BoundingChain2(Plane(0, 0, 1, -1), MPoly.const(1), t * t - s ** 3 - 2)
    return Ambient3(), C, S


def random_gamma(rng: random.Random):
    from polarhom.linking import Plane, Plane3Form

    n = rng.randint(2, 3)
    planes = tuple(
        Plane(rng.randint(-3, 3), rng.randint(1, 3) * rng.choice([-1, 1]), rng.randint(1, 3) * rng.choice([-1, 1]), rng.randint(-3, 3))
        for _ in range(n)
    )
    monos = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)][: 1 if n == 2 else 4]
    while True:
        N = MPoly({e: Fraction(rng.randint(-3, 3)) for e in monos}, 3)
        if not N.is_zero():
            return Plane3Form(N, planes)


def linking_rows(seed: int, count: int = 10) -> list[dict]:
    from polarhom.intersect import PolarPrecondition
    from polarhom.linking import boundary3, pairing, polar_linking, preserves_gamma, pushforward_chain, pushforward_cycle

    amb, C, S = linking_scene()
    base = polar_linking(amb, C, S)
    lam = (2, Fraction(1, 2), 1)
    moved = polar_linking(amb, pushforward_cycle(C, lam), pushforward_chain(S, lam))
    rows = [
        _row("linking", "value", "-1/2", base.render()),
        _row("linking", "(x,y,z)->(2x,y/2,z) preserves gamma", True, preserves_gamma(amb, lam)),
        _row("linking", "(x,y,z)->(2x,y/2,z) value", base.render(), moved.render()),
    ]
    rng = random.Random(seed * 1031 + 11)
    same = zero = skipped = 0
    done = 0
    while done < count:
        try:
            chains = boundary3(random_gamma(rng))
            standalone = sum((pairing(amb, C, ch) for ch in chains), Fraction(0))
            shifted = polar_linking(amb, C, [S] + chains)
        except PolarPrecondition:
            skipped += 1
            continue
        done += 1
        zero += standalone == 0
        same += shifted == base
    rows.append(_row("linking", f"{count} random Gamma: pairing with boundary3(Gamma) ({skipped} redrawn)", f"{count}/{count} zero", f"{zero}/{count} zero"))
    rows.append(_row("linking", f"{count} random Gamma: value after adding boundary3(Gamma)", f"{count}/{count} unchanged", f"{same}/{count} unchanged"))
    return rows


# -- Stokes ------------------------------------------------------------------------------------

def stokes_rows(tol: float = 1e-6) -> list[dict]:
    from polarhom.stokes import QuadratureConfig, packaged_configs, stokes_check

    rows = []
    cfg = QuadratureConfig(tol=tol)
    for name, w, v, expected in packaged_configs():
        r = stokes_check(w, v, cfg)
        ok = r.rel_error <= tol and (expected is None or abs(r.rhs - expected) <= 1e-12 * max(1.0, abs(expected)))
        rows.append(_row("Cauchy-Stokes", f"{name}: rel_error <= {tol:g}", True, ok))
        if r.rhs != 0:
            flipped = stokes_check(w, v, cfg, sign=-1)
            rows.append(_row("Cauchy-Stokes", f"{name}: sign-flipped control fails", True, flipped.rel_error > tol))
    return rows


SUITES = {
    "projective": projective_rows,
    "punctured": punctured_rows,
    "two-punctures": special_rows,
    "residue-theorem": residue_theorem_rows,
    "d2": lambda seed: d2_rows(seed) + [d2_vanishing_row()],
    "mayer-vietoris": mv_rows,
    "intersection": lambda seed: intersection_rows(),
    "linking": linking_rows,
    "stokes": lambda seed: stokes_rows(),
}


def reproduce(seed: int = 0, only=None) -> dict:
    rows = []
    for name, fn in SUITES.items():
        if only and name not in only:
            continue
        rows.extend(fn(seed))
    return {"seed": seed, "rows": rows, "all_pass": all(r["pass"] for r in rows)}
