import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polarhom.arith import Scalar, UniPoly, gcd
from polarhom.curves import (
    INFINITY,
    CurveError,
    CurveModel,
    Differential1,
    HigherOrderPole,
    differential_space,
    divisor_of,
    fiber_points,
    holomorphic_basis,
    ord_at,
    pole_places,
    residue_at,
    residue_sum_check,
    third_kind,
)
from polarhom.curves.model import Fiber

P1 = CurveModel.p1()
E = CurveModel.hyperelliptic([4, -4, 0, 1])
G2 = CurveModel.hyperelliptic([1, 1, 0, 0, 0, 1])
CURVES = [P1, E, G2]


def p1form(num, den=(1,)):
    return Differential1.p1(list(num), list(den))


# -- numeric oracle ------------------------------------------------------------------

def _ev(p: UniPoly, x: complex) -> complex:
    return sum(complex(float(c)) * x ** i for i, c in enumerate(p.coeffs))


def numeric_residue(w: Differential1, a: complex, b: complex | None = None, eps=1e-3, n=4096) -> complex:
    """(1/2 pi i) * contour integral of w around x = a, with y continued from b."""
    total = 0j
    f = w.curve.f
    for k in range(n):
        th = 2 * math.pi * k / n
        x = a + eps * cmath.exp(1j * th)
        dx = 1j * eps * cmath.exp(1j * th) * (2 * math.pi / n)
        if w.curve.is_p1:
            g = _ev(w.A, x) / _ev(w.C, x)
        else:
            y = b * cmath.sqrt(_ev(f, x) / _ev(f, a))
            g = (_ev(w.A, x) + _ev(w.B, x) * y) / (_ev(w.C, x) * y)
        total += g * dx
    return total / (2j * math.pi)


# -- curve models -------------------------------------------------------------------------

def test_curve_validation():
    assert (P1.genus, E.genus, G2.genus) == (0, 1, 2)
    with pytest.raises(CurveError):
        CurveModel.hyperelliptic([1, 0, 0, 0, 1])  # even degree
    with pytest.raises(CurveError):
        CurveModel.hyperelliptic([0, 0, 1, 1])  # x^2 (x + 1) not squarefree
    with pytest.raises(CurveError):
        E.point(1, 2)


# -- orders and divisors ----------------------------------------------------------------------

def test_ord_examples():
    assert ord_at(p1form([1], [0, 1]), P1.point(0)) == -1
    assert ord_at(p1form([1], [0, 0, 1]), INFINITY) == 0
    assert ord_at(Differential1(G2, UniPoly([1])), INFINITY) == 2


def test_ord_rejects_zero_form():
    with pytest.raises(ValueError):
        ord_at(p1form([0]), P1.point(0))


def test_divisor_examples():
    assert divisor_of(p1form([1])).terms == {INFINITY: -2}
    assert divisor_of(Differential1(G2, UniPoly([1]))).terms == {INFINITY: 2}
    d = divisor_of(p1form([-1, 1], [0, 1]))
    assert d.terms == {P1.point(1): 1, P1.point(0): -1, INFINITY: -2}
    assert d.degree == -2


def test_divisor_groups_conjugate_points():
    # dz/(z^2 - 2): the two poles form one orbit over Q(sqrt 2)
    d = divisor_of(p1form([1], [-2, 0, 1]))
    assert d.degree == -2
    assert sum(1 for k in d.terms if getattr(k, "degree", 1) == 2) == 1


def _random_form(C: CurveModel, data) -> Differential1:
    ints = st.integers(-3, 3)
    k = data.draw(st.integers(0, 3))
    den = UniPoly(data.draw(st.lists(ints, min_size=k, max_size=k)) + [1])
    if C.is_p1:
        num = UniPoly(data.draw(st.lists(ints, min_size=1, max_size=4)))
        return Differential1(C, num, None, den)
    A = UniPoly(data.draw(st.lists(ints, min_size=1, max_size=C.genus + 3)))
    B = UniPoly(data.draw(st.lists(ints, min_size=0, max_size=3)))
    return Differential1(C, A, B, den)


@settings(max_examples=100)
@given(st.data())
def test_divisor_degree_and_ord_agree(data):
    C = data.draw(st.sampled_from(CURVES))
    w = _random_form(C, data)
    if w.is_zero():
        return
    D = divisor_of(w)
    assert D.degree == 2 * C.genus - 2
    for place, k in D.items():
        if isinstance(place, Fiber):
            continue
        assert ord_at(w, place) == k


# -- residues --------------------------------------------------------------------------------

def test_residue_examples():
    w = p1form([1], [0, 1])
    assert residue_at(w, P1.point(0)) == Scalar(1, 0)
    assert residue_at(w, INFINITY) == Scalar(-1, 0)
    w = p1form([-1], [0, -1, 1])
    assert residue_at(w, P1.point(0)) == 1
    assert residue_at(w, P1.point(1)) == -1
    eta = Differential1(E, UniPoly([1]), UniPoly([Fraction(1, 2)]), UniPoly([-2, 1]))
    r = residue_at(eta, E.point(2, 2))
    assert r == Scalar(1, 0) and r.tau_power == 0


def test_residue_at_infinity_matches_large_contour():
    w = p1form([2, 1], [-6, 11, -6, 1])  # (z + 2)/((z-1)(z-2)(z-3)) dz
    n, R = 4096, 50.0
    total = sum(
        _ev(w.A, R * cmath.exp(1j * t)) / _ev(w.C, R * cmath.exp(1j * t)) * 1j * R * cmath.exp(1j * t)
        for t in np.linspace(0, 2 * math.pi, n, endpoint=False)
    ) * (2 * math.pi / n) / (2j * math.pi)
    # the residue at infinity is minus the counterclockwise integral around everything
    assert abs(float(residue_at(w, INFINITY).value) + total.real) < 1e-9


def test_higher_order_pole_rejected():
    with pytest.raises(HigherOrderPole):
        residue_at(p1form([1], [0, 0, 1]), P1.point(0))
    with pytest.raises(HigherOrderPole):
        residue_sum_check(p1form([1], [0, 0, 1]))


def test_residue_sum_examples():
    assert residue_sum_check(p1form([1], [0, 1])).is_zero()
    assert residue_sum_check(p1form([-1], [0, -1, 1])).is_zero()
    w = third_kind(E, E.point(2, 2), E.point(0, -2))
    assert residue_sum_check(w).is_zero()


def _simple_pole_form(C, data):
    ints = st.integers(-3, 3)
    while True:
        k = data.draw(st.integers(1, 3))
        den = UniPoly(data.draw(st.lists(ints, min_size=k, max_size=k)) + [1])
        if gcd(den, den.derivative()).degree == 0 and (C.is_p1 or gcd(den, C.f).degree == 0):
            break
    if C.is_p1:
        num = UniPoly(data.draw(st.lists(ints, min_size=1, max_size=k)))
        return Differential1(C, num, None, den)
    A = UniPoly(data.draw(st.lists(ints, min_size=1, max_size=C.genus + k)))
    B = UniPoly(data.draw(st.lists(ints, min_size=1, max_size=k)))
    return Differential1(C, A, B, den)


@settings(max_examples=60)
@given(st.data())
def test_residue_sum_zero_random(data):
    C = data.draw(st.sampled_from(CURVES))
    w = _simple_pole_form(C, data)
    if w.is_zero():
        return
    assert residue_sum_check(w) == Scalar(0, 0)


@settings(max_examples=40)
@given(st.data())
def test_residues_match_contour_integrals(data):
    C = data.draw(st.sampled_from(CURVES))
    w = _simple_pole_form(C, data)
    if w.is_zero():
        return
    for p, _, _ in pole_places(w):
        if p is None or not p.is_rational():
            continue
        a = complex(float(p.x))
        b = None if C.is_p1 else complex(float(p.y))
        if b == 0:
            continue  # Weierstrass: x is not a local parameter
        exact = residue_at(w, p).value
        assert abs(numeric_residue(w, a, b) - float(exact)) < 1e-6


# -- holomorphic basis and third kind ------------------------------------------------------------

def test_holomorphic_basis():
    assert holomorphic_basis(P1) == []
    assert holomorphic_basis(E) == [Differential1(E, UniPoly([1]))]
    assert holomorphic_basis(G2) == [Differential1(G2, UniPoly([1])), Differential1(G2, UniPoly([0, 1]))]
    for w in holomorphic_basis(G2):
        assert all(k >= 0 for _, k in divisor_of(w).items())


def test_third_kind_examples():
    assert third_kind(P1, P1.point(0), P1.point(1)) == p1form([-1], [0, -1, 1])
    assert third_kind(P1, P1.point(0), INFINITY) == p1form([1], [0, 1])
    eta = Differential1(E, UniPoly([1]), UniPoly([Fraction(1, 2)]), UniPoly([-2, 1]))
    assert third_kind(E, E.point(2, 2), INFINITY) == eta


def test_third_kind_rejects_equal_points():
    with pytest.raises(ValueError):
        third_kind(E, E.point(2, 2), E.point(2, 2))


def _points(C):
    if C.is_p1:
        return [P1.point(0), P1.point(Fraction(-3, 2)), P1.point(4), INFINITY]
    if C is E:
        pts = [E.point(0, 2), E.point(1, -1), E.point(2, 2), E.point(6, 14), E.point(-2, -2), INFINITY]
    else:
        pts = [G2.point(0, 1), G2.point(0, -1), INFINITY]
    pts += fiber_points(C, UniPoly([-3, 1]))
    return pts


@settings(max_examples=60)
@given(st.data())
def test_third_kind_residues(data):
    C = data.draw(st.sampled_from(CURVES))
    pts = _points(C)
    P, Q = data.draw(st.permutations(pts))[:2]
    w = third_kind(C, P, Q)
    assert residue_at(w, P) == 1
    assert residue_at(w, Q) == -1
    # holomorphic away from P and Q
    poles = {p for p, _, _ in pole_places(w) if p is not None and ord_at(w, p) < 0}
    if ord_at(w, INFINITY) < 0:
        poles.add(INFINITY)
    assert poles <= {P, Q}
    if w.field is None:
        assert all(v >= -1 for _, v in divisor_of(w).items())


def test_third_kind_at_weierstrass_points():
    W = fiber_points(E, E.f)[0]  # the cubic Weierstrass orbit
    w = third_kind(E, W, E.point(0, 2))
    assert residue_at(w, W) == 1
    assert residue_at(w, E.point(0, 2)) == -1
    assert residue_sum_check(w).is_zero()
    C = CurveModel.hyperelliptic([0, -1, 0, 1])  # y^2 = x^3 - x, rational Weierstrass points
    w = third_kind(C, C.point(0, 0), C.point(1, 0))
    assert residue_at(w, C.point(0, 0)) == 1 and residue_at(w, C.point(1, 0)) == -1
    assert residue_sum_check(w).is_zero()


# -- fibers and Riemann-Roch ----------------------------------------------------------------------

@given(st.sampled_from([E, G2]), st.sampled_from([UniPoly([-3, 1]), UniPoly([-2, 0, 1]), UniPoly([1, 0, 1]), UniPoly([1, 1, 1])]))
def test_fiber_points_lie_on_curve(C, m):
    if gcd(m, C.f).degree > 0:
        return
    pts = fiber_points(C, m)
    assert sum(p.degree for p in pts) == 2 * m.degree
    for p in pts:
        assert p.y * p.y == C.f(p.x)
        assert m(p.x) == 0


@pytest.mark.parametrize("C", CURVES)
def test_differential_space_dimension(C):
    # simple poles on an effective D of degree d > 0: g + d - 1 forms
    pts = _points(C)
    for k in range(1, 4):
        D = pts[:k]
        d = sum(p.degree for p in D)
        assert len(differential_space(C, D)) == C.genus + d - 1

