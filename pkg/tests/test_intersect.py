import cmath
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from polarhom.arith import MPoly
from polarhom.intersect import (
    AmbientPlane,
    EmbeddedCycle1,
    Form1,
    NonTransverse,
    PolarPrecondition,
    polar_intersection,
    residue_2form_along_curve,
    transverse_points,
)

x, y = MPoly.var(0), MPoly.var(1)
ONE, ZERO = MPoly.const(1), MPoly.const(0)
SX, SY = sympy.symbols("x y")
MU = AmbientPlane()


def to_sympy(p: MPoly):
    return sum(sympy.Rational(c.numerator, c.denominator) * SX ** i * SY ** j for (i, j), c in p.terms.items())


def points(groups):
    return sorted((g.x, g.y) for g in groups)


# -- transverse points -------------------------------------------------------------------------

def test_transverse_points_examples():
    assert points(transverse_points(y - x * x, y - 1)) == [(-1, 1), (1, 1)]
    assert points(transverse_points(y - x * x, y - x)) == [(0, 0), (1, 1)]
    with pytest.raises(NonTransverse):
        transverse_points(y - x * x, y - x * 2 + 1)


def test_transverse_points_conjugate_group():
    groups = transverse_points(y - x * x, y - 2)
    assert len(groups) == 1 and groups[0].degree == 2
    assert groups[0].x * groups[0].x == 2


def test_shared_component_rejected():
    with pytest.raises(NonTransverse):
        transverse_points((y - x) * (y + 1), (y - x) * (x - 3))


def test_vertical_lines_need_a_shear():
    assert points(transverse_points(x - 1, y * y - x - 3)) == [(1, -2), (1, 2)]


# -- residue of a 2-form along a curve -----------------------------------------------------------

def test_residue_2form_examples():
    F = y * y - x ** 3 + x * 4 - 4
    assert residue_2form_along_curve(ONE, F) == Form1(-ONE, ZERO, y * 2)
    # dx^dy/(xy) along x = 0 is dy/y
    rho = residue_2form_along_curve(ONE, x, y)
    assert rho == Form1(ZERO, ONE, y)
    assert residue_2form_along_curve(ZERO, F).is_zero()


polys2 = st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(-3, 3)), min_size=1, max_size=4)


def mk(ts):
    d = {}
    for i, j, c in ts:
        d[(i, j)] = d.get((i, j), 0) + c
    return MPoly(d, 2)


@settings(max_examples=40, deadline=None)
@given(polys2, polys2, polys2)
def test_residue_reproduces_normal_form(g, f, h):
    G, F, H = mk(g), mk(f) + x, mk(h)
    assume(not G.is_zero() and not H.is_zero())
    rho = residue_2form_along_curve(G, F, H)
    # (dF/F) ^ rho = (F_x Q - F_y P)/(D F) dx^dy must equal G/(H F) dx^dy
    Fx, Fy = to_sympy(F.diff(0)), to_sympy(F.diff(1))
    wedge = (Fx * to_sympy(rho.Q) - Fy * to_sympy(rho.P)) / to_sympy(rho.D)
    assert sympy.simplify(wedge - to_sympy(G) / to_sympy(H)) == 0


# -- polar intersection numbers --------------------------------------------------------------------

def test_polar_intersection_examples():
    A = EmbeddedCycle1(x - 1, Form1(ZERO, ONE))
    B = EmbeddedCycle1(y - 1, Form1(ONE, ZERO))
    assert polar_intersection(MU, A, B).value == -1
    A = EmbeddedCycle1(y - x * x, Form1(ONE, ZERO))
    assert polar_intersection(MU, A, B).value == 0
    zero = EmbeddedCycle1(y - x * x, Form1(ZERO, ZERO))
    assert polar_intersection(MU, zero, B).value == 0


def test_point_on_divisor_of_mu_rejected():
    amb = AmbientPlane(ONE, x * y)
    A = EmbeddedCycle1(x - 1, Form1(ZERO, ONE))
    B = EmbeddedCycle1(y, Form1(ONE, ZERO))
    with pytest.raises(PolarPrecondition):
        polar_intersection(amb, A, B)


def test_tangential_rejected():
    A = EmbeddedCycle1(y - x * x, Form1(ONE, ZERO))
    B = EmbeddedCycle1(y, Form1(ONE, ZERO))
    with pytest.raises(NonTransverse):
        polar_intersection(MU, A, B)


def _c(v):
    return complex(float(v))


def _ev(p: MPoly, X, Y):
    return sum(_c(c) * X ** i * Y ** j for (i, j), c in p.terms.items())


def numeric_intersection(amb, pA: list, B: EmbeddedCycle1, alpha: Form1, rng):
    """Float sum over the roots of B(x, pA(x)) with randomly scaled tangents."""
    A_F = y - MPoly({(i, 0): Fraction(c) for i, c in enumerate(pA)}, 2)
    xs = sympy.Poly(to_sympy(B.F).subs(SY, sum(c * SX ** i for i, c in enumerate(pA))), SX)
    roots = np.roots([float(c) for c in xs.all_coeffs()])
    total = 0j
    for X in roots:
        Y = sum(c * X ** i for i, c in enumerate(pA))
        s, t = complex(*rng.normal(size=2)), complex(*rng.normal(size=2))
        u = (s * _ev(A_F.diff(1), X, Y), -s * _ev(A_F.diff(0), X, Y))
        v = (t * _ev(B.F.diff(1), X, Y), -t * _ev(B.F.diff(0), X, Y))

        def form(f, w):
            return (_ev(f.P, X, Y) * w[0] + _ev(f.Q, X, Y) * w[1]) / _ev(f.D, X, Y)

        mu = _ev(amb.num, X, Y) / _ev(amb.den, X, Y)
        total += form(alpha, u) * form(B.form, v) / (mu * (u[0] * v[1] - u[1] * v[0]))
    return total


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(-3, 3), min_size=2, max_size=3),
    st.lists(st.tuples(st.integers(0, 2), st.integers(0, 1), st.integers(-3, 3)), min_size=1, max_size=4),
    polys2, polys2, st.integers(0, 10 ** 6),
)
def test_exact_sum_matches_floating_roots(pA, g, a, b, seed):
    # A: y = pA(x), B: G(x, y) = 0 with G linear in y
    G = mk(g) + y
    A = EmbeddedCycle1(y - MPoly({(i, 0): Fraction(c) for i, c in enumerate(pA)}, 2), Form1(mk(a), ZERO))
    B = EmbeddedCycle1(G, Form1(ZERO, mk(b)))
    amb = AmbientPlane(x * x + 1, ONE)
    assume(not A.form.is_zero() and not B.form.is_zero())
    try:
        exact = polar_intersection(amb, A, B)
    except (NonTransverse, PolarPrecondition):
        assume(False)
    num = numeric_intersection(amb, pA, B, A.form, np.random.default_rng(seed))
    assume(np.isfinite(num))
    assert abs(num - float(exact.value)) <= 1e-9 * max(1.0, abs(num))
    assert abs(num.imag) <= 1e-9 * max(1.0, abs(num))


@given(st.integers(-5, 5).filter(bool), st.integers(-5, 5).filter(bool))
def test_bilinear_in_forms(p, q):
    A = EmbeddedCycle1(y - x * x, Form1(ONE, x))
    B = EmbeddedCycle1(y - 2, Form1(ONE + x, ZERO))
    base = polar_intersection(MU, A, B).value
    scaled = polar_intersection(MU, EmbeddedCycle1(A.F, A.form.scaled(p)), EmbeddedCycle1(B.F, B.form.scaled(q)))
    assert scaled.value == p * q * base


def test_curve_equation_scaling_does_not_change_value():
    # rescaling F rescales the tangent used for it; the pairing must not notice
    A = EmbeddedCycle1(y - x * x, Form1(ONE, ZERO))
    B = EmbeddedCycle1(y - 3, Form1(x, ZERO))
    A2 = EmbeddedCycle1((y - x * x) * -7, A.form)
    assert polar_intersection(MU, A, B) == polar_intersection(MU, A2, B)
    assert cmath.isfinite(complex(float(polar_intersection(MU, A, B).value)))
