from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from polarhom.arith import MPoly
from polarhom.curves import Differential1
from polarhom.surface import (
    ArrangementError,
    Plane2Form,
    boundary1_lines,
    boundary2,
    d2_check,
    intersection,
    line_chart,
    residue_along_line,
)

X, Y, U, S = sympy.symbols("x y u s")


def mp(terms):
    return MPoly({(i, j): Fraction(c) for i, j, c in terms}, 2)


ONE = mp([(0, 0, 1)])


def sym_residue(num: MPoly, lines, k: int):
    """Poincare residue along lines[k] by an explicit change of variables.

    Off the line we move along w with l(w) = 1 (not the normal direction the
    library uses), so agreement checks that the residue only sees the chart.
    """
    a, b, c = (sympy.Rational(v.numerator, v.denominator) for v in lines[k])
    (x0, y0), (dx, dy) = (tuple(sympy.Rational(v.numerator, v.denominator) for v in pt) for pt in line_chart(lines[k]))
    w = (1 / a, 0) if a != 0 else (0, 1 / b)
    sub = {X: x0 + S * dx + U * w[0], Y: y0 + S * dy + U * w[1]}
    jac = sympy.Matrix([[w[0], dx], [w[1], dy]]).det()
    expr = sum(sympy.Rational(q.numerator, q.denominator) * X ** i * Y ** j for (i, j), q in num.terms.items())
    rest = 1
    for j, ln in enumerate(lines):
        if j != k:
            rest *= sum(sympy.Rational(v.numerator, v.denominator) * t for v, t in zip(ln, (X, Y, 1)))
    return sympy.simplify((expr / rest).subs(sub, simultaneous=True).subs(U, 0) * jac)


def as_sympy(w: Differential1):
    def ev(p):
        return sum(sympy.Rational(q.numerator, q.denominator) * S ** i for i, q in enumerate(p.coeffs))

    return ev(w.A) / ev(w.C)


# -- residue along a line ---------------------------------------------------------------------

def test_residue_along_line_examples():
    beta = Plane2Form(ONE, [(1, 0, 0), (0, 1, 0)])
    assert residue_along_line(beta, (1, 0, 0)) == Differential1.p1([1], [0, 1])
    assert residue_along_line(beta, (0, 1, 0)) == Differential1.p1([-1], [0, 1])
    assert residue_along_line(Plane2Form(ONE, [(1, 0, 0)]), (1, 0, 0)) == Differential1.p1([1], [1])


def test_residue_along_line_accepts_rescaled_line():
    beta = Plane2Form(ONE, [(1, 0, 0), (0, 1, 0)])
    assert residue_along_line(beta, (3, 0, 0)) == residue_along_line(beta, (1, 0, 0))


def test_residue_along_non_pole_line_rejected():
    with pytest.raises(ArrangementError):
        residue_along_line(Plane2Form(ONE, [(1, 0, 0)]), (0, 1, 0))


def test_boundary2_examples():
    chain = boundary2(Plane2Form(ONE, [(1, 0, 0), (0, 1, 0)]))
    assert [(ln, w) for ln, w, _ in chain.terms] == [
        ((1, 0, 0), Differential1.p1([1], [0, 1])),
        ((0, 1, 0), Differential1.p1([-1], [0, 1])),
    ]
    assert all(wt.tau_power == 1 and wt.value == 1 for _, _, wt in chain.terms)
    assert boundary2(Plane2Form(ONE, [])).terms == []
    # 1/(x(x-1)) = -1/x + 1/(x-1)
    par = boundary2(Plane2Form(ONE, [(1, 0, 0), (1, 0, -1)]))
    assert [w for _, w, _ in par.terms] == [Differential1.p1([-1], [1]), Differential1.p1([1], [1])]


# -- arrangements ------------------------------------------------------------------------------

small = st.integers(-3, 3)


@st.composite
def arrangements(draw, min_lines=1, max_lines=5):
    k = draw(st.integers(min_lines, max_lines))
    lines = draw(st.lists(st.tuples(small, small, small).filter(lambda t: t[0] or t[1]), min_size=k, max_size=k))
    return lines


@st.composite
def numerators(draw, max_degree=3):
    d = draw(st.integers(0, max_degree))
    terms = draw(st.lists(st.tuples(st.integers(0, d), st.integers(0, d), small), min_size=1, max_size=4))
    return mp([(i, j, c) for i, j, c in terms if i + j <= d])


def build(num, lines):
    try:
        return Plane2Form(num, lines)
    except ArrangementError:
        assume(False)


@settings(max_examples=40, deadline=None)
@given(numerators(), arrangements(max_lines=3), st.data())
def test_residue_matches_change_of_variables(num, lines, data):
    assume(not num.is_zero())
    beta = build(num, lines)
    k = data.draw(st.integers(0, len(beta.lines) - 1))
    ours = as_sympy(residue_along_line(beta, beta.lines[k]))
    assert sympy.simplify(ours - sym_residue(beta.numerator, beta.lines, k)) == 0


@settings(max_examples=30, deadline=None)
@given(numerators(), numerators(), arrangements(max_lines=4), st.integers(-3, 3))
def test_residue_linear_in_numerator(n1, n2, lines, lam):
    beta1, beta2 = build(n1, lines), build(n2, lines)
    combo = n1 + n2 * lam
    assume(not n1.is_zero() and not n2.is_zero() and not combo.is_zero())
    beta = build(combo, lines)
    for ln in beta.lines:
        lhs = residue_along_line(beta, ln)
        rhs = residue_along_line(beta1, ln) + residue_along_line(beta2, ln) * lam
        assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(numerators(), arrangements(min_lines=2, max_lines=6))
def test_d2_vanishes_at_every_double_point(num, lines):
    assume(not num.is_zero())
    beta = build(num, lines)
    rep = d2_check(beta)
    assert rep.ok
    n_points = sum(1 for l1, l2 in combinations(beta.lines, 2) if intersection(l1, l2) is not None)
    assert len(rep.points) == n_points
    for _, _, _, r1, r2, total in rep.points:
        # taking the residues in the other order flips the sign
        assert r1 == -r2 and total.is_zero()


@settings(max_examples=40, deadline=None)
@given(arrangements(min_lines=3, max_lines=6), st.data())
def test_boundary_of_boundary_is_zero(lines, data):
    # deg N <= k - 3 keeps the line at infinity out of the polar divisor
    num = data.draw(numerators(max_degree=len(lines) - 3))
    assume(not num.is_zero())
    beta = build(num, lines)
    assert boundary1_lines(boundary2(beta)) == {}


def test_d2_examples():
    rep = d2_check(Plane2Form(ONE, [(1, 0, 0), (0, 1, 0)]))
    assert len(rep.points) == 1
    p, _, _, r1, r2, total = rep.points[0]
    assert p == (0, 0) and r1.value == 1 and r2.value == -1 and total.is_zero()
    assert d2_check(Plane2Form(ONE, [])).ok


def test_arrangement_errors():
    with pytest.raises(ArrangementError):
        Plane2Form(ONE, [(1, 0, 0), (0, 1, 0), (1, 1, 0)])  # concurrent at the origin
    with pytest.raises(ArrangementError):
        Plane2Form(ONE, [(1, 0, 0), (1, 0, -1), (1, 0, 2)])  # parallel triple
    with pytest.raises(ArrangementError):
        Plane2Form(ONE, [(1, 0, 0), (2, 0, 0)])  # repeated
    with pytest.raises(ArrangementError):
        Plane2Form(mp([(1, 0, 1)]), [(1, 0, 0)])  # numerator x vanishes on x = 0
    with pytest.raises(ArrangementError):
        Plane2Form(ONE, [(0, 0, 1)])
