import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from polarhom.arith import MPoly, Scalar
from polarhom.intersect import Form1, NonTransverse, PolarPrecondition
from polarhom.linking import (
    Ambient3,
    BoundingChain2,
    Plane,
    PlaneCycle1,
    Plane3Form,
    boundary3,
    canonical_cycle,
    pairing,
    polar_linking,
    preserves_gamma,
    pushforward_chain,
    pushforward_cycle,
    verify_bounding,
)
from polarhom.suites import linking_scene, random_gamma

s, t = MPoly.var(0), MPoly.var(1)
ONE = MPoly.const(1)
GAMMA = Ambient3()
LAM = (2, Fraction(1, 2), 1)


def mp3(terms):
    return MPoly({e: Fraction(c) for e, c in terms.items()}, 3)


def test_linking_value_of_packaged_scene():
    amb, C, S = linking_scene()
    assert polar_linking(amb, C, S) == Scalar(Fraction(-1, 2), 0)


def test_zero_form_links_trivially():
    amb, C, S = linking_scene()
    zero = PlaneCycle1(C.plane, C.F, Form1(MPoly.const(0), MPoly.const(0)))
    assert polar_linking(amb, zero, S).is_zero()


def test_diagonal_substitution():
    amb, C, S = linking_scene()
    assert preserves_gamma(amb, LAM)
    moved = polar_linking(amb, pushforward_cycle(C, LAM), pushforward_chain(S, LAM))
    assert moved == polar_linking(amb, C, S)
    flat = Ambient3(mp3({(0, 0, 0): 1}), mp3({(0, 0, 0): 1}))
    assert preserves_gamma(flat, (2, Fraction(1, 2), 1))
    assert not preserves_gamma(flat, (2, 1, 1))


@pytest.mark.parametrize("lam", [(3, 1, Fraction(1, 3)), (Fraction(-1, 2), 5, 7)])
def test_any_diagonal_preserves_dlog_volume(lam):
    amb, C, S = linking_scene()
    assert preserves_gamma(amb, lam)
    assert polar_linking(amb, pushforward_cycle(C, lam), pushforward_chain(S, lam)) == polar_linking(amb, C, S)


# -- boundaries of 3-chains -----------------------------------------------------------------

def test_boundary3_examples():
    z_plane = Plane(0, 0, 1, 0)
    (b,) = boundary3(Plane3Form(mp3({(0, 0, 0): 1}), (z_plane,)))
    assert b.plane == z_plane and b.G == ONE and b.H == ONE and b.weight == Scalar(1, 1)
    assert boundary3(Plane3Form(mp3({(0, 0, 0): 1}), ())) == []
    planes = (Plane(1, 0, 0, 0), Plane(0, 1, 0, 0), Plane(0, 0, 1, 0))
    bx, by, bz = boundary3(Plane3Form(mp3({(0, 0, 0): 1}), planes))
    # dx^dy^dz = dx ^ (dy^dz) = dy ^ (-dx^dz) = dz ^ (dx^dy)
    assert (bx.G, bx.H) == (ONE, s * t)
    assert (by.G, by.H) == (-ONE, s * t)
    assert (bz.G, bz.H) == (ONE, s * t)


def test_boundary3_rejects_repeated_plane():
    with pytest.raises(ValueError):
        Plane3Form(mp3({(0, 0, 0): 1}), (Plane(1, 0, 0, 1), Plane(2, 0, 0, 2)))


def _try_linking(amb, C, S):
    try:
        return polar_linking(amb, C, S)
    except (PolarPrecondition, NonTransverse):
        return None


@pytest.mark.parametrize("seed", range(10))
def test_adding_a_boundary_does_not_change_linking(seed):
    amb, C, S = linking_scene()
    base = polar_linking(amb, C, S)
    rng = random.Random(seed)
    for _ in range(50):
        chains = boundary3(random_gamma(rng))
        alone = _try_linking(amb, C, chains)
        if alone is not None:
            break
    else:
        pytest.fail("no admissible Gamma drawn")
    assert alone.is_zero()
    assert polar_linking(amb, C, [S] + chains) == base


# -- verify_bounding ----------------------------------------------------------------------------

def test_verify_bounding_cases():
    P = Plane(0, 0, 1, 0)
    F = t * t - s ** 3 + s * 4 - 4
    C = canonical_cycle(P, F)
    # the residue of G ds^dt/F is -G ds/F_t
    assert verify_bounding(BoundingChain2(P, -ONE, F), C) == (True, "ok")
    assert not verify_bounding(BoundingChain2(P, ONE, F), C)[0]
    assert not verify_bounding(BoundingChain2(P, MPoly.const(-2), F), C)[0]
    ok, why = verify_bounding(BoundingChain2(P, -s, F * s), C)
    assert not ok and "pole" in why
    assert not verify_bounding(BoundingChain2(Plane(0, 0, 1, -1), -ONE, F), C)[0]


def test_verify_bounding_accepts_rescaled_equation():
    P = Plane(0, 0, 1, 0)
    F = t * t - s ** 3 + s * 4 - 4
    assert verify_bounding(BoundingChain2(P, MPoly.const(-3), F * 3), canonical_cycle(P, F))[0]


# -- numeric oracle -----------------------------------------------------------------------------

def _ev(p: MPoly, *X):
    return sum(complex(float(c)) * np.prod([X[k] ** e[k] for k in range(len(e))]) for e, c in p.terms.items())


def numeric_pairing(c, F, k, H, rng):
    """C in {x = c} with coordinates (y, z); S in {z = k} with (x, y), beta = dx^dy/H."""
    ys = np.roots([complex(float(v)) for v in reversed(_coeffs_in_s(F, k))])
    total = 0j
    for y in ys:
        Fs, Ft = _ev(F.diff(0), y, k), _ev(F.diff(1), y, k)
        lam = complex(*rng.normal(size=2))
        u = lam * np.array([0, Ft, -Fs])
        alpha = u[1] / Ft  # ds / F_t evaluated on u
        # a random basis of the chain's tangent plane; beta scales by its determinant
        M = rng.normal(size=(2, 2))
        w1, w2 = M @ np.array([[1.0, 0, 0], [0, 1.0, 0]])
        beta = np.linalg.det(M) / _ev(H, c, y)
        gamma = np.linalg.det(np.array([u, w1, w2])) / (c * y * k)
        total += alpha * beta / gamma
    return total


def _coeffs_in_s(F: MPoly, k):
    out = {}
    for (i, j), v in F.terms.items():
        out[i] = out.get(i, 0) + v * Fraction(k) ** j
    n = max((i for i, v in out.items() if v != 0), default=0)
    return [out.get(i, 0) for i in range(n + 1)]


@settings(max_examples=40, deadline=None)
@given(
    st.integers(-3, 3).filter(bool), st.integers(-3, 3).filter(bool),
    st.lists(st.tuples(st.integers(0, 3), st.integers(0, 2), st.integers(-3, 3)), min_size=1, max_size=4),
    st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(-3, 3)), min_size=1, max_size=3),
    st.integers(0, 10 ** 6),
)
def test_pairing_matches_floating_roots(c, k, f, h, seed):
    F = t * t + MPoly({(i, j): Fraction(v) for i, j, v in f}, 2)
    H = MPoly({(i, j): Fraction(v) for i, j, v in h}, 2)
    assume(not H.is_zero() and len(_coeffs_in_s(F, k)) > 1)
    C = canonical_cycle(Plane(1, 0, 0, -c), F)
    S = BoundingChain2(Plane(0, 0, 1, -k), ONE, H)
    try:
        exact = pairing(GAMMA, C, S)
    except (PolarPrecondition, NonTransverse, ZeroDivisionError):
        assume(False)
    num = numeric_pairing(c, F, k, H, np.random.default_rng(seed))
    assume(np.isfinite(num))
    assert abs(num - float(exact)) <= 1e-8 * max(1.0, abs(num))


@given(st.integers(-4, 4), st.integers(-4, 4))
def test_linking_is_bilinear_in_weights(p, q):
    amb, C, S = linking_scene()
    base = polar_linking(amb, C, S)
    C2 = PlaneCycle1(C.plane, C.F, C.form.scaled(p))
    S2 = BoundingChain2(S.plane, S.G, S.H, Scalar(q, 0))
    assert polar_linking(amb, C2, S2) == base * Scalar(p * q, 0)


def test_curve_equation_rescaling_cancels():
    amb, C, S = linking_scene()
    C2 = PlaneCycle1(C.plane, C.F * -5, C.form)
    assert polar_linking(amb, C2, S) == polar_linking(amb, C, S)


def test_cycle_in_chain_plane_rejected():
    amb, C, S = linking_scene()
    with pytest.raises(PolarPrecondition):
        pairing(amb, C, BoundingChain2(C.plane, ONE, s))
