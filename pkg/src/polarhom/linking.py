"""Polar linking numbers in the affine chart of P^3.

Planes ax + by + cz + d = 0 carry coordinates (s, t) through
X = origin + s*e1 + t*e2, where (s, t) are two of (x, y, z):
(x, y) when c != 0, (x, z) when c = 0 and b != 0, else (y, z).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from polarhom.arith.linalg import det
from polarhom.arith.mpoly import MPoly
from polarhom.arith.scalar import Scalar
from polarhom.intersect import Form1, PolarPrecondition, group_sum, tangent, transverse_points


def _mp3(terms: dict) -> MPoly:
    return MPoly(terms, 3)


@dataclass(frozen=True)
class Plane:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for k in "abcd":
            object.__setattr__(self, k, Fraction(getattr(self, k)))
        if self.a == 0 and self.b == 0 and self.c == 0:
            raise ValueError("degenerate plane")

    @property
    def normal(self) -> tuple:
        return (self.a, self.b, self.c)

    @property
    def free(self) -> tuple[int, int]:
        """Indices of the ambient coordinates used as (s, t)."""
        if self.c != 0:
            return (0, 1)
        if self.b != 0:
            return (0, 2)
        return (1, 2)

    def frame(self):
        a, b, c, d = self.a, self.b, self.c, self.d
        z = Fraction(0)
        if c != 0:
            return (z, z, -d / c), (Fraction(1), z, -a / c), (z, Fraction(1), -b / c)
        if b != 0:
            return (z, -d / b, z), (Fraction(1), -a / b, z), (z, z, Fraction(1))
        return (-d / a, z, z), (z, Fraction(1), z), (z, z, Fraction(1))

    def lift(self, s, t) -> tuple:
        o, e1, e2 = self.frame()
        return tuple(o[i] + s * e1[i] + t * e2[i] for i in range(3))

    def lift_vector(self, u) -> tuple:
        _, e1, e2 = self.frame()
        return tuple(u[0] * e1[i] + u[1] * e2[i] for i in range(3))

    def chart(self, X) -> tuple:
        i, j = self.free
        return (X[i], X[j])

    def restrict(self, p: MPoly) -> MPoly:
        """p(X(s, t)) as a polynomial in (s, t)."""
        o, e1, e2 = self.frame()
        s, t = MPoly.var(0), MPoly.var(1)
        images = [s * e1[i] + t * e2[i] + o[i] for i in range(3)]
        return p.substitute(images)

    def equation(self) -> MPoly:
        return MPoly.linear([self.a, self.b, self.c], self.d)

    def same_as(self, other: "Plane") -> bool:
        u, v = (self.a, self.b, self.c, self.d), (other.a, other.b, other.c, other.d)
        return all(u[i] * v[j] == u[j] * v[i] for i in range(4) for j in range(4))


@dataclass(frozen=True)
class Ambient3:
    """gamma = (num/den) dx^dy^dz; default dx^dy^dz/(xyz)."""

    num: MPoly = field(default_factory=lambda: _mp3({(0, 0, 0): Fraction(1)}))
    den: MPoly = field(default_factory=lambda: _mp3({(1, 1, 1): Fraction(1)}))

    def density(self, X):
        n, d = self.num(*X), self.den(*X)
        if n == 0 or d == 0:
            raise PolarPrecondition(f"point {X} lies on the divisor of gamma")
        return n / d


@dataclass(frozen=True)
class PlaneCycle1:
    """Curve F(s, t) = 0 in a plane with a 1-form in (ds, dt)."""

    plane: Plane
    F: MPoly
    form: Form1


@dataclass(frozen=True)
class BoundingChain2:
    """(G/H) ds^dt on a plane, times a weight."""

    plane: Plane
    G: MPoly
    H: MPoly
    weight: Scalar = field(default_factory=lambda: Scalar(1, 0))


def canonical_cycle(plane: Plane, F: MPoly) -> PlaneCycle1:
    """A plane curve with ds / F_t."""
    return PlaneCycle1(plane, F, Form1(MPoly.const(1), MPoly.const(0), F.diff(1)))


def pairing(amb: Ambient3, C: PlaneCycle1, S: BoundingChain2) -> Fraction:
    """Sum over C meet S of alpha(u) beta(v1, v2) / gamma(u, v1, v2), without weight."""
    if C.form.is_zero() or S.G.is_zero():
        return Fraction(0)
    if C.plane.same_as(S.plane):
        raise PolarPrecondition("cycle lies in the carrier plane of the chain")
    cut = C.plane.restrict(S.plane.equation())
    if cut.total_degree() <= 0:
        return Fraction(0)  # parallel planes
    _, v1, v2 = S.plane.frame()
    vals = []
    for grp in transverse_points(C.F, cut):
        p = grp.coords()
        u2 = tangent(C.F, p)
        X = C.plane.lift(*p)
        u = C.plane.lift_vector(u2)
        q = S.plane.chart(X)
        h = S.H(*q)
        if h == 0:
            raise PolarPrecondition(f"intersection point {X} lies on the boundary curve")
        vol = det([list(u), list(v1), list(v2)])
        vals.append((grp, C.form(p, u2) * (S.G(*q) / h) / (amb.density(X) * vol)))
    return group_sum(vals)


def polar_linking(amb: Ambient3, C: PlaneCycle1, S) -> Scalar:
    """Weighted sum of pairings; terms are collected per power of 2*pi*i first."""
    chains = S if isinstance(S, (list, tuple)) else [S]
    by_tau: dict[int, Scalar] = {}
    for ch in chains:
        term = ch.weight * Scalar(pairing(amb, C, ch), 0)
        k = ch.weight.tau_power
        by_tau[k] = by_tau[k] + term if k in by_tau else term
    total = Scalar(0, 0)
    for k in sorted(by_tau):
        total = total + by_tau[k]
    return total


@dataclass(frozen=True)
class Plane3Form:
    """N dx^dy^dz / (product of plane equations)."""

    numerator: MPoly
    planes: tuple

    def __post_init__(self):
        for p, q in combinations(self.planes, 2):
            if p.same_as(q):
                raise ValueError("repeated pole plane")


def boundary3(gamma: Plane3Form) -> list[BoundingChain2]:
    """One chain per pole plane: the Poincaré residue, weight 2*pi*i."""
    if gamma.numerator.is_zero():
        return []
    out = []
    for i, pl in enumerate(gamma.planes):
        _, e1, e2 = pl.frame()
        n = pl.normal
        factor = det([list(n), list(e1), list(e2)]) / sum(c * c for c in n)
        G = pl.restrict(gamma.numerator) * factor
        H = MPoly.const(1)
        for j, other in enumerate(gamma.planes):
            if j != i:
                H = H * pl.restrict(other.equation())
        if H.is_zero():
            raise ValueError("pole planes coincide along a carrier")
        out.append(BoundingChain2(pl, G, H, Scalar(1, 1)))
    return out


def verify_bounding(S: BoundingChain2, C: PlaneCycle1) -> tuple[bool, str]:
    """Whether the residue of S along C's curve is C's form (and S has no other poles)."""
    if not S.plane.same_as(C.plane):
        return False, "different carrier planes"
    ratio = _proportionality(S.H, C.F)
    if ratio is None:
        return False, "form has pole components other than the curve"
    # residue of (G/(ratio F)) ds^dt is -G/(ratio F_t) ds, compared on the curve
    from polarhom.intersect import residue_2form_along_curve

    rho = residue_2form_along_curve(S.G, C.F, MPoly.const(ratio))
    u = (C.F.diff(1), -C.F.diff(0))
    # rho(u) - alpha(u) as N / (D_rho D_alpha)
    num = (rho.P * u[0] + rho.Q * u[1]) * C.form.D - (C.form.P * u[0] + C.form.Q * u[1]) * rho.D
    if _vanishes_on(num, C.F):
        return True, "ok"
    return False, "residue differs from the cycle's form"


def _proportionality(H: MPoly, F: MPoly):
    if H.is_zero() or F.is_zero():
        return None
    k = next(iter(sorted(F.terms)))
    r = H.terms.get(k, 0) / F.terms[k]
    if r == 0:
        return None
    return r if H == F * r else None


def _vanishes_on(num: MPoly, F: MPoly) -> bool:
    """Whether F divides num (F taken irreducible), by pseudo-division in t."""
    if num.is_zero():
        return True
    if F.degree_in(1) <= 0:
        return _vanishes_on(_swap(num), _swap(F))
    from polarhom.arith.poly import UniPoly

    def coeffs(p: MPoly):
        out: dict[int, UniPoly] = {}
        for (i, j), c in p.terms.items():
            out[j] = out.get(j, UniPoly()) + UniPoly.monomial(i, c)
        return out

    f = coeffs(F)
    df = max(f)
    r = coeffs(num)
    while r and max(r) >= df:
        dr = max(r)
        lr = r[dr]
        new = {j: c * f[df] for j, c in r.items()}
        for j, c in f.items():
            new[j + dr - df] = new.get(j + dr - df, UniPoly()) - c * lr
        r = {j: c for j, c in new.items() if not c.is_zero()}
    return not r


def _swap(p: MPoly) -> MPoly:
    return MPoly({(j, i): c for (i, j), c in p.terms.items()}, 2)


def diagonal_pushforward_plane(pl: Plane, lam) -> Plane:
    return Plane(pl.a / lam[0], pl.b / lam[1], pl.c / lam[2], pl.d)


def _scale_vars(p: MPoly, cs, ct) -> MPoly:
    return MPoly({(i, j): c * cs ** i * ct ** j for (i, j), c in p.terms.items()}, 2)


def pushforward_cycle(C: PlaneCycle1, lam) -> PlaneCycle1:
    """Image of a plane cycle under (x, y, z) -> (l0 x, l1 y, l2 z)."""
    i, j = C.plane.free
    li, lj = Fraction(lam[i]), Fraction(lam[j])
    new_plane = diagonal_pushforward_plane(C.plane, lam)
    # new coordinates s' = li s, t' = lj t
    sub = lambda p: _scale_vars(p, 1 / li, 1 / lj)  # noqa: E731
    f = C.form
    form = Form1(sub(f.P) * (1 / li), sub(f.Q) * (1 / lj), sub(f.D))
    return PlaneCycle1(new_plane, sub(C.F), form)


def pushforward_chain(S: BoundingChain2, lam) -> BoundingChain2:
    i, j = S.plane.free
    li, lj = Fraction(lam[i]), Fraction(lam[j])
    sub = lambda p: _scale_vars(p, 1 / li, 1 / lj)  # noqa: E731
    return BoundingChain2(diagonal_pushforward_plane(S.plane, lam), sub(S.G) * (1 / (li * lj)), sub(S.H), S.weight)


def preserves_gamma(amb: Ambient3, lam) -> bool:
    """Whether (x, y, z) -> diag(lam) pulls gamma back to itself."""
    l0, l1, l2 = (Fraction(v) for v in lam)
    jac = l0 * l1 * l2
    scaled = lambda p: MPoly({e: c * l0 ** e[0] * l1 ** e[1] * l2 ** e[2] for e, c in p.terms.items()}, 3)  # noqa: E731
    # num(lam X)/den(lam X) * jac == num/den
    return scaled(amb.num) * amb.den * jac == amb.num * scaled(amb.den)
