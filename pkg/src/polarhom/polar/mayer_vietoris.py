"""Mayer-Vietoris exactness for punctured curves on a common finite support.

All chain spaces live on one support T.  Degree-1 chains of an open piece V
are coordinate vectors in a fixed basis of forms with simple poles in T,
cut down by vanishing at V's punctures; degree-0 chains are rational
coordinate vectors on T.  HP1(V) is a subspace, HP0(V) a quotient given by
explicit complement coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from polarhom.arith.linalg import matmul, nullspace, rank, rref, solve, transpose
from polarhom.curves.model import CurveModel, CurvePoint
from polarhom.curves.riemann_roch import differential_space, residue_rows, vanishing_rows
from polarhom.polar.chains import PuncturedCurve
from polarhom.polar.homology import SupportSampler, support_size


def _zero(n: int, m: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * m for _ in range(n)]


def _cols(vectors, n: int) -> list[list]:
    """Matrix with the given vectors as columns (n rows)."""
    if not vectors:
        return [[] for _ in range(n)]
    return transpose(vectors)


def _rank(mat) -> int:
    if not mat or not mat[0]:
        return 0
    return rank(mat)


def _express(vec, basis) -> list:
    """Coordinates of vec in the (independent) basis vectors."""
    if not basis:
        if any(v != 0 for v in vec):
            raise ArithmeticError("vector outside the zero subspace")
        return []
    sol = solve(_cols(basis, len(vec)), vec)
    if sol is None:
        raise ArithmeticError("vector is not in the span")
    return sol


class _Quotient:
    """Q^n modulo span(image); coordinates on complementary unit vectors."""

    def __init__(self, image_vectors, n: int):
        self.n = n
        basis = []
        for v in image_vectors:
            if _rank(_cols(basis + [v], n)) > len(basis):
                basis.append(v)
        self.image = basis
        comp = []
        for j in range(n):
            e = [Fraction(int(i == j)) for i in range(n)]
            if _rank(_cols(basis + comp + [e], n)) > len(basis) + len(comp):
                comp.append(e)
        self.complement = comp
        self._full = basis + comp

    @property
    def dim(self) -> int:
        return len(self.complement)

    def coords(self, v) -> list:
        c = _express(v, self._full)
        return c[len(self.image):]


@dataclass
class Piece:
    name: str
    punctures: list
    forms_basis: list          # C1(V) as vectors in the ambient form basis
    cycles: list               # HP1(V) vectors
    quotient: _Quotient        # HP0(V)
    boundary_image: list

    @property
    def hp(self) -> tuple[int, int]:
        return self.quotient.dim, len(self.cycles)


@dataclass
class MVReport:
    dims: dict
    sequence: list
    nodes: list = field(default_factory=list)
    chain_level: dict = field(default_factory=dict)
    support_size: int = 0
    alternating_sum: int = 0

    @property
    def ok(self) -> bool:
        return all(n["exact"] for n in self.nodes) and self.alternating_sum == 0 and self.chain_level.get("exact", False)

    def failures(self) -> list[str]:
        return [n["node"] for n in self.nodes if not n["exact"]]


def _piece(name, punctures, forms, R, T_dim) -> Piece:
    n = len(forms)
    if punctures and n:
        rows = vanishing_rows(forms, punctures)
        C1 = nullspace(rows, n)
    else:
        C1 = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    # residue matrix restricted to C1(V)
    images = [matvec_cols(R, v) for v in C1]
    if C1:
        ker = nullspace(_cols(images, T_dim), len(C1)) if T_dim else [
            [Fraction(int(i == j)) for j in range(len(C1))] for i in range(len(C1))
        ]
    else:
        ker = []
    cycles = [_lincomb(C1, k) for k in ker]
    return Piece(name, punctures, C1, cycles, _Quotient(images, T_dim), images)


def matvec_cols(R, v):
    return [sum((r[j] * v[j] for j in range(len(v)) if v[j] != 0), Fraction(0)) for r in R]


def _lincomb(vectors, coeffs):
    n = len(vectors[0])
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if c != 0:
            for i in range(n):
                out[i] += c * v[i]
    return out


def _node(name: str, prev, nxt, dim: int) -> dict:
    """prev: matrix into this node (dim rows), nxt: matrix out of it."""
    r_prev = _rank(prev) if prev is not None else 0
    if nxt is not None and nxt and nxt[0]:
        ker = dim - _rank(nxt)
    else:
        ker = dim
    comp_zero = True
    if prev is not None and nxt is not None and prev and prev[0] and nxt and nxt[0]:
        prod = matmul(nxt, prev)
        comp_zero = all(c == 0 for row in prod for c in row)
    return {"node": name, "dim": dim, "kernel": ker, "image_in": r_prev,
            "composition_zero": comp_zero, "exact": comp_zero and ker == r_prev}


def mv_check(Z: CurveModel, S1, S2, seed: int = 0, extra: int = 4) -> MVReport:
    S1, S2 = frozenset(S1), frozenset(S2)
    union = sorted(S1 | S2, key=lambda p: p.sort_key())
    inter = sorted(S1 & S2, key=lambda p: p.sort_key())
    s1 = sorted(S1, key=lambda p: p.sort_key())
    s2 = sorted(S2, key=lambda p: p.sort_key())
    g = Z.genus
    sampler = SupportSampler(PuncturedCurve(Z, frozenset(union)), seed)
    T = sampler.take(2 * g + 2 * support_size(union) + extra)
    forms = differential_space(Z, T)
    R = residue_rows(forms, T)
    td = len(R)
    pieces = {
        "U12": _piece("U12", union, forms, R, td),
        "U1": _piece("U1", s1, forms, R, td),
        "U2": _piece("U2", s2, forms, R, td),
        "X": _piece("X", inter, forms, R, td),
    }
    U12, U1, U2, X = pieces["U12"], pieces["U1"], pieces["U2"], pieces["X"]

    # degree 1 on homology: i(z) = (z, -z), sigma(a, b) = a + b
    i1 = [_express(z, U1.cycles) + [-c for c in _express(z, U2.cycles)] for z in U12.cycles]
    i1 = _cols(i1, len(U1.cycles) + len(U2.cycles))
    s1m = [_express(z, X.cycles) for z in U1.cycles + U2.cycles]
    s1m = _cols(s1m, len(X.cycles))
    # connecting map: z = a + b, a in C1(U1), b in C1(U2), delta z = [res a]
    split = U1.forms_basis + U2.forms_basis
    dcols = []
    for z in X.cycles:
        sol = solve(_cols(split, len(z)), z) if split else None
        if sol is None:
            raise ArithmeticError("support too small: cycle does not split over U1 and U2")
        a = _lincomb(U1.forms_basis, sol[: len(U1.forms_basis)]) if U1.forms_basis else [Fraction(0)] * len(z)
        dcols.append(U12.quotient.coords(matvec_cols(R, a)))
    delta = _cols(dcols, U12.quotient.dim)
    # degree 0 on homology
    i0 = []
    for e in U12.quotient.complement:
        i0.append(U1.quotient.coords(e) + [-c for c in U2.quotient.coords(e)])
    i0 = _cols(i0, U1.quotient.dim + U2.quotient.dim)
    s0 = [X.quotient.coords(e) for e in U1.quotient.complement + U2.quotient.complement]
    s0 = _cols(s0, X.quotient.dim)

    d_h1_12 = len(U12.cycles)
    d_h1_sum = len(U1.cycles) + len(U2.cycles)
    d_h1_x = len(X.cycles)
    d_h0_12 = U12.quotient.dim
    d_h0_sum = U1.quotient.dim + U2.quotient.dim
    d_h0_x = X.quotient.dim
    nodes = [
        _node("HP1(U12)", None, i1, d_h1_12),
        _node("HP1(U1)+HP1(U2)", i1, s1m, d_h1_sum),
        _node("HP1(X)", s1m, delta, d_h1_x),
        _node("HP0(U12)", delta, i0, d_h0_12),
        _node("HP0(U1)+HP0(U2)", i0, s0, d_h0_sum),
        _node("HP0(X)", s0, None, d_h0_x),
    ]
    # the final node is exact iff sigma is onto
    nodes[-1]["kernel"] = d_h0_x
    nodes[-1]["exact"] = nodes[-1]["composition_zero"] and nodes[-1]["image_in"] == d_h0_x
    seq = [d_h1_12, d_h1_sum, d_h1_x, d_h0_12, d_h0_sum, d_h0_x]
    alt = sum((-1) ** k * d for k, d in enumerate(seq))

    k12, k1, k2, kx = (len(p.forms_basis) for p in (U12, U1, U2, X))
    sum_rank = _rank(_cols(U1.forms_basis + U2.forms_basis, len(forms))) if forms else 0
    inter_dim = k1 + k2 - sum_rank
    chain = {
        "dims": [k12, k1 + k2, kx],
        "injective": True,
        "middle_exact": inter_dim == k12,
        "surjective": sum_rank == kx,
    }
    chain["exact"] = chain["middle_exact"] and chain["surjective"]
    dims = {name: list(p.hp) for name, p in pieces.items()}
    return MVReport(dims, seq, nodes, chain, support_size(T), alt)
