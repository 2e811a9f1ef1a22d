"""Finite-support polar homology of projective and punctured curves."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from polarhom.arith.linalg import rank
from polarhom.arith.poly import UniPoly
from polarhom.curves.differential import fiber_points, holomorphic_basis
from polarhom.curves.model import INFINITY, CurveModel, CurvePoint
from polarhom.curves.riemann_roch import differential_space, residue_rows, vanishing_rows
from polarhom.polar.chains import PuncturedCurve


class NotStabilized(RuntimeError):
    """hp0 kept changing up to the support cap."""


def hp_projective(Z: CurveModel) -> tuple[int, int]:
    return 1, Z.genus


def hp1_punctured(X: PuncturedCurve) -> int:
    basis = holomorphic_basis(X.closure)
    if not basis:
        return 0
    rows = vanishing_rows(basis, X.sorted_punctures())
    return len(basis) - (rank(rows) if rows else 0)


def support_size(T) -> int:
    return sum(p.degree for p in T)


def _check_support(X: PuncturedCurve, T) -> None:
    bad = [p for p in T if p in X.punctures]
    if bad:
        raise ValueError(f"support meets the punctures at {bad}")


def admissible_forms(X: PuncturedCurve, T):
    """Basis of admissible forms with poles in T (vanishing at every puncture)."""
    return differential_space(X.closure, list(T), zeros=X.sorted_punctures())


def residue_matrix(X: PuncturedCurve, T) -> tuple[list[list], list]:
    forms = admissible_forms(X, T)
    return residue_rows(forms, list(T)), forms


def hp0_finite_support(X: PuncturedCurve, T) -> int:
    T = list(T)
    _check_support(X, T)
    if support_size(T) < 2:
        raise ValueError("support needs at least two points")
    rows, forms = residue_matrix(X, T)
    r = rank(rows) if forms else 0
    return support_size(T) - r


def hp1_finite_support(X: PuncturedCurve, T) -> int:
    """Dimension of closed admissible 1-chains with poles in T."""
    rows, forms = residue_matrix(X, list(T))
    return len(forms) - (rank(rows) if forms else 0)


class SupportSampler:
    """Deterministic stream of support points avoiding punctures and y = 0."""

    def __init__(self, X: PuncturedCurve, seed: int = 0, avoid=()):
        self.X = X
        self.rng = random.Random(seed)
        self.used: set = set()
        curve = X.closure
        bad = set()
        for p in list(X.punctures) + list(avoid):
            if not p.at_infinity:
                bad.add(p.x)
        self.bad_x = bad

    def _draw_x(self) -> Fraction:
        return Fraction(self.rng.randint(-40, 40), self.rng.randint(1, 6))

    def next_group(self) -> list[CurvePoint]:
        curve = self.X.closure
        while True:
            x = self._draw_x()
            if x in self.used or x in self.bad_x:
                continue
            self.used.add(x)
            if curve.is_p1:
                return [curve.point(x)]
            if curve.f(x) == 0:
                continue
            return fiber_points(curve, UniPoly([-x, 1]))

    def take(self, n: int) -> list[CurvePoint]:
        """At least n geometric points, in whole fibers."""
        out: list[CurvePoint] = []
        while support_size(out) < n:
            out.extend(self.next_group())
        return out


@dataclass
class Stabilized:
    value: int
    support_sizes: list[int]
    values: list[int]


def hp0_stabilized(X: PuncturedCurve, seed: int = 0, cap: int | None = None) -> Stabilized:
    g = X.closure.genus
    floor = 2 * g + X.puncture_count + 2
    cap = cap if cap is not None else floor + 12
    sampler = SupportSampler(X, seed)
    T = sampler.take(2)
    sizes, values = [], []
    while True:
        v = hp0_finite_support(X, T)
        sizes.append(support_size(T))
        values.append(v)
        if len(values) >= 2 and values[-1] == values[-2] and sizes[-2] > floor:
            return Stabilized(v, sizes, values)
        if sizes[-1] >= cap:
            raise NotStabilized(f"hp0 did not stabilize: sizes {sizes}, values {values}")
        T = T + sampler.next_group()
