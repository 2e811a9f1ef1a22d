"""Polar 0- and 1-chains on a fixed curve and the boundary map.

A term at a point with number-field coordinates stands for the whole Galois
orbit of that point, with conjugate weights at the conjugate points.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from polarhom.arith.numfield import NumberFieldElement
from polarhom.arith.scalar import Scalar
from polarhom.curves.differential import (
    Differential1,
    HigherOrderPole,
    divisor_of,
    ord_at,
    pole_places,
    residue_value,
)
from polarhom.curves.model import INFINITY, CurveModel, CurvePoint


class Chain0:
    def __init__(self, terms: dict | None = None):
        clean = {}
        tau = None
        for p, s in (terms or {}).items():
            s = s if isinstance(s, Scalar) else Scalar(s, 0)
            if s.is_zero():
                continue
            if tau is not None and s.tau_power != tau:
                raise ValueError("Chain0 terms must share tau_power")
            tau = s.tau_power
            clean[p] = s
        self.terms = clean

    @property
    def tau_power(self) -> int | None:
        return next(iter(self.terms.values())).tau_power if self.terms else None

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Chain0") -> "Chain0":
        out = dict(self.terms)
        for p, s in other.terms.items():
            out[p] = out[p] + s if p in out else s
        return Chain0(out)

    def __neg__(self) -> "Chain0":
        return Chain0({p: -s for p, s in self.terms.items()})

    def __sub__(self, other: "Chain0") -> "Chain0":
        return self + (-other)

    def __mul__(self, c) -> "Chain0":
        return Chain0({p: s * c for p, s in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Chain0) and self.terms == other.terms

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def total_weight(self) -> Scalar:
        """Sum of weights over all geometric points."""
        total = Scalar(0, self.tau_power or 0)
        for p, s in self.terms.items():
            v = s.value
            v = v.trace() if isinstance(v, NumberFieldElement) else Fraction(v) * p.degree
            total = total + Scalar(v, s.tau_power)
        return total

    def __repr__(self) -> str:
        return " + ".join(f"{s!r}*{p!r}" for p, s in self.items()) or "0"


class Chain1:
    """Weighted sum of (curve, form) generators with identity maps."""

    def __init__(self, terms=()):
        self.terms: list[tuple[Differential1, Scalar]] = []
        for w, s in terms:
            s = s if isinstance(s, Scalar) else Scalar(s, 0)
            self.terms.append((w, s))

    @classmethod
    def of(cls, w: Differential1, weight=1) -> "Chain1":
        return cls([(w, weight)])

    def __add__(self, other: "Chain1") -> "Chain1":
        return Chain1(self.terms + other.terms)

    def __mul__(self, c) -> "Chain1":
        return Chain1([(w, s * c) for w, s in self.terms])

    __rmul__ = __mul__

    def __neg__(self) -> "Chain1":
        return self * -1

    def __repr__(self) -> str:
        return " + ".join(f"{s!r}*({w!r})" for w, s in self.terms) or "0"


@dataclass(frozen=True)
class PuncturedCurve:
    closure: CurveModel
    punctures: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "punctures", frozenset(self.punctures))

    @property
    def puncture_count(self) -> int:
        return sum(p.degree for p in self.punctures)

    def sorted_punctures(self) -> list[CurvePoint]:
        return sorted(self.punctures, key=lambda p: p.sort_key())


def form_poles(w: Differential1) -> list[CurvePoint]:
    """Orbit representatives of the poles of w (simple poles required)."""
    out = []
    for p, m, _ in pole_places(w):
        if p is None:
            raise NotImplementedError(f"fiber over {m} needs a tower of fields")
        out.append(p)
    out.append(INFINITY)
    return out


def _descend(r, form_field, point_field):
    # a chain over K stands for the sum of its Galois conjugates; at a point
    # defined over a smaller field the conjugate residues pile up as a trace
    if form_field is None or point_field == form_field:
        return r
    if isinstance(r, NumberFieldElement):
        return r.trace()
    return Fraction(r) * form_field.degree


def boundary1(c: Chain1) -> Chain0:
    """2*pi*i times the residues of every form, summed per point."""
    out = Chain0()
    for w, s in c.terms:
        if w.is_zero() or s.is_zero():
            continue
        terms = {}
        for p in form_poles(w):
            r = _descend(residue_value(w, p), w.field, p.field)
            if r != 0:
                terms[p] = s * Scalar(r, 1)
        out = out + Chain0(terms)
    return out


def is_admissible(c: Chain1, X: PuncturedCurve) -> bool:
    for w, s in c.terms:
        if w.is_zero() or s.is_zero():
            continue
        if w.curve != X.closure:
            return False
        try:
            div = divisor_of(w)
        except NotImplementedError:
            return False
        if any(k < -1 for _, k in div.items()):
            return False
        for p in X.punctures:
            try:
                if ord_at(w, p) < 1:
                    return False
            except HigherOrderPole:  # pragma: no cover
                return False
    return True
