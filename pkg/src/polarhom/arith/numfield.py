"""Simple algebraic extensions Q[t]/(m) and their elements.

A field is identified by its monic minimal polynomial; elements are
coefficient vectors in the power basis 1, t, ..., t^(n-1).  Rationals mix
freely with elements; elements of two different fields never do.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from polarhom.arith.poly import UniPoly, xgcd


class NumberField:
    __slots__ = ("minpoly", "degree", "_key")

    def __init__(self, minpoly: UniPoly):
        if not minpoly.is_rational():
            raise TypeError("minimal polynomial must have rational coefficients")
        if minpoly.degree < 1:
            raise ValueError("minimal polynomial must have positive degree")
        m = minpoly.monic()
        self.minpoly = m
        self.degree = m.degree
        self._key = m.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"NumberField({self.minpoly.format('t')})"

    def gen(self) -> "NumberFieldElement":
        if self.degree == 1:
            return NumberFieldElement(self, [-self.minpoly[0]])
        return NumberFieldElement(self, [0, 1])

    def element(self, coeffs) -> "NumberFieldElement":
        return NumberFieldElement(self, coeffs)

    def from_poly(self, p: UniPoly) -> "NumberFieldElement":
        """Image of p(t) in the field."""
        return NumberFieldElement(self, (p % self.minpoly).coeffs)


def make_field(minpoly: UniPoly) -> NumberField:
    return _field_cache(minpoly.monic().coeffs)


@lru_cache(maxsize=None)
def _field_cache(key) -> NumberField:
    return NumberField(UniPoly(key))


class NumberFieldElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs):
        n = field.degree
        cs = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
        if len(cs) > n:
            cs = list((UniPoly(cs) % field.minpoly).coeffs)
        cs = cs + [Fraction(0)] * (n - len(cs))
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, field: NumberField, cs) -> "NumberFieldElement":
        # cs: exactly field.degree Fractions
        obj = object.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(cs)
        return obj

    # -- helpers ---------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, NumberFieldElement):
            if other.field != self.field:
                raise ValueError(f"elements of different fields: {self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return NumberFieldElement(self.field, [other])
        return NotImplemented

    def as_poly(self) -> UniPoly:
        return UniPoly(self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return NumberFieldElement._raw(self.field, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return NumberFieldElement._raw(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return NumberFieldElement._raw(self.field, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NumberFieldElement._raw(self.field, [a * other for a in self.coeffs])
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return NumberFieldElement._raw(self.field, _mulmod(self.coeffs, o.coeffs, self.field.minpoly.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "NumberFieldElement":
        if self == 0:
            raise ZeroDivisionError("inverse of zero in number field")
        g, s, _ = xgcd(self.as_poly(), self.field.minpoly)
        if g.degree != 0:
            raise ZeroDivisionError("element not invertible (minimal polynomial reducible?)")
        return NumberFieldElement(self.field, (s * (1 / g.lc)).coeffs)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return NumberFieldElement(self.field, [a / other for a in self.coeffs])
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = NumberFieldElement(self.field, [1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, NumberFieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and all(c == 0 for c in self.coeffs[1:])
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        return f"[{self.as_poly().format('t')} mod {self.field.minpoly.format('t')}]"

    __str__ = __repr__

    # -- field invariants --------------------------------------------------
    def mult_matrix(self) -> list[list[Fraction]]:
        """Matrix of multiplication by self; column j is self * t^j."""
        n = self.field.degree
        cols = []
        basis = NumberFieldElement(self.field, [1])
        t = self.field.gen() if n > 1 else None
        for j in range(n):
            cols.append((self * basis).coeffs)
            if t is not None:
                basis = basis * t
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def trace(self) -> Fraction:
        m = self.mult_matrix()
        return sum((m[i][i] for i in range(len(m))), Fraction(0))

    def norm(self) -> Fraction:
        from polarhom.arith.linalg import det

        return det(self.mult_matrix())

    def charpoly(self) -> UniPoly:
        """Characteristic polynomial of multiplication by self (Faddeev-LeVerrier)."""
        from polarhom.arith.linalg import matmul

        a = self.mult_matrix()
        n = len(a)
        coeffs = [Fraction(0)] * (n + 1)
        coeffs[n] = Fraction(1)
        mk = [[Fraction(0)] * n for _ in range(n)]
        c_prev = Fraction(1)
        for k in range(1, n + 1):
            # M_k = A M_{k-1} + c_{n-k+1} I
            for i in range(n):
                mk[i][i] = mk[i][i] + c_prev
            am = matmul(a, mk)
            c = -sum((am[i][i] for i in range(n)), Fraction(0)) / k
            coeffs[n - k] = c
            mk = am
            c_prev = c
        return UniPoly(coeffs)

    def minpoly(self) -> UniPoly:
        from polarhom.arith.poly import squarefree_part

        return squarefree_part(self.charpoly())


def _mulmod(a, b, m):
    n = len(m) - 1
    prod = [Fraction(0)] * (2 * n - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            if cb != 0:
                prod[i + j] += ca * cb
    # reduce by monic m: t^n = -(m_0 + ... + m_{n-1} t^{n-1})
    for k in range(len(prod) - 1, n - 1, -1):
        c = prod[k]
        if c != 0:
            prod[k] = Fraction(0)
            for i in range(n):
                prod[k - n + i] -= c * m[i]
    return prod[:n]


def coordinates(value, degree: int | None = None) -> list[Fraction]:
    """Rational coordinates of a field value in its power basis."""
    if isinstance(value, NumberFieldElement):
        return list(value.coeffs)
    v = Fraction(value)
    if degree is None or degree <= 1:
        return [v]
    return [v] + [Fraction(0)] * (degree - 1)


def field_of(*values) -> NumberField | None:
    """The common number field of the arguments, or None if all are rational."""
    field = None
    for v in values:
        if isinstance(v, NumberFieldElement):
            if field is None:
                field = v.field
            elif field != v.field:
                raise ValueError(f"values live in different fields: {field} vs {v.field}")
    return field


def simplify(value):
    """Collapse number-field elements that happen to be rational."""
    if isinstance(value, NumberFieldElement) and value.is_rational():
        return value.coeffs[0]
    if isinstance(value, int):
        return Fraction(value)
    return value
