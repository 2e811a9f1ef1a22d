"""Exact scalars carrying a symbolic power of 2*pi*i."""
from __future__ import annotations

import cmath
from fractions import Fraction

from polarhom.arith.numfield import NumberFieldElement, make_field, simplify
from polarhom.arith.poly import UniPoly

TWO_PI_I = 2j * cmath.pi


class TauMismatch(ValueError):
    """Addition of two nonzero scalars with different powers of 2*pi*i."""


class Scalar:
    """value * (2*pi*i)**tau_power with an exact value.

    Zero is neutral for addition at every tau power: a vanishing scalar
    carries no unit, so ``0 + s`` is ``s`` whatever the powers.
    """

    __slots__ = ("value", "tau_power")

    def __init__(self, value=0, tau_power: int = 0):
        if isinstance(value, Scalar):
            value, tau_power = value.value, value.tau_power + tau_power
        if isinstance(value, (int, str)):
            value = Fraction(value)
        self.value = simplify(value)
        self.tau_power = int(tau_power)

    @classmethod
    def tau(cls, power: int = 1) -> "Scalar":
        return cls(1, power)

    def is_zero(self) -> bool:
        return self.value == 0

    def _c(self, other) -> "Scalar":
        return other if isinstance(other, Scalar) else Scalar(other)

    def __add__(self, other) -> "Scalar":
        o = self._c(other)
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        if o.tau_power != self.tau_power:
            raise TauMismatch(f"cannot add (2πi)^{self.tau_power} and (2πi)^{o.tau_power} terms")
        return Scalar(self.value + o.value, self.tau_power)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.value, self.tau_power)

    def __sub__(self, other) -> "Scalar":
        return self + (-self._c(other))

    def __rsub__(self, other) -> "Scalar":
        return self._c(other) - self

    def __mul__(self, other) -> "Scalar":
        o = self._c(other)
        return Scalar(self.value * o.value, self.tau_power + o.tau_power)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Scalar":
        o = self._c(other)
        return Scalar(self.value / o.value, self.tau_power - o.tau_power)

    def __eq__(self, other) -> bool:
        o = other if isinstance(other, Scalar) else Scalar(other)
        if self.is_zero() and o.is_zero():
            return True
        return self.value == o.value and self.tau_power == o.tau_power

    def __hash__(self) -> int:
        return hash(0) if self.is_zero() else hash((self.value, self.tau_power))

    def __repr__(self) -> str:
        return f"Scalar({self.render()})"

    def render(self) -> str:
        v = str(self.value)
        if self.tau_power == 0 or self.is_zero():
            return v
        unit = "(2πi)" if self.tau_power == 1 else f"(2πi)^{self.tau_power}"
        return f"{v}·{unit}"

    def to_complex(self, embedding: int = 0) -> complex:
        """Numerical value; number-field elements use the given complex root."""
        v = self.value
        if isinstance(v, NumberFieldElement):
            import numpy as np

            roots = sorted(np.roots([float(c) for c in reversed(v.field.minpoly.coeffs)]), key=lambda r: (r.real, r.imag))
            z = complex(roots[embedding])
            num = sum(float(c) * z ** i for i, c in enumerate(v.coeffs))
        else:
            num = float(v)
        return complex(num) * TWO_PI_I ** self.tau_power

    def to_json(self) -> dict:
        return {"value": value_to_json(self.value), "tau_power": self.tau_power}

    @classmethod
    def from_json(cls, data: dict) -> "Scalar":
        return cls(value_from_json(data["value"]), data.get("tau_power", 0))


def value_to_json(v):
    v = simplify(v)
    if isinstance(v, NumberFieldElement):
        return {"min_poly": [_frac(c) for c in v.field.minpoly.coeffs], "coeffs": [_frac(c) for c in v.coeffs]}
    return _frac(Fraction(v))


def value_from_json(data):
    if isinstance(data, dict):
        field = make_field(UniPoly([Fraction(c) for c in data["min_poly"]]))
        return simplify(NumberFieldElement(field, [Fraction(c) for c in data["coeffs"]]))
    return Fraction(data)


def _frac(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"
