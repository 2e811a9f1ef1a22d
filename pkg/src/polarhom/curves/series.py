"""Truncated Laurent series in a local parameter t.

A series is ``sum coeffs[i] * t**(val + i) + O(t**prec)``.  ``prec=None``
marks an exact (finite) series such as a polynomial in t.
"""
from __future__ import annotations

from fractions import Fraction

_BIG = 10 ** 9


class PrecisionError(ArithmeticError):
    """Not enough terms were computed to answer the question asked."""


class Laurent:
    __slots__ = ("val", "coeffs", "prec")

    def __init__(self, val: int, coeffs, prec: int | None = None):
        cs = list(coeffs)
        if prec is not None and len(cs) > prec - val:
            cs = cs[: max(prec - val, 0)]
        while cs and cs[0] == 0:
            cs.pop(0)
            val += 1
        if prec is None:
            while cs and cs[-1] == 0:
                cs.pop()
        if not cs:
            val = prec if prec is not None else 0
        self.val = val
        self.coeffs = cs
        self.prec = prec

    # -- constructors ------------------------------------------------------
    @classmethod
    def const(cls, c) -> "Laurent":
        return cls(0, [c])

    @classmethod
    def monomial(cls, k: int, c=1) -> "Laurent":
        return cls(k, [c])

    # -- inspection ----------------------------------------------------------
    @property
    def _p(self) -> int:
        return _BIG if self.prec is None else self.prec

    def is_exact(self) -> bool:
        return self.prec is None

    def is_known_zero(self) -> bool:
        return not self.coeffs

    def order(self) -> int:
        """Valuation; raises if the series vanishes to the computed precision."""
        if not self.coeffs:
            if self.prec is None:
                raise ValueError("order of the zero series")
            raise PrecisionError(f"series is O(t^{self.prec})")
        return self.val

    def coefficient(self, k: int):
        if k >= self._p:
            raise PrecisionError(f"coefficient t^{k} beyond precision {self.prec}")
        if k < self.val or not self.coeffs:
            return Fraction(0)
        i = k - self.val
        return self.coeffs[i] if i < len(self.coeffs) else Fraction(0)

    def __repr__(self) -> str:
        body = " + ".join(f"({c})t^{self.val + i}" for i, c in enumerate(self.coeffs) if c != 0) or "0"
        return body + ("" if self.prec is None else f" + O(t^{self.prec})")

    # -- arithmetic ------------------------------------------------------------
    def _c(self, other) -> "Laurent":
        return other if isinstance(other, Laurent) else Laurent.const(other)

    def __add__(self, other) -> "Laurent":
        o = self._c(other)
        if not o.coeffs and o.prec is None:
            return self
        if not self.coeffs and self.prec is None:
            return o
        prec = None if self.prec is None and o.prec is None else min(self._p, o._p)
        lo = min(self.val if self.coeffs else self._p, o.val if o.coeffs else o._p)
        hi = max(self.val + len(self.coeffs), o.val + len(o.coeffs))
        if prec is not None:
            hi = min(hi, prec)
            lo = min(lo, prec)
        out = [Fraction(0)] * max(hi - lo, 0)
        for s in (self, o):
            for i, c in enumerate(s.coeffs):
                k = s.val + i - lo
                if 0 <= k < len(out):
                    out[k] = out[k] + c
        return Laurent(lo, out, prec)

    __radd__ = __add__

    def __neg__(self) -> "Laurent":
        return Laurent(self.val, [-c for c in self.coeffs], self.prec)

    def __sub__(self, other) -> "Laurent":
        return self + (-self._c(other))

    def __rsub__(self, other) -> "Laurent":
        return self._c(other) - self

    def __mul__(self, other) -> "Laurent":
        if not isinstance(other, Laurent):
            if other == 0 and self.prec is None:
                return Laurent(0, [])
            return Laurent(self.val, [c * other for c in self.coeffs], self.prec)
        a, b = self, other
        if (not a.coeffs and a.prec is None) or (not b.coeffs and b.prec is None):
            return Laurent(0, [])
        val = a.val + b.val
        if a.prec is None and b.prec is None:
            prec = None
            n = len(a.coeffs) + len(b.coeffs) - 1
        else:
            prec = min(a.val + b._p, b.val + a._p)
            n = max(prec - val, 0)
        out = [Fraction(0)] * max(n, 0)
        for i, ca in enumerate(a.coeffs):
            if i >= n:
                break
            if ca == 0:
                continue
            for j, cb in enumerate(b.coeffs):
                if i + j >= n:
                    break
                out[i + j] = out[i + j] + ca * cb
        return Laurent(val, out, prec)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Laurent":
        result = Laurent.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self, terms: int) -> "Laurent":
        """1/self with ``terms`` relative terms (fewer if self is approximate)."""
        if not self.coeffs:
            raise PrecisionError("cannot invert a series with no known nonzero term")
        n = terms if self.prec is None else min(terms, self.prec - self.val)
        c0 = self.coeffs[0]
        inv0 = 1 / c0
        out = [inv0]
        cs = self.coeffs
        for k in range(1, n):
            acc = Fraction(0)
            for j in range(1, min(k, len(cs) - 1) + 1):
                acc = acc + cs[j] * out[k - j]
            out.append(-acc * inv0)
        return Laurent(-self.val, out, -self.val + n)

    def truediv(self, other: "Laurent", terms: int) -> "Laurent":
        return self * other.inverse(terms)

    def sqrt_one_plus(self, terms: int) -> "Laurent":
        """Square root of a power series with constant term 1."""
        if self.val != 0 or self.coeffs[0] != 1:
            raise ValueError("sqrt_one_plus needs constant term 1")
        n = terms if self.prec is None else min(terms, self.prec)
        cs = self.coeffs
        out = [Fraction(1)]
        for k in range(1, n):
            u = cs[k] if k < len(cs) else Fraction(0)
            acc = Fraction(0)
            for j in range(1, k):
                acc = acc + out[j] * out[k - j]
            out.append((u - acc) / 2)
        return Laurent(0, out, n)

    def derivative(self) -> "Laurent":
        out = [c * (self.val + i) for i, c in enumerate(self.coeffs)]
        prec = None if self.prec is None else self.prec - 1
        return Laurent(self.val - 1, out, prec)

    def truncate(self, prec: int) -> "Laurent":
        return Laurent(self.val, self.coeffs, min(prec, self._p))


def poly_at(p, s: Laurent) -> Laurent:
    """Evaluate a UniPoly at a series by Horner's rule."""
    coeffs = p.coeffs
    if not coeffs:
        return Laurent(0, [])
    acc = Laurent.const(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = acc * s + c
    return acc
