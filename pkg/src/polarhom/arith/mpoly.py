"""Sparse multivariate polynomials with exact coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from polarhom.arith.poly import UniPoly, interpolate, resultant as uni_resultant


class MPoly:
    """Polynomial in ``nvars`` variables stored as {exponent tuple: coefficient}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, terms: Mapping[tuple, object] | None = None, nvars: int = 2):
        self.nvars = nvars
        clean = {}
        for exps, c in (terms or {}).items():
            if len(exps) != nvars:
                raise ValueError(f"exponent {exps} does not match {nvars} variables")
            c = Fraction(c) if isinstance(c, (int, str)) else c
            if c != 0:
                clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def const(cls, c, nvars: int = 2) -> "MPoly":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def var(cls, i: int, nvars: int = 2) -> "MPoly":
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): 1}, nvars)

    @classmethod
    def linear(cls, coeffs: Sequence, const=0) -> "MPoly":
        """c_0 x_0 + ... + c_{n-1} x_{n-1} + const."""
        n = len(coeffs)
        p = cls.const(const, n)
        for i, c in enumerate(coeffs):
            p = p + cls.var(i, n) * c
        return p

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            other = MPoly.const(other, self.nvars)
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"MPoly({self.format()})"

    def format(self, names: Sequence[str] | None = None) -> str:
        names = names or ["x", "y", "z", "w"][: self.nvars]
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            c = self.terms[e]
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return MPoly.const(other, self.nvars)

    def __add__(self, other) -> "MPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(out, self.nvars)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other) -> "MPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            return MPoly({e: c * other for e, c in self.terms.items()}, self.nvars)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        result = MPoly.const(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def diff(self, i: int) -> "MPoly":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return MPoly(out, self.nvars)

    def __call__(self, *values):
        """Evaluate at a point; values may be Fractions or number-field elements."""
        if len(values) != self.nvars:
            raise ValueError(f"expected {self.nvars} values")
        total = Fraction(0)
        powers = [{} for _ in values]
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    cache = powers[i]
                    if k not in cache:
                        cache[k] = values[i] ** k
                    term = term * cache[k]
            total = total + term
        return total

    def substitute(self, images: Sequence["MPoly"]) -> "MPoly":
        """Replace variable i by images[i] (all images share a variable count)."""
        nv = images[0].nvars
        total = MPoly({}, nv)
        pow_cache: dict = {}
        for e, c in self.terms.items():
            term = MPoly.const(c, nv)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in pow_cache:
                        pow_cache[key] = images[i] ** k
                    term = term * pow_cache[key]
            total = total + term
        return total

    def as_univariate(self, var: int, at: Sequence | None = None) -> UniPoly:
        """Collect in ``var`` after fixing the other variables to ``at`` (in order)."""
        at = list(at or [])
        coeffs: dict[int, object] = {}
        for e, c in self.terms.items():
            term = c
            j = 0
            for i, k in enumerate(e):
                if i == var:
                    continue
                if k:
                    term = term * at[j] ** k
                j += 1
            coeffs[e[var]] = coeffs.get(e[var], 0) + term
        if not coeffs:
            return UniPoly()
        return UniPoly([coeffs.get(i, 0) for i in range(max(coeffs) + 1)])

    @classmethod
    def from_univariate(cls, p: UniPoly, var: int, nvars: int) -> "MPoly":
        out = {}
        for i, c in enumerate(p.coeffs):
            e = [0] * nvars
            e[var] = i
            out[tuple(e)] = c
        return cls(out, nvars)


def bivariate_resultant(p: MPoly, q: MPoly, eliminate: int = 1) -> UniPoly:
    """Res_{eliminate}(p, q) as a polynomial in the remaining variable.

    Computed by evaluation at rational nodes and Newton interpolation; the
    Sylvester matrix uses the formal degrees in the eliminated variable so
    every evaluation is an exact specialization.
    """
    if p.nvars != 2 or q.nvars != 2:
        raise ValueError("bivariate resultant needs two-variable polynomials")
    dp, dq = p.degree_in(eliminate), q.degree_in(eliminate)
    if dp <= 0 and dq <= 0:
        raise ValueError("both polynomials are constant in the eliminated variable")
    bound = max(p.total_degree(), 0) * max(q.total_degree(), 0)
    xs, ys = [], []
    for k in range(bound + 1):
        node = Fraction(k) if k % 2 == 0 else Fraction(-k)
        pu = p.as_univariate(eliminate, [node])
        qu = q.as_univariate(eliminate, [node])
        xs.append(node)
        ys.append(uni_resultant(pu, qu, dp, dq))
    return interpolate(xs, ys)
