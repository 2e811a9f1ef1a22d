"""Compactly supported smooth test functions v = poly(z, conj z) * bump."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class SmoothTestForm:
    """v(z) = sum c_jk z^j conj(z)^k * exp(1/(r^2 - 1)), r = |z - center|/radius."""

    center: complex = 0j
    radius: float = 1.0
    poly: tuple = field(default=((0, 0, 1.0 + 0j),))  # (j, k, coefficient)

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("radius must be positive")
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "poly", tuple((int(j), int(k), complex(c)) for j, k, c in self.poly))

    def arrays(self):
        js = np.array([p[0] for p in self.poly], dtype=np.int64)
        ks = np.array([p[1] for p in self.poly], dtype=np.int64)
        cs = np.array([p[2] for p in self.poly], dtype=np.complex128)
        return js, ks, cs


def _poly_and_dbar(v: SmoothTestForm, z):
    zb = np.conj(z)
    p = np.zeros_like(z, dtype=np.complex128)
    dp = np.zeros_like(z, dtype=np.complex128)
    for j, k, c in v.poly:
        p = p + c * z ** j * zb ** k
        if k:
            dp = dp + c * k * z ** j * zb ** (k - 1)
    return p, dp


def bump_parts(v: SmoothTestForm, z):
    """(bump, dbar bump) at z; both vanish outside the disc."""
    z = np.asarray(z, dtype=np.complex128)
    w = z - v.center
    r2 = (w.real ** 2 + w.imag ** 2) / v.radius ** 2
    inside = r2 < 1.0
    safe = np.where(inside, r2, 0.0)
    b = np.where(inside, np.exp(1.0 / (safe - 1.0)), 0.0)
    db = np.where(inside, -b / (safe - 1.0) ** 2 * w / v.radius ** 2, 0.0)
    return b, db


def v_eval(v: SmoothTestForm, z):
    p, _ = _poly_and_dbar(v, np.asarray(z, dtype=np.complex128))
    b, _ = bump_parts(v, z)
    return p * b


def dbar_eval(v: SmoothTestForm, z):
    """Coefficient of d(conj z) in dbar v."""
    z = np.asarray(z, dtype=np.complex128)
    p, dp = _poly_and_dbar(v, z)
    b, db = bump_parts(v, z)
    return dp * b + p * db
