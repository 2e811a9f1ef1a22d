"""Quadrature check of the Cauchy-Stokes formula on P^1.

For omega = r(z) dz and a compactly supported v,

    lhs = integral of omega ^ dbar v = integral r(z) dbar v (-2i) dA
    rhs = 2 pi i * sum over poles P of res_P(omega) v(P)

with dconj(z) ^ dz = 2i dA, the one place where the orientation of C enters.
The integrand is split by a smooth partition of unity: the part away from the
poles is summed on a uniform grid (trapezoid rule, spectrally accurate for
smooth compactly supported integrands), and each pole patch is integrated in
polar coordinates where r dr removes the 1/|z - P| singularity.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from polarhom.arith.numfield import NumberFieldElement
from polarhom.curves.differential import Differential1, HigherOrderPole, pole_places, residue_value
from polarhom.stokes import kernels
from polarhom.stokes.forms import SmoothTestForm, v_eval


class QuadratureFailure(RuntimeError):
    """The quadrature did not settle to the tolerance within the configured depth."""


@dataclass(frozen=True)
class QuadratureConfig:
    base_cell: float = 0.05
    depth: int = 4
    tol: float = 1e-6
    radial_nodes: int = 24
    angular_nodes: int = 32

    def __post_init__(self):
        if self.tol <= 0:
            raise ValueError("tolerance must be positive")
        if self.depth < 1:
            raise ValueError("depth must be at least 1")
        if self.base_cell <= 0:
            raise ValueError("cell size must be positive")


@dataclass
class StokesResult:
    lhs: complex
    rhs: complex
    rel_error: float
    cells: int
    levels: list = field(default_factory=list)  # (cell size, lhs, rel_error)
    backend: str = ""

    @property
    def passed(self) -> bool:
        return self.rel_error <= self.tol

    tol: float = 1e-6


def _embed(value, root: complex) -> complex:
    if isinstance(value, NumberFieldElement):
        return complex(sum(float(c) * root ** i for i, c in enumerate(value.coeffs)))
    return complex(float(value))


def numeric_poles(w: Differential1) -> list[tuple[complex, complex]]:
    """(location, residue) for every finite pole, from the exact residues."""
    if not w.curve.is_p1:
        raise ValueError("the quadrature oracle works on P^1 only")
    out = []
    for p, m, _ in pole_places(w):
        res = residue_value(w, p)
        if isinstance(p.x, NumberFieldElement):
            mp = p.x.field.minpoly
            roots = np.roots([float(c) for c in reversed(mp.coeffs)])
            for root in roots:
                out.append((_embed(p.x, root), _embed(res, root)))
        else:
            out.append((complex(float(p.x)), _embed(res, 0)))
    return out


def _coeffs(poly) -> np.ndarray:
    return np.array([complex(float(c)) for c in reversed(poly.coeffs)] or [0j], dtype=np.complex128)


def _gauss(n: int):
    return np.polynomial.legendre.leggauss(n)


def stokes_check(
    w: Differential1, v: SmoothTestForm, cfg: QuadratureConfig | None = None, sign: int = 1, backend: str | None = None
) -> StokesResult:
    """Compare both sides; ``sign=-1`` flips the residue side (negative control)."""
    cfg = cfg or QuadratureConfig()
    if backend is None:
        grid_sum, polar_sum = kernels.grid_sum, kernels.polar_sum
        backend = kernels.BACKEND
    else:
        grid_sum, polar_sum = kernels.load(backend)
    for p, _, _ in pole_places(w):
        residue_value(w, p)  # raises HigherOrderPole
    poles = numeric_poles(w)
    rhs = sign * 2j * math.pi * sum(r * complex(v_eval(v, z)) for z, r in poles)

    js, ks, cs = v.arrays()
    num, den = _coeffs(w.A), _coeffs(w.C)
    inside = [z for z, _ in poles if abs(z - v.center) < v.radius * (1 + 1e-12)]
    locs = [z for z, _ in poles]
    seps = [abs(a - b) for i, a in enumerate(locs) for b in locs[i + 1:]]
    rho = min([v.radius / 4] + [s / 3 for s in seps])
    rhos = np.full(len(inside), rho)
    pole_arr = np.array(inside, dtype=np.complex128)

    levels = []
    lhs_prev = None
    cells = 0
    lhs = 0j
    scale = 0.0
    for level in range(cfg.depth):
        h = cfg.base_cell * v.radius / 2 ** level
        n = int(math.ceil(2 * v.radius / h)) + 1
        x0 = v.center.real - v.radius
        y0 = v.center.imag - v.radius
        nr = cfg.radial_nodes * 2 ** level
        nt = cfg.angular_nodes * 2 ** level
        rn, rw = _gauss(nr)
        args = (v.center, v.radius, js, ks, cs, num, den)
        lhs = grid_sum(x0, y0, h, n, n, *args, pole_arr, rhos)
        l1 = grid_sum(x0, y0, h, n, n, *args, pole_arr, rhos, True)
        for z in inside:
            lhs += polar_sum(z, rho, rn, rw, nt, *args)
            l1 += polar_sum(z, rho, rn, rw, nt, *args, True)
        cells = n * n + len(inside) * nr * nt
        scale = 1e-2 * abs(l1)
        rel = abs(lhs - rhs) / max(abs(rhs), scale)
        levels.append((h, lhs, rel))
        if lhs_prev is not None and abs(lhs - lhs_prev) <= 0.1 * cfg.tol * max(abs(lhs), scale):
            break
        lhs_prev = lhs
    else:
        if cfg.depth > 1:
            raise QuadratureFailure(f"quadrature did not settle after {cfg.depth} levels: {levels}")
    rel = abs(lhs - rhs) / max(abs(rhs), scale)
    return StokesResult(complex(lhs), complex(rhs), float(rel), cells, levels, backend, cfg.tol)


def packaged_configs():
    """The three reference configurations: (name, omega, v, expected rhs or None)."""
    from polarhom.curves.differential import Differential1 as D

    return [
        ("dz/z, unit bump", D.p1([1], [0, 1]), SmoothTestForm(0j, 1.0), 2j * math.pi * math.exp(-1)),
        ("dz/z, support off the poles", D.p1([1], [0, 1]), SmoothTestForm(3 + 1j, 1.0, ((1, 1, 1.0), (0, 0, 2.0))), 0j),
        ("-dz/(z(z-1)), both poles", D.p1([-1], [0, -1, 1]), SmoothTestForm(0.3 + 0.1j, 1.5, ((0, 0, 1.0), (1, 0, 0.5j), (0, 1, 0.25))), None),
    ]


__all__ = ["HigherOrderPole", "QuadratureConfig", "QuadratureFailure", "StokesResult", "packaged_configs", "stokes_check"]
