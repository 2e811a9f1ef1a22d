"""numpy implementation of the quadrature kernels."""
from __future__ import annotations

import numpy as np


def _step(u):
    # smooth 1 -> 0 on [0, 1]
    u = np.clip(u, 0.0, 1.0)
    a = np.where(u < 1.0, np.exp(-1.0 / np.maximum(1.0 - u, 1e-300)), 0.0)
    b = np.where(u > 0.0, np.exp(-1.0 / np.maximum(u, 1e-300)), 0.0)
    return a / (a + b)


def cutoff(z, poles, rhos):
    """Sum of the pole cutoffs psi_k(z) (1 within rho_k, 0 beyond 2 rho_k)."""
    total = np.zeros(z.shape, dtype=np.float64)
    for p, rho in zip(poles, rhos):
        d = np.abs(z - p)
        total += _step((d - rho) / rho)
    return total


def integrand(z, center, radius, js, ks, cs, num, den):
    """r(z) * dbar v(z) * (-2i); num/den are highest-degree-first coefficients."""
    w = z - center
    r2 = (w.real ** 2 + w.imag ** 2) / (radius * radius)
    inside = r2 < 1.0
    safe = np.where(inside, r2, 0.0)
    b = np.where(inside, np.exp(1.0 / (safe - 1.0)), 0.0)
    db = np.where(inside, -b / (safe - 1.0) ** 2 * w / (radius * radius), 0.0)
    zb = np.conj(z)
    p = np.zeros(z.shape, dtype=np.complex128)
    dp = np.zeros(z.shape, dtype=np.complex128)
    for j, k, c in zip(js, ks, cs):
        zj = z ** j
        p += c * zj * zb ** k
        if k:
            dp += c * k * zj * zb ** (k - 1)
    dv = dp * b + p * db
    with np.errstate(divide="ignore", invalid="ignore"):
        r = np.polyval(num, z) / np.polyval(den, z)
    out = np.where(inside, r * dv * (-2j), 0.0)
    return np.where(np.isfinite(out), out, 0.0)


def grid_sum(x0, y0, h, nx, ny, center, radius, js, ks, cs, num, den, poles, rhos, absolute=False):
    """Trapezoid sum of integrand * (1 - sum psi) over an nx by ny grid."""
    xs = x0 + h * np.arange(nx)
    total = 0j
    chunk = max(1, 400000 // max(nx, 1))
    for start in range(0, ny, chunk):
        ys = y0 + h * np.arange(start, min(ny, start + chunk))
        z = xs[None, :] + 1j * ys[:, None]
        weight = 1.0 - cutoff(z, poles, rhos)
        g = integrand(z, center, radius, js, ks, cs, num, den) * weight
        total += (np.abs(g).sum() if absolute else g.sum())
    return total * h * h


def polar_sum(pole, rho, r_nodes, r_weights, n_theta, center, radius, js, ks, cs, num, den, absolute=False):
    """Integral of integrand * psi_pole over the disc of radius 2 rho, in polar coordinates."""
    theta = 2.0 * np.pi * np.arange(n_theta) / n_theta
    r = rho * (1.0 + r_nodes)  # Gauss nodes on [-1, 1] mapped to [0, 2 rho]
    z = pole + r[:, None] * np.exp(1j * theta)[None, :]
    psi = _step((np.abs(z - pole) - rho) / rho)
    g = integrand(z, center, radius, js, ks, cs, num, den) * psi * r[:, None]
    if absolute:
        g = np.abs(g)
    wr = r_weights * rho
    return (g.sum(axis=1) * wr).sum() * (2.0 * np.pi / n_theta)
