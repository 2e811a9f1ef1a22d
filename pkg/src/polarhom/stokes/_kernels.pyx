# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled quadrature kernels; same contract as _kernels_py."""
import numpy as np
cimport numpy as cnp
from libc.math cimport exp, sqrt, cos, sin, fabs, M_PI

cnp.import_array()


cdef inline double _step(double u) noexcept nogil:
    cdef double a, b
    if u <= 0.0:
        return 1.0
    if u >= 1.0:
        return 0.0
    a = exp(-1.0 / (1.0 - u))
    b = exp(-1.0 / u)
    return a / (a + b)


cdef inline double complex _horner(const double complex* c, Py_ssize_t n, double complex z) noexcept nogil:
    cdef double complex acc = 0
    cdef Py_ssize_t i
    for i in range(n):
        acc = acc * z + c[i]
    return acc


cdef inline double complex _ipow(double complex z, long n) noexcept nogil:
    cdef double complex acc = 1
    cdef long i
    for i in range(n):
        acc = acc * z
    return acc


cdef struct Data:
    double complex center
    double radius
    Py_ssize_t nterms, nnum, nden
    const cnp.int64_t* js
    const cnp.int64_t* ks
    const double complex* cs
    const double complex* num
    const double complex* den


cdef double complex _integrand(double complex z, const Data* D) noexcept nogil:
    cdef double complex w = z - D.center
    cdef double rr = D.radius * D.radius
    cdef double r2 = (w.real * w.real + w.imag * w.imag) / rr
    cdef double b
    cdef double complex db, p = 0, dp = 0, zj, zb, d, dv
    cdef Py_ssize_t t
    if r2 >= 1.0:
        return 0
    b = exp(1.0 / (r2 - 1.0))
    db = -b / ((r2 - 1.0) * (r2 - 1.0)) * w / rr
    zb = z.conjugate()
    for t in range(D.nterms):
        zj = _ipow(z, D.js[t])
        p = p + D.cs[t] * zj * _ipow(zb, D.ks[t])
        if D.ks[t] > 0:
            dp = dp + D.cs[t] * D.ks[t] * zj * _ipow(zb, D.ks[t] - 1)
    dv = dp * b + p * db
    d = _horner(D.den, D.nden, z)
    if d == 0:
        return 0
    return _horner(D.num, D.nnum, z) / d * dv * (-2j)


cdef class _Arrays:
    """Keeps contiguous copies alive while raw pointers into them are used."""
    cdef object js, ks, cs, num, den
    cdef Data data

    def __init__(self, double complex center, double radius, js, ks, cs, num, den):
        self.js = np.ascontiguousarray(js, dtype=np.int64)
        self.ks = np.ascontiguousarray(ks, dtype=np.int64)
        self.cs = np.ascontiguousarray(cs, dtype=np.complex128)
        self.num = np.ascontiguousarray(num, dtype=np.complex128)
        self.den = np.ascontiguousarray(den, dtype=np.complex128)
        self.data.center = center
        self.data.radius = radius
        self.data.nterms = self.js.shape[0]
        self.data.nnum = self.num.shape[0]
        self.data.nden = self.den.shape[0]
        self.data.js = <const cnp.int64_t*> cnp.PyArray_DATA(self.js)
        self.data.ks = <const cnp.int64_t*> cnp.PyArray_DATA(self.ks)
        self.data.cs = <const double complex*> cnp.PyArray_DATA(self.cs)
        self.data.num = <const double complex*> cnp.PyArray_DATA(self.num)
        self.data.den = <const double complex*> cnp.PyArray_DATA(self.den)


def grid_sum(double x0, double y0, double h, long nx, long ny, double complex center, double radius,
             js, ks, cs, num, den, poles, rhos, bint absolute=False):
    cdef _Arrays arr = _Arrays(center, radius, js, ks, cs, num, den)
    cdef const Data* D = &arr.data
    cdef double complex[:] pl = np.ascontiguousarray(poles, dtype=np.complex128)
    cdef double[:] rh = np.ascontiguousarray(rhos, dtype=np.float64)
    cdef long i, j, k
    cdef double complex z, g, row
    cdef double complex total = 0
    cdef double wgt, dist, x, y
    with nogil:
        for j in range(ny):
            y = y0 + h * j
            row = 0
            for i in range(nx):
                x = x0 + h * i
                z = x + 1j * y
                wgt = 1.0
                for k in range(pl.shape[0]):
                    dist = sqrt((z.real - pl[k].real) ** 2 + (z.imag - pl[k].imag) ** 2)
                    wgt = wgt - _step((dist - rh[k]) / rh[k])
                if wgt == 0.0:
                    continue
                g = _integrand(z, D) * wgt
                if absolute:
                    row = row + sqrt(g.real * g.real + g.imag * g.imag)
                else:
                    row = row + g
            total = total + row
    return complex(total * h * h)


def polar_sum(double complex pole, double rho, r_nodes, r_weights, long n_theta, double complex center,
              double radius, js, ks, cs, num, den, bint absolute=False):
    cdef _Arrays arr = _Arrays(center, radius, js, ks, cs, num, den)
    cdef const Data* D = &arr.data
    cdef double[:] rn = np.ascontiguousarray(r_nodes, dtype=np.float64)
    cdef double[:] rw = np.ascontiguousarray(r_weights, dtype=np.float64)
    cdef long a, t
    cdef double r, psi, th
    cdef double complex z, g, ring
    cdef double complex total = 0
    with nogil:
        for a in range(rn.shape[0]):
            r = rho * (1.0 + rn[a])
            psi = _step((r - rho) / rho)
            if psi == 0.0:
                continue
            ring = 0
            for t in range(n_theta):
                th = 2.0 * M_PI * t / n_theta
                z = pole + r * (cos(th) + 1j * sin(th))
                g = _integrand(z, D) * psi * r
                if absolute:
                    ring = ring + sqrt(g.real * g.real + g.imag * g.imag)
                else:
                    ring = ring + g
            total = total + ring * rw[a] * rho
    return complex(total * (2.0 * M_PI / n_theta))
