# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the numeric hot loops; see ``_kernels_py`` for the contract."""

from libc.math cimport expm1, fabs, pow

from ._gk21 import WG as _WG, WGK as _WGK, XGK as _XGK

cdef double XGK[11]
cdef double WGK[11]
cdef double WG[5]
for _i in range(11):
    XGK[_i] = _XGK[_i]
    WGK[_i] = _WGK[_i]
for _i in range(5):
    WG[_i] = _WG[_i]


cdef inline double _integrand(double z, int m, int n) nogil:
    cdef double d = expm1(-2.0 * z)
    cdef double t = -d / (2.0 + d)
    cdef double r = 1.0
    cdef double q = t / z
    cdef int i
    for i in range(n):
        r *= q
    for i in range(m - n):
        r *= t
    return r


def integrand(double z, int m, int n):
    return _integrand(z, m, n)


def gk21(double a, double b, int m, int n):
    cdef double centre = 0.5 * (a + b)
    cdef double half = 0.5 * (b - a)
    cdef double res_k = WGK[10] * _integrand(centre, m, n)
    cdef double res_g = 0.0
    cdef double dx, fs
    cdef int i
    for i in range(10):
        dx = half * XGK[i]
        fs = _integrand(centre - dx, m, n) + _integrand(centre + dx, m, n)
        res_k += WGK[i] * fs
        if i % 2:
            res_g += WG[i // 2] * fs
    return res_k * half, fabs((res_k - res_g) * half)


def odd_power_sum(int e, long K):
    # Neumaier-compensated, smallest terms first.
    cdef double s = 0.0, c = 0.0, x, t
    cdef long k
    for k in range(K, 0, -1):
        x = pow(<double>(2 * k - 1), -e)
        t = s + x
        if fabs(s) >= fabs(x):
            c += (s - t) + x
        else:
            c += (x - t) + s
        s = t
    return s + c
