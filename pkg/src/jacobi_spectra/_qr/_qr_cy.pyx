# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled tridiagonal QL kernel; mirrors _qr_py.tridiag_inplace exactly."""

cdef extern from "complex.h" nogil:
    double cabs(double complex)
    double complex csqrt(double complex)

DEF BREAKDOWN_TOL = 1e-12


def tridiag_inplace(double complex[::1] d, double complex[::1] e,
                    double deflation_tol, long max_sweeps):
    """Implicit-shift QL on a complex symmetric tridiagonal; overwrites d.

    Returns 0 on success, 1 on rotation breakdown, 2 on sweep exhaustion.
    """
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t l, m, mm, i
    cdef long total = 0
    cdef double complex g, r, s, c, p, f, b

    for l in range(n):
        while True:
            m = n - 1
            for mm in range(l, n - 1):
                if cabs(e[mm]) <= deflation_tol * (cabs(d[mm]) + cabs(d[mm + 1])):
                    m = mm
                    break
            if m == l:
                break
            total += 1
            if total > max_sweeps:
                return 2
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = csqrt(g * g + 1.0)
            if cabs(g + r) < cabs(g - r):
                r = -r
            g = d[m] - d[l] + e[l] / (g + r)
            s = 1.0
            c = 1.0
            p = 0.0
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = csqrt(f * f + g * g)
                e[i + 1] = r
                if cabs(r) <= BREAKDOWN_TOL * (cabs(f) + cabs(g)):
                    return 1
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            d[l] = d[l] - p
            e[l] = g
            e[m] = 0.0
    return 0
