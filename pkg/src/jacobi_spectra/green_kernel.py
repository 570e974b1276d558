"""Green kernel of the free difference equation and the perturbation kernel built on it."""

from __future__ import annotations

import numpy as np

from .operator_core import ComplexJacobiOperator, weight_d
from .polynomial import ComplexPolynomial

# below this the closed form of G is a 0/0; switch to the geometric-sum form
_STABLE_THRESHOLD = 1e-6


def green(n: int, m: int, z) -> complex:
    """G(n, m; z) = (z^{m-n} - z^{n-m}) / (z - 1/z) for m > n, else 0."""
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    z = complex(z)
    if z == 0:
        raise ValueError("green kernel undefined at z = 0")
    if m <= n:
        return 0.0 + 0.0j
    k = m - n
    if abs(z * z - 1.0) < _STABLE_THRESHOLD:
        # z^{n-m+1} (1 + z^2 + ... + z^{2(k-1)}), finite at z = +-1
        acc = 0.0 + 0.0j
        for j in range(k):
            acc += z ** (2 * j)
        return z ** (1 - k) * acc
    return (z**k - z**-k) / (z - 1.0 / z)


def kernel_J(op: ComplexJacobiOperator, n: int, m: int, z) -> complex:
    """J(n, m; z) = -b_m G(n, m; z) + (1 - a_{m-1} c_{m-1}) G(n, m-1; z)."""
    if m < n or n < 0:
        raise ValueError("kernel_J requires m >= n >= 0")
    z = complex(z)
    if z == 0:
        raise ValueError("kernel undefined at z = 0")
    if m == n:
        return 0.0 + 0.0j
    return -op.b(m) * green(n, m, z) + (1.0 - op.a(m - 1) * op.c(m - 1)) * green(n, m - 1, z)


def kernel_J_tilde_poly(op: ComplexJacobiOperator, n: int, m: int) -> ComplexPolynomial:
    """Polynomial form of J~(n, m; z) = J(n, m; z) z^{m-n}.

    Coefficients: -b_m at the odd powers z, z^3, ..., z^{2(m-n)-1} and
    (1 - a_{m-1} c_{m-1}) at the even powers z^2, ..., z^{2(m-n)-2}.
    """
    if m <= n or n < 0:
        raise ValueError("kernel_J_tilde_poly requires m > n >= 0")
    k = m - n
    coeffs = np.zeros(2 * k, dtype=complex)
    coeffs[1 : 2 * k : 2] = -op.b(m)
    if k >= 2:
        coeffs[2 : 2 * k - 1 : 2] = 1.0 - op.a(m - 1) * op.c(m - 1)
    return ComplexPolynomial(coeffs)


def kernel_bound_margin(op: ComplexJacobiOperator, n: int, m: int, z) -> float:
    """Slack of |J~(n, m; z)| <= |z| d_m min{m-n, 2/|z^2-1|}; nonnegative up to rounding."""
    z = complex(z)
    if z in (0, 1, -1):
        raise ValueError("bound undefined at z = 0, +1, -1")
    if m <= n:
        raise ValueError("requires m > n")
    bound = abs(z) * weight_d(op, m) * min(float(m - n), 2.0 / abs(z * z - 1.0))
    return bound - abs(kernel_J_tilde_poly(op, n, m)(z))
