"""Jost solution of the perturbed recurrence, by exact back-substitution and by
successive approximations, plus the quantitative error bounds both must obey."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .green_kernel import kernel_J_tilde_poly
from .operator_core import ComplexJacobiOperator, sigma0, sigma1
from .polynomial import ONE, ComplexPolynomial


def phi(z) -> float:
    """phi(z) = 2|z| / |z^2 - 1|, the kernel amplification factor."""
    z = complex(z)
    denom = abs(z * z - 1.0)
    if denom == 0:
        raise ValueError("phi undefined at z = +-1")
    return 2.0 * abs(z) / denom


@dataclass(frozen=True)
class JostResult:
    """Tilde-normalized Jost components v~_n as polynomials for 0 <= n <= M."""

    operator: ComplexJacobiOperator
    polys: tuple
    method: str
    trace: tuple = ()

    def v_tilde(self, n: int) -> ComplexPolynomial:
        if n < 0:
            raise IndexError("n must be >= 0")
        return self.polys[n] if n < len(self.polys) else ONE

    def v(self, n: int, z) -> complex:
        """Jost solution value v_n(z) = v~_n(z) z^n."""
        z = complex(z)
        return self.v_tilde(n)(z) * z**n


@dataclass(frozen=True)
class SuccessiveResult:
    """Point values of v~_n from the iteration, with the per-iterate sup-norms."""

    values: np.ndarray
    iterates: tuple
    trace: tuple
    converged: bool


def _tilde_kernels(op: ComplexJacobiOperator):
    M = op.support_bound
    return {
        (n, m): kernel_J_tilde_poly(op, n, m)
        for n in range(M)
        for m in range(n + 1, M + 1)
    }


def jost_backsubstitute(op: ComplexJacobiOperator) -> JostResult:
    """Solve v~_n = 1 + sum_{m>n} J~(n, m) v~_m exactly, descending from n = M.

    The kernel is strictly upper triangular with finite band, so the triangular
    solve is exact up to rounding and each v~_n is a polynomial.
    """
    M = op.support_bound
    kernels = _tilde_kernels(op)
    polys = [ONE] * (M + 1)
    for n in range(M - 1, -1, -1):
        acc = np.zeros(1, dtype=complex)
        for m in range(n + 1, M + 1):
            term = np.convolve(kernels[(n, m)].coeffs, polys[m].coeffs)
            if len(term) > len(acc):
                acc, term = term.copy(), acc
            acc[: len(term)] += term
        acc[0] += 1.0
        polys[n] = ComplexPolynomial(acc)
    return JostResult(op, tuple(polys), method="back-substitution")


def jost_function(op: ComplexJacobiOperator) -> ComplexPolynomial:
    """The Jost function v_0 = v~_0 as an explicit polynomial in z."""
    return jost_backsubstitute(op).v_tilde(0)


def jost_successive(op: ComplexJacobiOperator, z, max_iter=None, tol: float = 1e-14) -> SuccessiveResult:
    """Successive approximations f_{n,1} = g_n, f_{n,j+1} = sum_m J~(n,m;z) f_{m,j}.

    For finite support the kernel is nilpotent, so the iteration terminates
    exactly after at most M steps; max_iter defaults to M + 1.
    """
    z = complex(z)
    M = op.support_bound
    if max_iter is None:
        max_iter = M + 1
    kernels = _tilde_kernels(op)
    kvals = {key: poly(z) for key, poly in kernels.items()}

    def apply_kernel(f):
        out = np.zeros(M + 1, dtype=complex)
        for n in range(M):
            out[n] = sum(kvals[(n, m)] * f[m] for m in range(n + 1, M + 1))
        return out

    g = apply_kernel(np.ones(M + 1, dtype=complex))
    iterates = [g]
    trace = [float(np.max(np.abs(g))) if len(g) else 0.0]
    total = g.copy()
    j = 1
    while trace[-1] >= tol and j < max_iter:
        nxt = apply_kernel(iterates[-1])
        iterates.append(nxt)
        trace.append(float(np.max(np.abs(nxt))))
        total += nxt
        j += 1
    converged = trace[-1] < tol
    values = 1.0 + total
    return SuccessiveResult(values, tuple(iterates), tuple(trace), converged)


def bound_margin_i(op: ComplexJacobiOperator, z, n: int, result: JostResult = None) -> float:
    """Slack of |v_n - z^n| <= |z|^n phi(z) sigma0(n) exp(phi(z) sigma0(n))."""
    z = complex(z)
    if z in (0, 1, -1):
        raise ValueError("bound (i) undefined at z = 0, +1, -1")
    if result is None:
        result = jost_backsubstitute(op)
    lhs = abs(z) ** n * abs(result.v_tilde(n)(z) - 1.0)
    q = phi(z) * sigma0(op, n)
    if q > 700.0:  # bound is vacuous, exp would overflow
        return math.inf
    rhs = abs(z) ** n * q * math.exp(q)
    return rhs - lhs


def bound_margin_ii(op: ComplexJacobiOperator, z, n: int, result: JostResult = None) -> float:
    """Slack of |v_n - z^n| <= |z|^n sigma1(n) exp(sigma1(n)); valid on the closed disk."""
    z = complex(z)
    if result is None:
        result = jost_backsubstitute(op)
    s = sigma1(op, n)
    if s > 700.0:  # bound is vacuous, exp would overflow
        return math.inf
    dev = abs(result.v_tilde(n)(z) - 1.0)
    if z == 0:
        # tilde form: |v~_n(0) - 1| <= sigma1(n) exp(sigma1(n))
        return s * math.exp(s) - dev
    return abs(z) ** n * (s * math.exp(s) - dev)
