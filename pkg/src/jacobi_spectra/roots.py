"""Polynomial root finding by simultaneous Aberth-Ehrlich iteration with Newton polish."""

from __future__ import annotations

import cmath

import numpy as np

from .polynomial import ComplexPolynomial


def _eval_with_derivative(coeffs, z):
    # Horner for p(z) and p'(z); coeffs lowest degree first
    p = 0.0 + 0.0j
    dp = 0.0 + 0.0j
    for c in coeffs[::-1]:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def newton_polish(coeffs, root, target, max_iter: int = 50) -> complex:
    """Refine a single root until |p(root)| <= target or the residual stalls."""
    z = complex(root)
    best, best_res = z, abs(_eval_with_derivative(coeffs, z)[0])
    for _ in range(max_iter):
        p, dp = _eval_with_derivative(coeffs, z)
        if abs(p) <= target or dp == 0:
            break
        z = z - p / dp
        res = abs(_eval_with_derivative(coeffs, z)[0])
        if res < best_res:
            best, best_res = z, res
        else:
            break
    return best


def polynomial_roots(poly, tol: float = 1e-14, max_iter: int = 200) -> list:
    """All complex roots of the polynomial, polished to small residual.

    Accepts a ComplexPolynomial or a coefficient sequence (lowest degree first).
    """
    if isinstance(poly, ComplexPolynomial):
        coeffs = np.asarray(poly.coeffs, dtype=complex)
    else:
        coeffs = np.atleast_1d(np.asarray(poly, dtype=complex))
    nz = np.nonzero(np.abs(coeffs) > 0)[0]
    if nz.size == 0:
        raise ValueError("zero polynomial has no well-defined roots")
    coeffs = coeffs[: nz[-1] + 1]
    deg = len(coeffs) - 1
    if deg == 0:
        return []

    # factor out roots at the origin
    origin = 0
    while abs(coeffs[0]) == 0:
        coeffs = coeffs[1:]
        origin += 1
    deg = len(coeffs) - 1
    roots = [0.0 + 0.0j] * origin
    if deg == 0:
        return roots
    if deg == 1:
        roots.append(complex(-coeffs[0] / coeffs[1]))
        return roots

    scale = np.max(np.abs(coeffs))
    radius = 1.0 + float(np.max(np.abs(coeffs[:-1] / coeffs[-1])))
    zs = np.array(
        [0.7 * radius * cmath.exp(2j * cmath.pi * (k / deg) + 0.4j) for k in range(deg)],
        dtype=complex,
    )
    for _ in range(max_iter):
        done = True
        for k in range(deg):
            p, dp = _eval_with_derivative(coeffs, zs[k])
            if dp == 0:
                zs[k] += 1e-8 * (1 + abs(zs[k]))
                done = False
                continue
            nk = p / dp
            rep = sum(1.0 / (zs[k] - zs[j]) for j in range(deg) if j != k)
            denom = 1.0 - nk * rep
            w = nk if denom == 0 else nk / denom
            zs[k] -= w
            if abs(w) > tol * (1.0 + abs(zs[k])):
                done = False
        if done:
            break

    target = 1e-13 * scale
    roots.extend(newton_polish(coeffs, z, target) for z in zs)
    return roots


def cluster_roots(roots, tol: float = 1e-6) -> list:
    """Group nearly coincident roots; returns (representative, multiplicity) pairs."""
    out = []
    for r in sorted(roots, key=lambda w: (w.real, w.imag)):
        for i, (rep, mult) in enumerate(out):
            if abs(r - rep) <= tol:
                out[i] = ((rep * mult + r) / (mult + 1), mult + 1)
                break
        else:
            out.append((r, 1))
    return out
