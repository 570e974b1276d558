"""Discrete spectrum two ways: Jost-function zeros mapped through z + 1/z, and
eigenvalues of finite truncations, with reconciliation diagnostics."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from . import _qr
from ._qr.errors import QRBreakdown
from .jost import jost_backsubstitute, jost_function
from .operator_core import ComplexJacobiOperator, gauge_factor
from .regions import band_distance
from .roots import cluster_roots, polynomial_roots

# roots with modulus above this are band-edge resonances, not discrete spectrum
DISK_EXCLUSION = 1e-12
# zeros this close to the circle are too truncation-sensitive to demand a match
BOUNDARY_SENSITIVE = 1e-3


@dataclass(frozen=True)
class DiscreteEigenvalue:
    z: complex
    lam: complex
    multiplicity: int


@dataclass
class SpectrumResult:
    """Outcome of reconciling Jost zeros against the truncation oracle."""

    jost_zeros: list
    eigenvalues_from_zeros: list
    oracle_eigenvalues: list
    matches: list = field(default_factory=list)  # (lam_zero, lam_oracle, distance)
    failures: list = field(default_factory=list)  # matchable zeros with no oracle partner
    near_boundary: list = field(default_factory=list)  # reported, never counted as failures
    band_artifact_count: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


def jost_roots_all(op: ComplexJacobiOperator) -> list:
    """All polynomial roots of the Jost function, Newton-polished."""
    poly = jost_function(op)
    if poly.degree == 0:
        return []
    return polynomial_roots(poly)


def jost_zeros(op: ComplexJacobiOperator) -> list:
    """Zeros of the Jost function strictly inside the unit disk."""
    zs = [z for z in jost_roots_all(op) if abs(z) < 1.0 - DISK_EXCLUSION]
    return sorted(zs, key=lambda w: (w.real, w.imag))


def discrete_spectrum(op: ComplexJacobiOperator) -> list:
    """Eigenvalues z + 1/z over the disk zeros, with polynomial root multiplicity."""
    out = []
    for z, mult in cluster_roots(jost_zeros(op)):
        out.append(DiscreteEigenvalue(z=z, lam=z + 1.0 / z, multiplicity=mult))
    return out


def _tridiagonal_data(op: ComplexJacobiOperator, N: int):
    d = np.array([op.b(k) for k in range(1, N + 1)], dtype=complex)
    e = np.array([cmath.sqrt(op.a(k) * op.c(k)) for k in range(1, N)], dtype=complex)
    return d, e


def truncated_eigenvalues(op: ComplexJacobiOperator, N: int, backend=None) -> np.ndarray:
    """Eigenvalues of the N x N leading principal submatrix.

    The submatrix is balanced to complex symmetric tridiagonal form by a
    diagonal similarity (off-diagonals sqrt(a_k c_k), valid since a_k c_k != 0)
    and fed to the shifted-QR chase; on rotation breakdown the dense
    Hessenberg QR runs on the raw tridiagonal instead.
    """
    if N < 2:
        raise ValueError("truncation size must be >= 2")
    d, e = _tridiagonal_data(op, N)
    try:
        return _qr.tridiag_eigenvalues(d, e, backend=backend)
    except QRBreakdown:
        H = np.zeros((N, N), dtype=complex)
        for k in range(N):
            H[k, k] = op.b(k + 1)
            if k + 1 < N:
                H[k + 1, k] = op.a(k + 1)
                H[k, k + 1] = op.c(k + 1)
        eigs = _qr.hessenberg_eigenvalues(H)
        return eigs[np.lexsort((eigs.imag, eigs.real))]


def stable_offband_eigenvalues(
    op: ComplexJacobiOperator,
    N: int,
    stability_tol: float = 1e-6,
    band_margin: float = 0.1,
) -> list:
    """Oracle eigenvalues at size N, off the band, that move < stability_tol at 2N.

    Truncation spectra of non-normal operators carry spurious values; only
    eigenvalues stable under doubling are trusted as discrete spectrum.
    """
    small = truncated_eigenvalues(op, N)
    big = truncated_eigenvalues(op, 2 * N)
    out = []
    for lam in small:
        if band_distance(lam) <= band_margin:
            continue
        if np.min(np.abs(big - lam)) < stability_tol:
            out.append(complex(lam))
    return out


def reconcile(
    op: ComplexJacobiOperator,
    N: int = 400,
    band_margin: float = 0.05,
    match_tol: float = 1e-4,
) -> SpectrumResult:
    """Pair Jost-zero eigenvalues with the nearest truncation eigenvalues.

    Oracle eigenvalues within band_margin of [-2, 2] are band artifacts and
    exempt from matching; zeros with |z| > 1 - 1e-3 or lambda within
    band_margin of the band are classified near-boundary, reported not failed.
    """
    spec = discrete_spectrum(op)
    oracle = truncated_eigenvalues(op, N)
    offband = np.array([lam for lam in oracle if band_distance(lam) > band_margin])
    result = SpectrumResult(
        jost_zeros=jost_zeros(op),
        eigenvalues_from_zeros=[ev.lam for ev in spec],
        oracle_eigenvalues=list(oracle),
        band_artifact_count=len(oracle) - len(offband),
    )
    for ev in spec:
        sensitive = abs(ev.z) > 1.0 - BOUNDARY_SENSITIVE or band_distance(ev.lam) <= band_margin
        dist = float(np.min(np.abs(offband - ev.lam))) if len(offband) else math.inf
        nearest = complex(offband[np.argmin(np.abs(offband - ev.lam))]) if len(offband) else None
        if dist < match_tol:
            result.matches.append((ev.lam, nearest, dist))
        elif sensitive:
            result.near_boundary.append((ev.lam, dist))
        else:
            result.failures.append((ev.lam, dist))
    return result


def eigenvector_check(op: ComplexJacobiOperator, z0, N: int = None) -> float:
    """Relative residual of (J_N - lambda0) h for h_n = v_n(z0), last row excluded.

    z0 must be a Jost zero: the first recurrence row closes only because
    v_0(z0) = 0.  The Jost solution lives in the gauged recurrence, so the
    eigenvector entries are v_n(z0) / k(n) with k the gauge factor.
    """
    z0 = complex(z0)
    M = op.support_bound
    if N is None:
        N = M + 40
    if N < M + 10:
        raise ValueError("truncation too small for a meaningful residual")
    result = jost_backsubstitute(op)
    if abs(result.v_tilde(0)(z0)) > 1e-10:
        raise ValueError("z0 is not a zero of the Jost function")
    lam = z0 + 1.0 / z0
    v = np.array(
        [result.v(n, z0) / gauge_factor(op, n) for n in range(N + 2)], dtype=complex
    )
    h = v[1 : N + 1]
    resid = np.zeros(N - 1, dtype=complex)
    # row k (1-based) of J_N h - lam h, k = 1 .. N-1
    resid[0] = op.b(1) * v[1] + op.c(1) * v[2] - lam * v[1]
    for k in range(2, N):
        resid[k - 1] = op.a(k - 1) * v[k - 1] + op.b(k) * v[k] + op.c(k) * v[k + 1] - lam * v[k]
    return float(np.linalg.norm(resid) / np.linalg.norm(h))
