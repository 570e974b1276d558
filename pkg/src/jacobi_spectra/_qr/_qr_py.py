"""Pure-Python QR kernels; same algorithms as the compiled extension, no C speed.

``tridiag_inplace`` runs the implicit-shift QL iteration on a complex symmetric
tridiagonal matrix; the rotations satisfy c^2 + s^2 = 1 (complex orthogonal),
which preserves the tridiagonal band and keeps every sweep O(n).
``hessenberg_eigenvalues`` is the dense shifted-QR fallback used when a
rotation denominator collapses.
"""

from __future__ import annotations

import cmath

import numpy as np

# relative cancellation in sqrt(f^2 + g^2) below which the chase is abandoned
BREAKDOWN_TOL = 1e-12


def tridiag_inplace(d, e, deflation_tol: float, max_sweeps: int) -> int:
    """Implicit-shift QL on diag d (length n) and off-diag e (length n, last unused).

    Overwrites d with the eigenvalues.  Returns 0 on success, 1 on rotation
    breakdown, 2 when the sweep budget runs out; d then holds partial results.
    """
    n = len(d)
    total = 0
    for l in range(n):
        while True:
            m = n - 1
            for mm in range(l, n - 1):
                if abs(e[mm]) <= deflation_tol * (abs(d[mm]) + abs(d[mm + 1])):
                    m = mm
                    break
            if m == l:
                break
            total += 1
            if total > max_sweeps:
                return 2
            # Wilkinson-style shift from the leading 2x2 of the active block
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = cmath.sqrt(g * g + 1.0)
            if abs(g + r) < abs(g - r):
                r = -r
            g = d[m] - d[l] + e[l] / (g + r)
            s = 1.0 + 0.0j
            c = 1.0 + 0.0j
            p = 0.0 + 0.0j
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = cmath.sqrt(f * f + g * g)
                e[i + 1] = r
                if abs(r) <= BREAKDOWN_TOL * (abs(f) + abs(g)):
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


def _wilkinson_shift(a, b, c, d):
    # eigenvalue of [[a, b], [c, d]] closer to d
    tr = a + d
    s = cmath.sqrt(tr * tr - 4.0 * (a * d - b * c))
    mu1 = (tr + s) / 2.0
    mu2 = (tr - s) / 2.0
    return mu1 if abs(mu1 - d) <= abs(mu2 - d) else mu2


def hessenberg_eigenvalues(H, deflation_tol: float = 1e-14, max_sweeps=None) -> np.ndarray:
    """Eigenvalues of a complex upper-Hessenberg matrix by explicit shifted QR.

    Givens rotations, Wilkinson shift from the trailing 2x2, deflation when a
    subdiagonal entry is negligible against its diagonal neighbours.
    """
    from .errors import QRConvergenceError

    H = np.array(H, dtype=complex)
    n = H.shape[0]
    if max_sweeps is None:
        max_sweeps = 30 * n
    eigs = []
    hi = n
    total = 0
    while hi > 0:
        if hi == 1:
            eigs.append(H[0, 0])
            hi = 0
            continue
        # deflate converged trailing eigenvalues
        if abs(H[hi - 1, hi - 2]) <= deflation_tol * (abs(H[hi - 2, hi - 2]) + abs(H[hi - 1, hi - 1])):
            eigs.append(H[hi - 1, hi - 1])
            hi -= 1
            continue
        lo = hi - 1
        while lo > 0 and abs(H[lo, lo - 1]) > deflation_tol * (abs(H[lo - 1, lo - 1]) + abs(H[lo, lo])):
            lo -= 1
        if hi - lo == 2:
            a, b = H[lo, lo], H[lo, lo + 1]
            c, d = H[lo + 1, lo], H[lo + 1, lo + 1]
            tr = a + d
            s = cmath.sqrt(tr * tr - 4.0 * (a * d - b * c))
            eigs.append((tr + s) / 2.0)
            eigs.append((tr - s) / 2.0)
            hi = lo
            continue
        total += 1
        if total > max_sweeps:
            raise QRConvergenceError(partial=np.array(eigs + [H[i, i] for i in range(hi)]))
        A = H[lo:hi, lo:hi]
        k = hi - lo
        mu = _wilkinson_shift(A[-2, -2], A[-2, -1], A[-1, -2], A[-1, -1])
        # explicit QR of A - mu I via Givens, then RQ + mu I
        R = A - mu * np.eye(k, dtype=complex)
        rot = []
        for i in range(k - 1):
            x, y = R[i, i], R[i + 1, i]
            nrm = cmath.sqrt(x * np.conj(x) + y * np.conj(y)).real
            if nrm == 0.0:
                cg, sg = 1.0 + 0.0j, 0.0 + 0.0j
            else:
                cg, sg = x / nrm, y / nrm
            rot.append((cg, sg))
            ri, rj = R[i, i:].copy(), R[i + 1, i:].copy()
            R[i, i:] = np.conj(cg) * ri + np.conj(sg) * rj
            R[i + 1, i:] = -sg * ri + cg * rj
        for i, (cg, sg) in enumerate(rot):
            ci, cj = R[: i + 2, i].copy(), R[: i + 2, i + 1].copy()
            R[: i + 2, i] = ci * cg + cj * sg
            R[: i + 2, i + 1] = -ci * np.conj(sg) + cj * np.conj(cg)
        H[lo:hi, lo:hi] = R + mu * np.eye(k, dtype=complex)
    return np.asarray(eigs, dtype=complex)
