"""Shifted-QR eigenvalue kernels for complex tridiagonal / Hessenberg matrices.

The hot loop is the tridiagonal implicit-shift chase.  At import time the
Cython extension is preferred; the pure-Python twin is selected when the
extension is unavailable.  ``BACKEND`` records which one is active.
"""

from __future__ import annotations

import numpy as np

from . import _qr_py
from .errors import QRBreakdown, QRConvergenceError

try:
    from . import _qr_cy as _impl

    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on the build
    _impl = _qr_py
    BACKEND = "python"

hessenberg_eigenvalues = _qr_py.hessenberg_eigenvalues


def tridiag_eigenvalues(diag, offdiag, deflation_tol: float = 1e-14, max_sweeps=None,
                        backend=None) -> np.ndarray:
    """Eigenvalues of the complex symmetric tridiagonal with the given diagonals.

    Results are sorted lexicographically by (real, imag).  Raises QRBreakdown
    when a complex rotation degenerates and QRConvergenceError when the sweep
    budget (default 30 n) is exhausted; both carry partial results.
    """
    d = np.ascontiguousarray(diag, dtype=complex).copy()
    n = len(d)
    e = np.zeros(n, dtype=complex)
    e[: n - 1] = np.asarray(offdiag, dtype=complex)[: n - 1]
    if max_sweeps is None:
        max_sweeps = 30 * n
    if backend == "python":
        impl = _qr_py
    elif backend == "cython":
        from . import _qr_cy as impl  # raises if not built
    else:
        impl = _impl
    status = impl.tridiag_inplace(d, e, deflation_tol, int(max_sweeps))
    if status == 1:
        raise QRBreakdown(partial=d)
    if status == 2:
        raise QRConvergenceError(partial=d)
    return d[np.lexsort((d.imag, d.real))]
