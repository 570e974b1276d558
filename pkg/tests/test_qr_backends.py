import numpy as np
import pytest

from jacobi_spectra import _qr
from jacobi_spectra._qr import BACKEND, hessenberg_eigenvalues, tridiag_eigenvalues
from jacobi_spectra._qr.errors import QRConvergenceError
from jacobi_spectra.corpus import make_corpus
from jacobi_spectra.spectrum import truncated_eigenvalues


def _random_tridiag(rng, n):
    d = rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)
    e = rng.uniform(0.2, 1.0, n - 1) + 1j * rng.uniform(-0.5, 0.5, n - 1)
    return d, e


def _sorted(vals):
    vals = np.asarray(vals, dtype=complex)
    return vals[np.lexsort((vals.imag, vals.real))]


def _match(got, expected, tol):
    got, expected = _sorted(got), _sorted(expected)
    assert len(got) == len(expected)
    for lam in expected:
        assert np.min(np.abs(got - lam)) < tol


def test_compiled_backend_is_active():
    # the build must produce the extension; the fallback is for source checkouts
    assert BACKEND == "cython"


@pytest.mark.parametrize("backend", ["cython", "python"])
def test_tridiag_against_numpy(backend):
    rng = np.random.default_rng(1)
    for n in (4, 12, 40):
        d, e = _random_tridiag(rng, n)
        T = np.diag(d) + np.diag(e, 1) + np.diag(e, -1)
        expected = np.linalg.eigvals(T)
        got = tridiag_eigenvalues(d, e, backend=backend)
        _match(got, expected, 1e-8 * n)


def test_backends_agree():
    rng = np.random.default_rng(2)
    d, e = _random_tridiag(rng, 60)
    fast = tridiag_eigenvalues(d, e, backend="cython")
    slow = tridiag_eigenvalues(d, e, backend="python")
    assert np.max(np.abs(fast - slow)) < 1e-10


def test_hessenberg_against_numpy():
    rng = np.random.default_rng(3)
    n = 25
    H = rng.uniform(-1, 1, (n, n)) + 1j * rng.uniform(-1, 1, (n, n))
    H = np.triu(H, -1)  # upper Hessenberg
    expected = np.linalg.eigvals(H)
    got = hessenberg_eigenvalues(H)
    _match(got, expected, 1e-8)


def test_truncation_matches_numpy_on_random_operators():
    rng = np.random.default_rng(4)
    for op in make_corpus(rng, 5, max_support=6):
        N = 30
        J = np.zeros((N, N), dtype=complex)
        for k in range(N):
            J[k, k] = op.b(k + 1)
            if k + 1 < N:
                J[k + 1, k] = op.a(k + 1)
                J[k, k + 1] = op.c(k + 1)
        expected = np.linalg.eigvals(J)
        got = truncated_eigenvalues(op, N)
        _match(got, expected, 1e-7)


def test_sweep_budget_raises_with_partial():
    rng = np.random.default_rng(5)
    d, e = _random_tridiag(rng, 30)
    with pytest.raises(QRConvergenceError) as info:
        tridiag_eigenvalues(d, e, max_sweeps=1)
    assert info.value.partial is not None and len(info.value.partial) == 30


def test_deflation_threshold_is_relative():
    # a matrix already diagonal deflates with zero sweeps
    d = np.array([1.0 + 2j, -0.5, 3.0], dtype=complex)
    e = np.zeros(2, dtype=complex)
    got = tridiag_eigenvalues(d, e, max_sweeps=0)
    _match(got, d, 1e-14)


def test_module_backend_attribute():
    assert _qr.BACKEND in ("cython", "python")
