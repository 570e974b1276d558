"""Compare the compiled and pure-Python QR kernels on truncated operators.

Run as: python3 benchmarks/bench_qr.py
"""

import time

import numpy as np

from jacobi_spectra._qr import BACKEND, tridiag_eigenvalues
from jacobi_spectra.corpus import make_corpus
from jacobi_spectra.spectrum import _tridiagonal_data


def bench(op, N, backend, repeats=3):
    d, e = _tridiagonal_data(op, N)
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        tridiag_eigenvalues(d, e, backend=backend)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    rng = np.random.default_rng(0)
    op = make_corpus(rng, 1, max_support=8)[0]
    print(f"default backend: {BACKEND}")
    print(f"{'N':>6} {'python (s)':>12} {'cython (s)':>12} {'speedup':>9}")
    for N in (100, 200, 400, 800):
        t_py = bench(op, N, "python")
        try:
            t_cy = bench(op, N, "cython")
        except ValueError:
            print(f"{N:>6} {t_py:>12.4f} {'n/a':>12} {'n/a':>9}")
            continue
        print(f"{N:>6} {t_py:>12.4f} {t_cy:>12.4f} {t_py / t_cy:>8.1f}x")


if __name__ == "__main__":
    main()
