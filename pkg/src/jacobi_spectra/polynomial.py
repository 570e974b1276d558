"""Dense complex polynomials, lowest-degree coefficient first."""

from __future__ import annotations

import numpy as np

TRIM_TOL = 1e-14


class ComplexPolynomial:
    """Immutable dense polynomial over the complexes.

    Coefficients are stored lowest degree first; trailing coefficients with
    modulus <= 1e-14 are trimmed at construction.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, trim: bool = True):
        c = np.atleast_1d(np.asarray(coeffs, dtype=complex)).copy()
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must be a nonempty 1-d sequence")
        if trim:
            nz = np.nonzero(np.abs(c) > TRIM_TOL)[0]
            c = c[: nz[-1] + 1] if nz.size else c[:1]
        c.setflags(write=False)
        self.coeffs = c

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        out = np.polyval(self.coeffs[::-1], z)
        return complex(out) if np.ndim(out) == 0 else out

    def __add__(self, other):
        if np.isscalar(other) or isinstance(other, complex):
            c = self.coeffs.copy()
            c[0] += other
            return ComplexPolynomial(c)
        n = max(len(self.coeffs), len(other.coeffs))
        c = np.zeros(n, dtype=complex)
        c[: len(self.coeffs)] += self.coeffs
        c[: len(other.coeffs)] += other.coeffs
        return ComplexPolynomial(c)

    __radd__ = __add__

    def __mul__(self, other):
        if np.isscalar(other) or isinstance(other, complex):
            return ComplexPolynomial(self.coeffs * other)
        return ComplexPolynomial(np.convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def derivative(self) -> "ComplexPolynomial":
        if self.degree == 0:
            return ComplexPolynomial([0.0])
        k = np.arange(1, len(self.coeffs))
        return ComplexPolynomial(self.coeffs[1:] * k)

    def is_one(self, tol: float = 0.0) -> bool:
        return self.degree == 0 and abs(self.coeffs[0] - 1.0) <= tol

    def __repr__(self) -> str:
        return f"ComplexPolynomial({list(self.coeffs)!r})"


ONE = ComplexPolynomial([1.0])
ZERO = ComplexPolynomial([0.0])
