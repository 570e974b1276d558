"""Complex Jacobi operators: finite perturbations of the discrete laplacian.

The operator is the tridiagonal matrix with sub-diagonal a_n, main diagonal
b_n and super-diagonal c_n (n >= 1).  Only deviations from the background
a = c = 1, b = 0 are stored, so every sum and product over the perturbation
is exactly finite.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field


class InvalidOperatorError(ValueError):
    """Operator entries violate a_n * c_n != 0 or are malformed."""


@dataclass(frozen=True)
class ComplexJacobiOperator:
    """Finitely supported perturbation of the free Jacobi matrix.

    Entries absent from the maps take background values a = c = 1, b = 0.
    ``support_bound`` is the largest m with nonzero perturbation weight d_m.
    """

    a_entries: dict = field(default_factory=dict)
    b_entries: dict = field(default_factory=dict)
    c_entries: dict = field(default_factory=dict)
    support_bound: int = 0

    def a(self, n: int) -> complex:
        # a_0 = 1 by convention
        return self.a_entries.get(n, 1.0 + 0.0j)

    def b(self, n: int) -> complex:
        return self.b_entries.get(n, 0.0 + 0.0j)

    def c(self, n: int) -> complex:
        # c_0 = 1 by convention
        return self.c_entries.get(n, 1.0 + 0.0j)


@dataclass(frozen=True)
class SpectralPoint:
    """A point z in the closed unit disk together with lambda = z + 1/z."""

    z: complex
    lam: complex

    @classmethod
    def from_z(cls, z) -> "SpectralPoint":
        z = complex(z)
        if z == 0:
            raise ValueError("z = 0 has no finite spectral parameter")
        if abs(z) > 1 + 1e-12:
            raise ValueError("spectral point must satisfy |z| <= 1")
        return cls(z, z + 1.0 / z)

    @classmethod
    def from_lambda(cls, lam) -> "SpectralPoint":
        z = inverse_joukowski(lam)
        return cls(z, complex(lam))


@dataclass(frozen=True)
class SolutionSegment:
    """Consecutive values y_n of a recurrence solution, starting at start_index."""

    start_index: int
    values: tuple

    def __len__(self) -> int:
        return len(self.values)

    @property
    def end_index(self) -> int:
        return self.start_index + len(self.values) - 1

    def value(self, n: int) -> complex:
        if not self.start_index <= n <= self.end_index:
            raise IndexError(f"index {n} outside segment [{self.start_index}, {self.end_index}]")
        return self.values[n - self.start_index]


def _normalize_entries(pairs, label, reject_zero):
    out = {}
    for item in pairs:
        try:
            n, value = item
        except (TypeError, ValueError) as exc:
            raise InvalidOperatorError(f"{label} entries must be (index, value) pairs") from exc
        if not isinstance(n, int) or n < 1:
            raise InvalidOperatorError(f"{label} index {n!r} must be an integer >= 1")
        value = complex(value)
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise InvalidOperatorError(f"{label}_{n} is not finite")
        if n in out:
            raise InvalidOperatorError(f"duplicate index {n} in {label} entries")
        if reject_zero and value == 0:
            raise InvalidOperatorError(f"zero off-diagonal entry {label}_{n}")
        out[n] = value
    background = 1.0 + 0.0j if reject_zero else 0.0 + 0.0j
    return {n: v for n, v in out.items() if v != background}


def build_operator(a_list=(), b_list=(), c_list=()) -> ComplexJacobiOperator:
    """Build a normalized operator; background entries are elided."""
    a = _normalize_entries(a_list, "a", reject_zero=True)
    b = _normalize_entries(b_list, "b", reject_zero=False)
    c = _normalize_entries(c_list, "c", reject_zero=True)
    op = ComplexJacobiOperator(a, b, c, support_bound=0)

    candidate = 0
    if b:
        candidate = max(b)
    if a:
        candidate = max(candidate, max(a) + 1)
    if c:
        candidate = max(candidate, max(c) + 1)
    support = 0
    for m in range(candidate, 0, -1):
        if weight_d(op, m) != 0.0:
            support = m
            break
    return ComplexJacobiOperator(a, b, c, support_bound=support)


def weight_d(op: ComplexJacobiOperator, m: int) -> float:
    """Perturbation weight d_m = |b_m| + |1 - a_{m-1} c_{m-1}|."""
    if m < 1:
        raise ValueError("weight_d requires m >= 1")
    return abs(op.b(m)) + abs(1.0 - op.a(m - 1) * op.c(m - 1))


def sigma0(op: ComplexJacobiOperator, n: int) -> float:
    """Tail sum of d_m for m > n (finite by finite support)."""
    if n < 0:
        raise ValueError("sigma0 requires n >= 0")
    return sum(weight_d(op, m) for m in range(n + 1, op.support_bound + 1))


def sigma1(op: ComplexJacobiOperator, n: int) -> float:
    """Weighted tail sum of m * d_m for m > n."""
    if n < 0:
        raise ValueError("sigma1 requires n >= 0")
    return sum(m * weight_d(op, m) for m in range(n + 1, op.support_bound + 1))


def joukowski(z) -> complex:
    """lambda = z + 1/z."""
    z = complex(z)
    if z == 0:
        raise ValueError("joukowski undefined at z = 0")
    return z + 1.0 / z


def inverse_joukowski(lam) -> complex:
    """The root z of z^2 - lambda z + 1 = 0 with |z| <= 1.

    For lambda in [-2, 2] both roots sit on the unit circle; the one with
    nonnegative imaginary part is returned, and z = +1 / -1 at lambda = +2 / -2.
    """
    lam = complex(lam)
    s = cmath.sqrt(lam * lam - 4.0)
    # pick the larger root first to avoid cancellation, the other is its inverse
    big = (lam + s) / 2.0 if abs(lam + s) >= abs(lam - s) else (lam - s) / 2.0
    if big == 0:  # lam == +-2i gives roots +-i exactly
        big = lam / 2.0
    small = 1.0 / big
    if abs(abs(small) - 1.0) < 1e-12:
        for cand in (small, big):
            if cand.imag > 1e-15:
                return cand
        return complex(1.0, 0.0) if lam.real >= 0 else complex(-1.0, 0.0)
    return small if abs(small) <= abs(big) else big


def extend_solution(op: ComplexJacobiOperator, z, y0, y1, N: int) -> SolutionSegment:
    """Solve the three-term recurrence forward from initial data (y0, y1).

    Returns y_0 .. y_N with
    a_{m-1} y_{m-1} + b_m y_m + c_m y_{m+1} = (z + 1/z) y_m,  1 <= m <= N-1.
    """
    z = complex(z)
    if z == 0:
        raise ValueError("recurrence undefined at z = 0")
    if N < 1:
        raise ValueError("N must be >= 1")
    lam = z + 1.0 / z
    values = [complex(y0), complex(y1)]
    for m in range(1, N):
        nxt = (lam * values[m] - op.a(m - 1) * values[m - 1] - op.b(m) * values[m]) / op.c(m)
        values.append(nxt)
    return SolutionSegment(0, tuple(values))


def gauge_factor(op: ComplexJacobiOperator, j: int) -> complex:
    """k(j) = product of a_i for i >= j; exactly finite for finite support."""
    if not op.a_entries:
        return 1.0 + 0.0j
    top = max(op.a_entries)
    k = 1.0 + 0.0j
    for i in range(max(j, 1), top + 1):
        k *= op.a(i)
    return k


def gauge_transform(op: ComplexJacobiOperator, segment: SolutionSegment) -> SolutionSegment:
    """Map y_m -> x_m = k(m) y_m, transplanting solutions between the two recurrences."""
    values = tuple(
        gauge_factor(op, segment.start_index + i) * y for i, y in enumerate(segment.values)
    )
    return SolutionSegment(segment.start_index, values)


def wronskian(g: SolutionSegment, h: SolutionSegment, n: int) -> complex:
    """Discrete Wronskian W_n(g, h) = g_n h_{n+1} - g_{n+1} h_n."""
    return g.value(n) * h.value(n + 1) - g.value(n + 1) * h.value(n)


def recurrence_residual(op: ComplexJacobiOperator, z, segment: SolutionSegment) -> float:
    """Max interior residual of the three-term recurrence on a segment."""
    z = complex(z)
    lam = z + 1.0 / z
    worst = 0.0
    for m in range(segment.start_index + 1, segment.end_index):
        res = (
            op.a(m - 1) * segment.value(m - 1)
            + op.b(m) * segment.value(m)
            + op.c(m) * segment.value(m + 1)
            - lam * segment.value(m)
        )
        worst = max(worst, abs(res))
    return worst


def gauge_residual(op: ComplexJacobiOperator, z, segment: SolutionSegment) -> float:
    """Max interior residual of the gauge-transformed recurrence
    x_{m-1} + b_m x_m + a_m c_m x_{m+1} = (z + 1/z) x_m."""
    z = complex(z)
    lam = z + 1.0 / z
    worst = 0.0
    for m in range(segment.start_index + 1, segment.end_index):
        res = (
            segment.value(m - 1)
            + op.b(m) * segment.value(m)
            + op.a(m) * op.c(m) * segment.value(m + 1)
            - lam * segment.value(m)
        )
        worst = max(worst, abs(res))
    return worst
