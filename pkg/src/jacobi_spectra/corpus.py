"""Seeded random operator corpora for the verification sweeps."""

from __future__ import annotations

import numpy as np

from .operator_core import ComplexJacobiOperator, build_operator, sigma1


def random_complex_disk(rng, radius: float) -> complex:
    r = radius * np.sqrt(rng.uniform())
    theta = rng.uniform(0.0, 2.0 * np.pi)
    return complex(r * np.cos(theta), r * np.sin(theta))


def random_annulus_point(rng, r_lo: float, r_hi: float) -> complex:
    r = np.sqrt(rng.uniform(r_lo**2, r_hi**2))
    theta = rng.uniform(0.0, 2.0 * np.pi)
    return complex(r * np.cos(theta), r * np.sin(theta))


def random_operator(rng, max_support: int = 10, max_dev: float = 3.0) -> ComplexJacobiOperator:
    """Random finite-support operator with entry deviations at most max_dev.

    Off-diagonal entries are resampled until they stay safely away from zero.
    """
    M = int(rng.integers(1, max_support + 1))
    a_list, b_list, c_list = [], [], []
    for n in range(1, M + 1):
        if rng.uniform() < 0.6:
            b_list.append((n, random_complex_disk(rng, max_dev)))
        if rng.uniform() < 0.4:
            while True:
                val = 1.0 + random_complex_disk(rng, max_dev)
                if abs(val) > 0.05:
                    break
            a_list.append((n, val))
        if rng.uniform() < 0.4:
            while True:
                val = 1.0 + random_complex_disk(rng, max_dev)
                if abs(val) > 0.05:
                    break
            c_list.append((n, val))
    return build_operator(a_list, b_list, c_list)


def make_corpus(rng, size: int, max_support: int = 10, max_dev: float = 3.0,
                nontrivial: bool = True) -> list:
    """A list of random operators; with nontrivial=True each has support_bound >= 1."""
    out = []
    while len(out) < size:
        op = random_operator(rng, max_support=max_support, max_dev=max_dev)
        if nontrivial and op.support_bound == 0:
            continue
        out.append(op)
    return out


def rescale_below(op: ComplexJacobiOperator, target: float) -> ComplexJacobiOperator:
    """Shrink the perturbation so sigma1(0) < target, preserving the support pattern.

    b is scaled linearly; each product a_m c_m is pulled toward 1 by the same
    factor (with c reset to 1), which scales every weight d_m exactly.
    """
    s1 = sigma1(op, 0)
    if s1 < target:
        return op
    s = 0.95 * target / s1
    b_list = [(n, s * v) for n, v in op.b_entries.items()]
    idx = set(op.a_entries) | set(op.c_entries)
    a_list = []
    for n in sorted(idx):
        prod = op.a(n) * op.c(n)
        val = 1.0 + s * (prod - 1.0)
        if val != 1.0:
            a_list.append((n, val))
    return build_operator(a_list, b_list, [])
