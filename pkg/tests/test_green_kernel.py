import numpy as np
import pytest

from jacobi_spectra import build_operator, green, kernel_bound_margin, kernel_J, kernel_J_tilde_poly


def chebyshev_u(k, x):
    # three-term recurrence, independent of the green kernel formula
    if k < 0:
        return 0.0 + 0.0j
    u_prev, u = 1.0 + 0.0j, 2.0 * x
    if k == 0:
        return u_prev
    for _ in range(k - 1):
        u_prev, u = u, 2.0 * x * u - u_prev
    return u


def test_green_base_cases():
    for z in (0.5, 0.3 + 0.4j, -0.9j):
        assert green(2, 2, z) == 0
        assert green(5, 3, z) == 0
        assert green(2, 3, z) == pytest.approx(1.0)


def test_green_explicit_value():
    assert green(0, 3, 0.5) == pytest.approx(5.25)


def test_green_rejects_z_zero():
    with pytest.raises(ValueError):
        green(0, 1, 0.0)


def test_green_chebyshev_oracle():
    rng = np.random.default_rng(3)
    for _ in range(200):
        n = int(rng.integers(0, 10))
        m = int(rng.integers(n + 1, 11))
        z = complex(rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9))
        if abs(z) < 0.05:
            continue
        expected = chebyshev_u(m - n - 1, (z + 1 / z) / 2)
        assert green(n, m, z) == pytest.approx(expected, rel=1e-10, abs=1e-10)


def test_green_stable_near_one():
    # the closed form is 0/0 at z = +-1; the stable branch must agree with the
    # chebyshev value
    for z in (1.0, -1.0, 1.0 + 1e-8j, -1.0 - 1e-8j, 0.9999999, -0.9999999):
        got = green(0, 5, z)
        expected = chebyshev_u(4, (z + 1 / complex(z)) / 2)
        assert got == pytest.approx(expected, rel=1e-8)


def test_kernel_J_paper_values():
    op = build_operator([(1, 2.0 + 1j)], [(1, 3.0), (2, -1.5j)], [(1, 0.5)])
    for z in (0.4, 0.2 - 0.6j):
        lam = z + 1 / complex(z)
        for n in (1, 2):
            assert kernel_J(op, n - 1, n, z) == pytest.approx(-op.b(n))
            expected = -lam * op.b(n + 1) + 1 - op.a(n) * op.c(n)
            assert kernel_J(op, n - 1, n + 1, z) == pytest.approx(expected)
            assert kernel_J(op, n, n, z) == 0


def test_kernel_J_tilde_poly_examples():
    op = build_operator([], [(1, 3.0)], [])
    np.testing.assert_allclose(kernel_J_tilde_poly(op, 0, 1).coeffs, [0, -3])
    op2 = build_operator([(1, 2.0)], [], [(1, 2.0)])
    np.testing.assert_allclose(kernel_J_tilde_poly(op2, 0, 2).coeffs, [0, 0, -3])
    free = build_operator()
    for n, m in ((0, 1), (2, 5)):
        assert kernel_J_tilde_poly(free, n, m).degree == 0
        assert kernel_J_tilde_poly(free, n, m)(0.7) == 0


def test_kernel_tilde_poly_matches_point_values():
    rng = np.random.default_rng(11)
    op = build_operator([(2, 1.5 - 0.5j)], [(1, 1j), (3, 2.0)], [(1, 0.7)])
    for _ in range(20):
        n = int(rng.integers(0, 5))
        m = int(rng.integers(n + 1, 8))
        z = complex(rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8))
        if abs(z) < 0.05:
            continue
        expected = kernel_J(op, n, m, z) * z ** (m - n)
        assert kernel_J_tilde_poly(op, n, m)(z) == pytest.approx(expected, rel=1e-12, abs=1e-12)


def test_kernel_bound_margin_examples():
    free = build_operator()
    assert kernel_bound_margin(free, 0, 1, 0.5) == pytest.approx(0.0)
    op = build_operator([], [(1, 3.0)], [])
    assert kernel_bound_margin(op, 0, 1, 0.5) == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(ValueError):
        kernel_bound_margin(op, 0, 1, 1.0)


def test_kernel_bound_margin_sweep():
    rng = np.random.default_rng(5)
    op = build_operator([(1, 0.5)], [(2, -2.0 + 1j)], [(3, 1.8)])
    for _ in range(1000):
        n = int(rng.integers(0, 6))
        m = int(rng.integers(n + 1, 9))
        z = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        if abs(z) < 0.01 or abs(z) > 1 or abs(z * z - 1) < 1e-6:
            continue
        assert kernel_bound_margin(op, n, m, z) >= -1e-12
