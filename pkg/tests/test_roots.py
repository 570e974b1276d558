import numpy as np
import pytest

from jacobi_spectra.polynomial import ComplexPolynomial
from jacobi_spectra.roots import cluster_roots, newton_polish, polynomial_roots


def test_constant_and_linear():
    assert polynomial_roots([5.0]) == []
    roots = polynomial_roots([1.0, -3.0])
    assert roots == [pytest.approx(1 / 3)]


def test_quadratic():
    roots = sorted(polynomial_roots([1.0, 0.0, -3.0]), key=lambda z: z.real)
    assert roots[0] == pytest.approx(-1 / np.sqrt(3))
    assert roots[1] == pytest.approx(1 / np.sqrt(3))


def test_random_polynomials_reconstruct_roots():
    rng = np.random.default_rng(7)
    for _ in range(50):
        deg = int(rng.integers(2, 12))
        true = rng.uniform(-2, 2, deg) + 1j * rng.uniform(-2, 2, deg)
        coeffs = np.poly(true)[::-1]  # lowest degree first
        got = polynomial_roots(coeffs)
        assert len(got) == deg
        for r in true:
            assert min(abs(r - g) for g in got) < 1e-7


def test_roots_at_origin_factored_out():
    # z^2 (z - 0.5)
    roots = sorted(polynomial_roots([0.0, 0.0, -0.5, 1.0]), key=lambda z: abs(z))
    assert roots[0] == 0 and roots[1] == 0
    assert roots[2] == pytest.approx(0.5)


def test_polish_reaches_small_residual():
    coeffs = np.poly([0.3, 0.7 + 0.2j, -1.1])[::-1]
    z = newton_polish(coeffs, 0.31, target=1e-14)
    assert abs(np.polyval(coeffs[::-1], z)) < 1e-13


def test_multiplicity_clustering():
    p = ComplexPolynomial(np.convolve([1, -2], [1, -2]))  # (1 - 2z)^2
    roots = polynomial_roots(p)
    clusters = cluster_roots(roots, tol=1e-5)
    assert len(clusters) == 1
    rep, mult = clusters[0]
    assert mult == 2 and rep == pytest.approx(0.5, abs=1e-5)


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        polynomial_roots([0.0, 0.0])
