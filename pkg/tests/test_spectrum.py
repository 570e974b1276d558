import math

import numpy as np
import pytest

from jacobi_spectra import (
    build_operator,
    discrete_spectrum,
    eigenvector_check,
    extend_solution,
    jost_backsubstitute,
    jost_zeros,
    reconcile,
    stable_offband_eigenvalues,
    truncated_eigenvalues,
    wronskian,
)
from jacobi_spectra.operator_core import gauge_factor


@pytest.fixture(scope="module")
def rank_one():
    return build_operator([], [(1, 3.0)], [])


@pytest.fixture(scope="module")
def off_diagonal():
    return build_operator([(1, 2.0)], [], [(1, 2.0)])


def test_jost_zeros_examples(rank_one, off_diagonal):
    assert jost_zeros(build_operator()) == []
    assert jost_zeros(rank_one) == [pytest.approx(1 / 3)]
    zs = jost_zeros(off_diagonal)
    assert zs[0] == pytest.approx(-1 / math.sqrt(3))
    assert zs[1] == pytest.approx(1 / math.sqrt(3))


def test_discrete_spectrum_examples(rank_one, off_diagonal):
    assert discrete_spectrum(build_operator()) == []
    spec = discrete_spectrum(rank_one)
    assert len(spec) == 1
    assert spec[0].lam == pytest.approx(10 / 3, abs=1e-12)
    assert spec[0].multiplicity == 1

    lams = sorted(ev.lam.real for ev in discrete_spectrum(off_diagonal))
    assert lams[0] == pytest.approx(-4 / math.sqrt(3), abs=1e-12)
    assert lams[1] == pytest.approx(4 / math.sqrt(3), abs=1e-12)


def test_truncated_free_small():
    eigs = truncated_eigenvalues(build_operator(), 3)
    np.testing.assert_allclose(
        np.sort(eigs.real), [-math.sqrt(2), 0, math.sqrt(2)], atol=1e-12
    )
    with pytest.raises(ValueError):
        truncated_eigenvalues(build_operator(), 1)


def test_truncated_rank_one(rank_one):
    eigs = truncated_eigenvalues(rank_one, 400)
    dist = np.abs(eigs - 10 / 3)
    assert np.min(dist) < 1e-6
    others = eigs[dist > 1e-6]
    from jacobi_spectra.regions import band_distance

    assert max(band_distance(lam) for lam in others) < 1e-2


def test_truncated_off_diagonal(off_diagonal):
    eigs = truncated_eigenvalues(off_diagonal, 400)
    for lam in (4 / math.sqrt(3), -4 / math.sqrt(3)):
        assert np.min(np.abs(eigs - lam)) < 1e-6


def test_reconcile_anchors(rank_one, off_diagonal):
    free_result = reconcile(build_operator())
    assert free_result.ok and not free_result.matches

    r = reconcile(rank_one, N=400, band_margin=0.05, match_tol=1e-4)
    assert r.ok and len(r.matches) == 1
    lam, oracle_lam, dist = r.matches[0]
    assert lam == pytest.approx(10 / 3) and dist < 1e-6

    r2 = reconcile(off_diagonal)
    assert r2.ok and len(r2.matches) == 2


def test_reconcile_near_boundary_case():
    # zero just inside the disk; eigenvalue hugs the band, reported not failed
    op = build_operator([], [(1, 1 + 1e-3)], [])
    r = reconcile(op)
    assert r.ok
    assert not r.failures
    assert len(r.near_boundary) == 1


def test_stable_offband(rank_one):
    stable = stable_offband_eigenvalues(rank_one, 200)
    assert len(stable) == 1
    assert stable[0] == pytest.approx(10 / 3, abs=1e-6)


def test_eigenvector_check_examples(rank_one, off_diagonal):
    assert eigenvector_check(rank_one, 1 / 3) < 1e-12
    assert eigenvector_check(off_diagonal, 1 / math.sqrt(3)) < 1e-10
    with pytest.raises(ValueError):
        eigenvector_check(build_operator(), 0.5)
    with pytest.raises(ValueError):
        eigenvector_check(rank_one, 0.9)  # not a zero


def test_wronskian_vanishes_at_eigenvalue(off_diagonal):
    # the (1.6)-solution from the jost values and the solution launched from
    # y_0 = 0 must be dependent at an eigenvalue
    op = off_diagonal
    z0 = jost_zeros(op)[1]
    result = jost_backsubstitute(op)
    y = [result.v(n, z0) / gauge_factor(op, n) for n in range(6)]
    from jacobi_spectra.operator_core import SolutionSegment

    jost_seg = SolutionSegment(0, tuple(y))
    other = extend_solution(op, z0, 0.0, y[1], 5)
    assert abs(wronskian(jost_seg, other, 0)) < 1e-9


def test_eigenvector_simplicity(off_diagonal):
    # two normalizations of the eigenvector agree up to scale (rank-1 check)
    op = off_diagonal
    z0 = jost_zeros(op)[0]
    result = jost_backsubstitute(op)
    h1 = np.array([result.v(n, z0) / gauge_factor(op, n) for n in range(1, 12)])
    seg = extend_solution(op, z0, 0.0, 1.0, 12)
    h2 = np.array([seg.value(n) for n in range(1, 12)])
    cross = np.outer(h1, h2) - np.outer(h2, h1)
    assert np.max(np.abs(cross)) < 1e-9 * np.linalg.norm(h1) * np.linalg.norm(h2)
