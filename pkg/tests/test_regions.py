import math

import pytest

from jacobi_spectra import (
    build_operator,
    in_omega,
    in_spectrum_free_region,
    no_spectrum_criterion,
    omega_constant,
    omega_constant_bisect,
    region_grid,
    region_report,
    spectral_rectangles,
)
from jacobi_spectra.regions import LABEL_BAND, LABEL_FREE, LABEL_UNRESOLVED, band_distance


def test_omega_constant():
    t = omega_constant()
    assert abs(t * math.exp(t) - 1) < 1e-15
    assert abs(t - 0.567) < 5e-4
    assert t == pytest.approx(0.5671432904097838, abs=1e-14)
    assert abs(t - omega_constant_bisect()) < 1e-13


def test_in_omega_examples():
    t = omega_constant()
    # free operator: threshold 0, every nonzero disk point is inside
    for z in (0.5, -0.2 + 0.3j, 0.9j):
        assert in_omega(z, 0.0, t)
    # b1 = 3: threshold ~10.58, the eigenvalue preimage z = 1/3 is outside
    assert abs(1 / 3 - 3) == pytest.approx(8 / 3)
    assert not in_omega(1 / 3, 3.0, t)
    assert in_omega(0.01, 3.0, t)
    assert in_omega(0.0, 3.0, t)  # convention: |z - 1/z| diverges
    with pytest.raises(ValueError):
        in_omega(1.5, 3.0, t)


def test_no_spectrum_criterion_examples():
    assert no_spectrum_criterion(build_operator())
    assert no_spectrum_criterion(build_operator([], [(1, 0.5)], []))
    assert not no_spectrum_criterion(build_operator([], [(1, 3.0)], []))


def test_small_perturbation_has_no_disk_zero():
    from jacobi_spectra import jost_zeros

    assert jost_zeros(build_operator([], [(1, 0.5)], [])) == []


def test_in_spectrum_free_region_examples():
    free = build_operator()
    for lam in (3.0, -2.5, 1j, 2.5 - 0.5j):
        assert in_spectrum_free_region(free, lam)
    op = build_operator([], [(1, 3.0)], [])
    assert not in_spectrum_free_region(op, 10 / 3)
    assert in_spectrum_free_region(op, 100.0)


def test_spectral_rectangles_examples():
    t = omega_constant()
    free_rect = spectral_rectangles(build_operator(), t)
    assert free_rect.re_lo == pytest.approx(2.0) and free_rect.re_hi == pytest.approx(2.0)
    assert free_rect.im_bound == 0.0

    rect = spectral_rectangles(build_operator([], [(1, 0.1)], []), t)
    c = 0.2 / t
    assert rect.re_lo == pytest.approx(math.sqrt(4 - c * c))
    assert rect.re_hi == pytest.approx(math.sqrt(4 + c * c))
    assert rect.im_bound == pytest.approx(c * c / 4)
    assert rect.re_lo == pytest.approx(1.9687, abs=1e-4)
    assert rect.re_hi == pytest.approx(2.0309, abs=1e-4)
    assert rect.im_bound == pytest.approx(0.0311, abs=1e-4)

    assert spectral_rectangles(build_operator([], [(1, 3.0)], []), t) is None


def test_region_report_fields():
    rep = region_report(build_operator([], [(1, 3.0)], []))
    assert rep.d0 == 3 and rep.d1 == 3
    assert not rep.no_spectrum
    assert rep.c == pytest.approx(6 / rep.t)
    assert rep.rectangles is None


def test_band_distance():
    assert band_distance(0.5) == 0
    assert band_distance(3.0) == pytest.approx(1.0)
    assert band_distance(1j) == pytest.approx(1.0)
    assert band_distance(-3 + 1j) == pytest.approx(math.hypot(1, 1))


def test_region_grid_free_operator():
    labels = region_grid(build_operator(), (-3, 3), (-1, 1), (31, 11))
    assert len(labels) == 31 * 11
    for re, im, label in labels:
        if band_distance(complex(re, im)) >= 0.5:
            assert label == LABEL_FREE


def test_region_grid_flags_eigenvalue_cell():
    op = build_operator([], [(1, 3.0)], [])
    labels = region_grid(op, (3.0, 3.6), (-0.1, 0.1), (7, 3))
    near = min(labels, key=lambda rec: abs(complex(rec[0], rec[1]) - 10 / 3))
    assert near[2] == LABEL_UNRESOLVED


def test_region_grid_smoke_and_errors():
    labels = region_grid(build_operator(), (-1, 1), (-1, 1), 2)
    assert len(labels) == 4
    assert {rec[2] for rec in labels} <= {LABEL_BAND, LABEL_FREE, LABEL_UNRESOLVED}
    with pytest.raises(ValueError):
        region_grid(build_operator(), (1, -1), (-1, 1), 5)
    with pytest.raises(ValueError):
        region_grid(build_operator(), (-1, 1), (-1, 1), 1)
