"""Zero-free and spectrum-free regions: the Omega constant, the region built on
|z - 1/z|, the no-spectrum criterion, and the two-rectangle enclosure."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .operator_core import ComplexJacobiOperator, inverse_joukowski, sigma0, sigma1

# conservative slack on strict inequalities: near-boundary points are never
# labeled free
BOUNDARY_SLACK = 1e-12

LABEL_FREE = "free-region"
LABEL_UNRESOLVED = "unresolved"
LABEL_BAND = "essential-band"


def omega_constant(tol: float = 1e-15) -> float:
    """The root t of t e^t = 1 (~0.567143), by Newton iteration from 0.5."""
    t = 0.5
    for _ in range(100):
        resid = t * math.exp(t) - 1.0
        if abs(resid) < tol:
            break
        t -= resid / ((1.0 + t) * math.exp(t))
    return t


def omega_constant_bisect(lo: float = 0.5, hi: float = 0.6, tol: float = 1e-15) -> float:
    """Independent bisection solver for t e^t = 1, used to cross-check Newton."""
    flo = lo * math.exp(lo) - 1.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fmid = mid * math.exp(mid) - 1.0
        if (flo < 0) == (fmid < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class Rectangles:
    """The symmetric pair {w : re_lo < |Re w| < re_hi, |Im w| < im_bound}."""

    re_lo: float
    re_hi: float
    im_bound: float

    def contains(self, w, slack: float = 0.0) -> bool:
        w = complex(w)
        return (
            self.re_lo - slack < abs(w.real) < self.re_hi + slack
            and abs(w.imag) < self.im_bound + slack
        )


@dataclass(frozen=True)
class RegionReport:
    """Region parameters and the no-spectrum verdict for one operator."""

    t: float
    d0: float
    d1: float
    omega_threshold: float
    no_spectrum: bool
    c: float
    rectangles: Rectangles | None


def in_omega(z, d0: float, t: float = None) -> bool:
    """Whether z lies in the zero-free region |z - 1/z| > 2 d0 / t.

    z = 0 is inside by convention (|z - 1/z| diverges); the strict inequality
    carries conservative slack so boundary points are excluded.
    """
    if t is None:
        t = omega_constant()
    z = complex(z)
    if abs(z) > 1 + BOUNDARY_SLACK:
        raise ValueError("in_omega is defined on the closed unit disk")
    if z == 0:
        return True
    return abs(z - 1.0 / z) > 2.0 * d0 / t + BOUNDARY_SLACK


def no_spectrum_criterion(op: ComplexJacobiOperator, t: float = None) -> bool:
    """True when sigma1(0) < t, which forbids any discrete spectrum."""
    if t is None:
        t = omega_constant()
    return sigma1(op, 0) < t


def in_spectrum_free_region(op: ComplexJacobiOperator, lam, t: float = None) -> bool:
    """Whether lambda lies in the image of the zero-free region under z + 1/z."""
    if t is None:
        t = omega_constant()
    z = inverse_joukowski(lam)
    return in_omega(z, sigma0(op, 0), t)


def spectral_rectangles(op: ComplexJacobiOperator, t: float = None) -> Rectangles | None:
    """Two-rectangle enclosure of the discrete spectrum; None when c >= 2."""
    if t is None:
        t = omega_constant()
    c = 2.0 * sigma0(op, 0) / t
    if c >= 2.0:
        return None
    return Rectangles(
        re_lo=math.sqrt(4.0 - c * c),
        re_hi=math.sqrt(4.0 + c * c),
        im_bound=c * c / 4.0,
    )


def region_report(op: ComplexJacobiOperator) -> RegionReport:
    t = omega_constant()
    d0 = sigma0(op, 0)
    d1 = sigma1(op, 0)
    return RegionReport(
        t=t,
        d0=d0,
        d1=d1,
        omega_threshold=2.0 * d0 / t,
        no_spectrum=d1 < t,
        c=2.0 * d0 / t,
        rectangles=spectral_rectangles(op, t),
    )


def band_distance(lam) -> float:
    """Euclidean distance from lambda to the essential band [-2, 2]."""
    lam = complex(lam)
    dx = max(abs(lam.real) - 2.0, 0.0)
    return math.hypot(dx, lam.imag)


def region_grid(op: ComplexJacobiOperator, re_range, im_range, resolution):
    """Classify a lambda-plane grid into free-region / unresolved / essential-band.

    resolution is the point count per axis (a pair, or one int for both).
    Returns a row-major list of (re, im, label).
    """
    if isinstance(resolution, int):
        res_re = res_im = resolution
    else:
        res_re, res_im = resolution
    if res_re < 2 or res_im < 2:
        raise ValueError("resolution must be >= 2 per axis")
    re0, re1 = map(float, re_range)
    im0, im1 = map(float, im_range)
    if not (re1 > re0 and im1 > im0):
        raise ValueError("empty grid range")
    t = omega_constant()
    d0 = sigma0(op, 0)
    cell = math.hypot((re1 - re0) / (res_re - 1), (im1 - im0) / (res_im - 1))
    out = []
    for j in range(res_im):
        im = im0 + (im1 - im0) * j / (res_im - 1)
        for i in range(res_re):
            re = re0 + (re1 - re0) * i / (res_re - 1)
            lam = complex(re, im)
            if band_distance(lam) < cell:
                label = LABEL_BAND
            elif in_omega(inverse_joukowski(lam), d0, t):
                label = LABEL_FREE
            else:
                label = LABEL_UNRESOLVED
            out.append((re, im, label))
    return out
