"""Jost functions, spectrum-free regions and discrete spectra of complex
Jacobi matrices with finitely supported perturbations."""

from ._qr import BACKEND as qr_backend
from .green_kernel import green, kernel_bound_margin, kernel_J, kernel_J_tilde_poly
from .jost import (
    JostResult,
    bound_margin_i,
    bound_margin_ii,
    jost_backsubstitute,
    jost_function,
    jost_successive,
    phi,
)
from .operator_core import (
    ComplexJacobiOperator,
    InvalidOperatorError,
    SolutionSegment,
    SpectralPoint,
    build_operator,
    extend_solution,
    gauge_transform,
    inverse_joukowski,
    joukowski,
    sigma0,
    sigma1,
    weight_d,
    wronskian,
)
from .polynomial import ComplexPolynomial
from .regions import (
    RegionReport,
    Rectangles,
    in_omega,
    in_spectrum_free_region,
    no_spectrum_criterion,
    omega_constant,
    omega_constant_bisect,
    region_grid,
    region_report,
    spectral_rectangles,
)
from .roots import polynomial_roots
from .spectrum import (
    DiscreteEigenvalue,
    SpectrumResult,
    discrete_spectrum,
    eigenvector_check,
    jost_zeros,
    reconcile,
    stable_offband_eigenvalues,
    truncated_eigenvalues,
)

__version__ = "0.1.0"
