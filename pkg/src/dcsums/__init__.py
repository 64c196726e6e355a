"""Exact and certified-precision evaluation of Dedekind-type alternating sums."""

from __future__ import annotations

from .exact import (
    bernoulli_number,
    bernoulli_poly,
    bernoulli_function,
    euler_number,
    euler_poly,
    euler_function,
    second_kind_euler_number,
    tangent_number,
    tan_series_coeff,
    sec_series_coeff,
    sawtooth,
    umbral_eval,
    U,
    V,
    UmbralPoly,
)
from .precision import Angle, AnglePoleError, PrecReal, PrecComplex, pi_ball
from .sums import (
    SumParams,
    ReciprocityCase,
    dedekind_sum,
    dedekind_reciprocity_case,
    dedekind_reciprocity_residual,
    apostol_sum,
    dc_sum,
    hardy_s5,
    y_sum,
    s5_general,
    kim_reciprocity_sides,
    dc_even_reciprocity_lhs,
    dc_even_reciprocity_rhs,
    tangent_variant_rhs,
)
from .series import (
    Convention,
    SeriesEval,
    FiniteTrigSum,
    WeightedRootSum,
    BernoulliSineEval,
    GSeriesVerdict,
    hurwitz_zeta,
    dirichlet_lambda,
    dirichlet_eta,
    dirichlet_beta,
    legendre_chi,
    polylog_circle,
    lerch_phi_circle,
    clausen,
    sc_function,
    euler_function_series,
    bernoulli_function_series,
    sign_char_series,
    finite_trig_sum,
    weighted_root_sum,
    dc_sum_series_tan,
    dc_sum_hurwitz,
    dc_sum_clausen,
    dc_sum_polylog,
    g_series_eval,
    dc_sum_gseries,
    dc_odd_hurwitz,
    srivastava_euler_poly,
    chi_representation,
    fourier_bernoulli_sine,
    apostol_series,
    g_series_convergence,
    lambert_divisor_check,
)
from .verify import (
    SUITES,
    GridSpec,
    IdentityCase,
    IdentityReport,
    ConventionResolutionError,
    identity_ids,
    calibration_cases,
    resolve_convention,
    run_suite,
    suite_passes,
    emit_report,
)

__version__ = "0.1.0"
