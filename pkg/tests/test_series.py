"""Series layer: zeta-family values against mpmath, every series
representation against its exact counterpart, resolved-reading defaults,
wrong-reading rejection, finite trigonometric closed forms, convergence
classification, and the divisor-coefficient cross-check.
"""

from fractions import Fraction as F
from math import gcd

import mpmath
import pytest

from dcsums import (
    Angle,
    AnglePoleError,
    Convention,
    apostol_series,
    apostol_sum,
    bernoulli_function,
    bernoulli_function_series,
    chi_representation,
    clausen,
    dc_odd_hurwitz,
    dc_sum,
    dc_sum_clausen,
    dc_sum_gseries,
    dc_sum_hurwitz,
    dc_sum_polylog,
    dc_sum_series_tan,
    dirichlet_beta,
    dirichlet_eta,
    dirichlet_lambda,
    euler_function,
    euler_function_series,
    euler_poly,
    finite_trig_sum,
    fourier_bernoulli_sine,
    g_series_convergence,
    g_series_eval,
    hurwitz_zeta,
    lambert_divisor_check,
    legendre_chi,
    lerch_phi_circle,
    pi_ball,
    polylog_circle,
    sc_function,
    sign_char_series,
    srivastava_euler_poly,
    weighted_root_sum,
)
from dcsums.series import (
    RESOLVED_CLAUSEN_EVEN,
    RESOLVED_GSERIES_EVEN,
    RESOLVED_POLYLOG_EVEN,
    RESOLVED_TAN_SERIES,
)

from conftest import assert_ball_matches, assert_cball_matches

mpf = mpmath.mpf


def q_mpf(x):
    x = F(x)
    return mpf(x.numerator) / x.denominator


# ---------------------------------------------------------------------------
# zeta family against mpmath
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("s", [2, 3, 4, 7])
@pytest.mark.parametrize("a", [F(1, 5), F(1, 2), 1, F(9, 4)])
def test_hurwitz_zeta_oracle(s, a):
    assert_ball_matches(hurwitz_zeta(s, a), mpmath.zeta(s, q_mpf(a)))


@pytest.mark.parametrize("s", [2, 3, 5, 10])
def test_dirichlet_family_oracle(s):
    assert_ball_matches(dirichlet_eta(s), mpmath.altzeta(s))
    assert_ball_matches(dirichlet_lambda(s), (1 - mpf(2) ** -s) * mpmath.zeta(s))
    # beta(s) = 2^-s * Phi(-1, s, 1/2); lerchphi is an independent oracle path
    assert_ball_matches(dirichlet_beta(s), mpmath.lerchphi(-1, s, mpf(1) / 2) / 2**s)


def test_dirichlet_internal_relations():
    for s in (2, 3, 6):
        lam = dirichlet_lambda(s)
        combined = (hurwitz_zeta(s, 1) + dirichlet_eta(s)) * F(1, 2)
        assert lam.agrees_with(combined)
    # lambda(2) = pi^2/8
    assert (dirichlet_lambda(2) - pi_ball(128).pow_int(2) * F(1, 8)).encloses(0)
    assert_ball_matches(dirichlet_beta(2), mpmath.catalan)


@pytest.mark.parametrize("s,p,q", [(2, 1, 3), (3, 1, 4), (2, 2, 5), (4, 5, 6)])
def test_polylog_circle_oracle(s, p, q):
    z = mpmath.exp(1j * mpmath.pi * p / q)
    assert_cball_matches(polylog_circle(s, Angle(p, q)), mpmath.polylog(s, z))


@pytest.mark.parametrize("s,p,q", [(2, 1, 3), (3, 1, 2), (5, 3, 7), (2, -1, 4)])
def test_legendre_chi_oracle(s, p, q):
    z = mpmath.exp(1j * mpmath.pi * p / q)
    oracle = (mpmath.polylog(s, z) - mpmath.polylog(s, -z)) / 2
    assert_cball_matches(legendre_chi(s, Angle(p, q)), oracle)


@pytest.mark.parametrize(
    "lam,s,a",
    [(F(1, 3), 2, F(1, 2)), (F(1, 4), 3, F(2, 3)), (F(0), 2, F(1)), (F(5, 6), 4, F(1, 5))],
)
def test_lerch_phi_oracle(lam, s, a):
    z = mpmath.exp(2j * mpmath.pi * q_mpf(lam))
    assert_cball_matches(lerch_phi_circle(lam, s, a), mpmath.lerchphi(z, s, q_mpf(a)))


def test_lerch_validation():
    with pytest.raises(ValueError, match=r"a must lie in \(0, 1\]"):
        lerch_phi_circle(F(1, 3), 2, 0)
    with pytest.raises(ValueError, match="s must be an integer >= 2"):
        lerch_phi_circle(F(1, 3), 1, F(1, 2))


@pytest.mark.parametrize("n,p,q", [(2, 1, 3), (2, 1, 2), (3, 2, 5), (4, 1, 6), (5, 3, 4)])
def test_clausen_oracle(n, p, q):
    t = mpmath.pi * p / q
    oracle = mpmath.clsin(n, t) if n % 2 == 0 else mpmath.clcos(n, t)
    assert_ball_matches(clausen(n, Angle(p, q)), oracle)


def test_clausen_exact_zeros():
    z = clausen(2, Angle(0))
    assert z.is_exact and z.value_fraction() == 0
    assert clausen(2, Angle(1)).value_fraction() == 0  # sin kernel at pi


@pytest.mark.parametrize(
    "kind,s,p,q,origin",
    [("S", 2, 1, 3, 0), ("C", 2, 1, 3, 0), ("S", 3, 2, 7, 0), ("C", 4, 1, 5, 1)],
)
def test_sc_function_oracle(kind, s, p, q, origin):
    # sum over odd indices of e^{i m x}/m^s is (Li_s(z) - Li_s(-z))/2 at
    # z = e^{ix}: real part gives the C series, imaginary part the S series
    z = mpmath.exp(1j * mpmath.pi * p / q)
    full = (mpmath.polylog(s, z) - mpmath.polylog(s, -z)) / 2
    oracle = full.imag if kind == "S" else full.real
    if origin == 1:  # drop the m = 1 head term
        head = mpmath.sin(mpmath.pi * p / q) if kind == "S" else mpmath.cos(mpmath.pi * p / q)
        oracle -= head
    assert_ball_matches(sc_function(kind, s, Angle(p, q), origin=origin), oracle)


def test_sc_function_validation():
    with pytest.raises(ValueError, match="kind must be 'S' or 'C'"):
        sc_function("T", 2, Angle(1, 3))
    with pytest.raises(ValueError, match="origin"):
        sc_function("S", 2, Angle(1, 3), origin=2)


# ---------------------------------------------------------------------------
# Fourier forms of the periodic kernels
# ---------------------------------------------------------------------------

EULER_POINTS = [F(1, 3), F(1, 4), F(2, 5), F(5, 4), F(-1, 3), F(1), F(2)]


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_euler_function_series_matches_exact(m):
    for x in EULER_POINTS:
        got = euler_function_series(m, x)
        assert got.result.encloses(euler_function(m, x)), (m, x)
        # terms_used may be 0 when every kernel phase is an exact zero
        assert got.terms_used >= 0
        assert got.convention.index_origin == 0


def test_euler_function_series_origin_one_differs():
    # dropping the head term moves the value whenever it is nonzero
    got = euler_function_series(1, F(1, 3), origin=1)
    assert not got.result.encloses(euler_function(1, F(1, 3)))
    with pytest.raises(ValueError, match="order must be a positive integer"):
        euler_function_series(0, F(1, 3))


@pytest.mark.parametrize("p", [2, 3, 4, 5])
def test_bernoulli_function_series_matches_exact(p):
    for x in (F(1, 3), F(1, 4), F(7, 5), F(-2, 3), F(1, 2)):
        assert bernoulli_function_series(p, x).encloses(bernoulli_function(p, x)), (p, x)


def test_sign_char_series():
    for x in (F(1, 2), F(1, 3), F(3, 2), F(-1, 2), F(7, 3), F(-4, 3)):
        want = F(1) if x.__floor__() % 2 == 0 else F(-1)
        assert sign_char_series(x).encloses(want), x
    with pytest.raises(ValueError, match="x must not be an integer"):
        sign_char_series(3)


@pytest.mark.parametrize("m,x", [(1, F(1, 3)), (2, F(1, 4)), (3, F(5, 4)), (2, F(2)), (1, F(-1, 3))])
def test_chi_representation_matches_exact(m, x):
    assert chi_representation(m, x).encloses(euler_function(m, x))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_fourier_bernoulli_sine_residual(m):
    for q in (F(0), F(1, 6), F(1, 4), F(1, 3), F(1, 2), F(1)):
        out = fourier_bernoulli_sine(m, q)
        assert out.residual.encloses(0), (m, q)
        assert out.series.encloses(bernoulli_function(2 * m + 1, q))
        assert (out.series - out.closed).agrees_with(out.residual)
    with pytest.raises(ValueError, match=r"q must lie in \[0, 1\]"):
        fourier_bernoulli_sine(1, F(3, 2))


# ---------------------------------------------------------------------------
# series representations of the alternating Euler-function sums
# ---------------------------------------------------------------------------

ODD_PAIRS = [(1, 3), (1, 5), (3, 5), (1, 7), (5, 7), (1, 9)]


@pytest.mark.parametrize("y", [1, 2])
@pytest.mark.parametrize("h,k", ODD_PAIRS)
def test_even_order_representations_enclose_exact(y, h, k):
    exact = dc_sum(2 * y, h, k)
    evals = [
        dc_sum_series_tan(y, h, k).result,
        dc_sum_hurwitz(y, h, k),
        dc_sum_clausen("even", y, h, k).result,
        dc_sum_polylog("even", y, h, k).result,
        dc_sum_gseries(y, h, k).result,
    ]
    for i, ball in enumerate(evals):
        assert ball.encloses(exact), (y, h, k, i)
    for i in range(len(evals)):
        for j in range(i + 1, len(evals)):
            assert evals[i].agrees_with(evals[j]), (y, h, k, i, j)


@pytest.mark.parametrize("y", [1, 2])
@pytest.mark.parametrize("h,k", [(1, 3), (2, 3), (1, 5), (4, 5), (2, 7)])
def test_odd_order_representations_enclose_exact(y, h, k):
    # the odd-kernel forms work for even h as well
    exact = dc_sum(2 * y - 1, h, k)
    assert dc_sum_clausen("odd", y, h, k).result.encloses(exact), (y, h, k)
    assert dc_sum_polylog("odd", y, h, k).result.encloses(exact), (y, h, k)


def test_even_order_clausen_accepts_even_h():
    for y in (1, 2):
        assert dc_sum_clausen("even", y, 2, 3).result.encloses(dc_sum(2 * y, 2, 3))
        assert dc_sum_polylog("even", y, 2, 5).result.encloses(dc_sum(2 * y, 2, 5))


def test_resolved_defaults_are_recorded():
    assert dc_sum_series_tan(1, 1, 3).convention == RESOLVED_TAN_SERIES
    assert dc_sum_clausen("even", 1, 1, 3).convention == RESOLVED_CLAUSEN_EVEN
    assert dc_sum_polylog("even", 1, 1, 3).convention == RESOLVED_POLYLOG_EVEN
    assert dc_sum_gseries(1, 1, 3).convention == RESOLVED_GSERIES_EVEN


def test_wrong_readings_are_rejected_by_the_numbers():
    exact = dc_sum(2, 1, 3)
    flipped = dc_sum_series_tan(1, 1, 3, convention=Convention(0, 1)).result
    assert not flipped.encloses(exact)
    shifted = dc_sum_series_tan(1, 1, 3, convention=Convention(1, -1)).result
    assert not shifted.encloses(exact)
    wrong_clausen = dc_sum_clausen("even", 1, 1, 3, convention=Convention(0, 1)).result
    assert not wrong_clausen.encloses(exact)


def test_series_validation_messages():
    with pytest.raises(ValueError, match="h must be odd"):
        dc_sum_series_tan(1, 2, 3)
    with pytest.raises(ValueError, match="k must be odd"):
        dc_sum_hurwitz(1, 1, 4)
    with pytest.raises(ValueError, match="parity must be 'odd' or 'even'"):
        dc_sum_clausen("both", 1, 1, 3)
    with pytest.raises(ValueError, match="order parameter must be a positive integer"):
        dc_sum_gseries(0, 1, 3)
    with pytest.raises(ValueError, match="convention"):
        dc_sum_series_tan(1, 1, 3, convention=(0, 2))


def test_odd_order_hurwitz_as_stated_misses():
    # the h,k-free right side cannot track the exact values; kept verbatim
    # and recorded as failing, so it must *not* enclose them
    assert not dc_odd_hurwitz(1, 3, 1, 3).encloses(dc_sum(1, 1, 3))
    assert not dc_odd_hurwitz(1, 1, 1, 1).encloses(dc_sum(1, 1, 1))
    with pytest.raises(ValueError, match="q must be a positive integer"):
        dc_odd_hurwitz(1, 0, 1, 3)


# ---------------------------------------------------------------------------
# Euler polynomial values from zeta data
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("kind", ["odd", "even"])
def test_srivastava_matches_euler_poly(kind):
    for y in (1, 2):
        for q in (1, 2, 3, 4):
            for p in range(q + 1):
                order = 2 * y - 1 if kind == "odd" else 2 * y
                got = srivastava_euler_poly(kind, y, p, q)
                assert got.encloses(euler_poly(order, F(p, q))), (kind, y, p, q)


def test_srivastava_validation():
    with pytest.raises(ValueError, match="kind must be 'odd' or 'even'"):
        srivastava_euler_poly("mixed", 1, 0, 1)
    with pytest.raises(ValueError, match="0 <= p <= q"):
        srivastava_euler_poly("odd", 1, 5, 3)


# ---------------------------------------------------------------------------
# cotangent-kernel series for the power-weighted sawtooth sums
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("p", [1, 3, 5])
def test_apostol_series_matches_exact(p):
    for h, k in [(1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (2, 5), (3, 7)]:
        if gcd(h, k) != 1:
            continue
        got = apostol_series(p, h, k)
        assert got.re.encloses(apostol_sum(p, h, k)), (p, h, k)
        assert got.im.is_exact and got.im.value_fraction() == 0


def test_apostol_series_trivial_modulus_and_validation():
    out = apostol_series(3, 5, 1)
    assert out.re.is_exact and out.re.value_fraction() == 0
    with pytest.raises(ValueError, match="order must be an odd positive integer"):
        apostol_series(2, 1, 3)
    with pytest.raises(ValueError, match="coprime"):
        apostol_series(1, 2, 4)


# ---------------------------------------------------------------------------
# finite trigonometric sums and root-of-unity weights
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("kind", ["cos", "sin"])
@pytest.mark.parametrize("h,k,n", [(1, 3, 0), (1, 5, 0), (1, 5, 1), (3, 5, 1), (3, 7, 0), (5, 9, 2)])
def test_finite_trig_closed_forms_for_odd_pairs(kind, h, k, n):
    out = finite_trig_sum(kind, h, k, n)
    assert out.direct.agrees_with(out.closed), (kind, h, k, n)


def test_finite_trig_degenerate_surface_raises_both_kinds():
    for kind in ("cos", "sin"):
        with pytest.raises(AnglePoleError, match="degenerates"):
            finite_trig_sum(kind, 1, 3, 1)  # k divides 2n+1
        with pytest.raises(AnglePoleError, match="degenerates"):
            finite_trig_sum(kind, 3, 5, 2)
    with pytest.raises(ValueError, match="kind must be 'cos' or 'sin'"):
        finite_trig_sum("tan", 1, 3, 0)


def test_finite_trig_closed_form_fails_for_even_h():
    out = finite_trig_sum("cos", 2, 5, 0)
    assert not out.direct.agrees_with(out.closed)


def test_weighted_root_sum_splits_on_h_parity():
    ok = weighted_root_sum(2, 3, 1)
    assert ok.residual.re.encloses(0) and ok.residual.im.encloses(0)
    ok2 = weighted_root_sum(4, 5, 0)
    assert ok2.residual.re.encloses(0) and ok2.residual.im.encloses(0)
    # odd h: base point is a 2k-th root, the stated value misses
    bad = weighted_root_sum(1, 3, 1)
    assert bad.residual.re.encloses(-2)  # direct = 1, stated = 3
    bad2 = weighted_root_sum(1, 3, 0)
    assert not (bad2.residual.re.encloses(0) and bad2.residual.im.encloses(0))
    with pytest.raises(ValueError, match="n must be a non-negative integer"):
        weighted_root_sum(1, 3, -1)


# ---------------------------------------------------------------------------
# g-series: direct evaluation, exact pole exclusion, convergence verdicts
# ---------------------------------------------------------------------------


def test_g_series_eval_matches_partial_sums():
    # z = e^{i pi/3}: indices with z^n = -1 (n = 3 mod 6) are excluded exactly.
    # Oracle: partial sum to N with the same exclusion; tail < 1e-8 at s = 3.
    s, (p, q) = 3, (1, 3)
    z = mpmath.exp(1j * mpmath.pi * p / q)
    acc = mpmath.mpc(0)
    for n in range(1, 4001):
        zn = z**n
        if abs(zn + 1) < 1e-12:
            continue
        acc += zn / (mpmath.mpf(n) ** s * (1 + zn))
    got = g_series_eval(s, Angle(p, q))
    assert abs(complex(float(got.re), float(got.im)) - complex(acc)) < 1e-6


def test_g_series_convergence_truth_table():
    cases = [
        ((F(1, 3), 2, 1), ("converges", "root-test")),
        ((F(1, 2), 2, 1), ("undetermined", "root-test-boundary")),
        ((F(1, 2), 3, 0), ("diverges", "root-test")),
        ((2, 1, 2), ("converges", "quotient-series-comparison")),
        ((2, 3, 1), ("diverges", "quotient-series-comparison")),
        ((2, 1, 1), ("undetermined", "quotient-root-boundary")),
        ((1, 1, 1), ("undetermined", "radius-boundary")),
        ((0, 5, None), ("converges", "trivial-center")),
        ((F(1, 2), 3, None), ("undetermined", "no-denominator-data")),
    ]
    for args, want in cases:
        verdict = g_series_convergence(*args)
        assert (verdict.verdict, verdict.criterion) == want, args
    with pytest.raises(ValueError, match="non-negative"):
        g_series_convergence(-1, 1, 1)


# ---------------------------------------------------------------------------
# divisor-coefficient cross-check
# ---------------------------------------------------------------------------


def test_lambert_divisor_residual_encloses_zero():
    for N in (3, 8, 12):
        for z in (F(1, 3), F(-1, 2), F(1, 2), F(0)):
            assert lambert_divisor_check(N, z).encloses(0), (N, z)


def test_lambert_divisor_validation():
    with pytest.raises(ValueError, match="N must be a positive integer"):
        lambert_divisor_check(0, F(1, 3))
    with pytest.raises(ValueError, match=r"\|z\| must be at most 1/2"):
        lambert_divisor_check(4, F(3, 4))
