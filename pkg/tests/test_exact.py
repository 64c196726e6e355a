"""Exact layer: number tables, generating-function oracles, functional
equations of the polynomials, periodic extensions, and the umbral evaluator.

The oracles are separate code paths built here in the tests: truncated power
series over Fraction (local multiplication/division), closed forms, and
brute-force binomial expansions.  Nothing below calls back into the library
to produce its expected values unless the point is a cross-link between two
library functions.
"""

from fractions import Fraction as F
from math import comb, factorial, floor

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from dcsums import (
    U,
    UmbralPoly,
    V,
    bernoulli_function,
    bernoulli_number,
    bernoulli_poly,
    euler_function,
    euler_number,
    euler_poly,
    sawtooth,
    sec_series_coeff,
    second_kind_euler_number,
    tan_series_coeff,
    tangent_number,
    umbral_eval,
)

HYP = dict(max_examples=60, deadline=None)

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=40)


# ---------------------------------------------------------------------------
# local power-series arithmetic over Fraction (the oracle machinery)
# ---------------------------------------------------------------------------


def series_mul(a, b, n):
    out = [F(0)] * (n + 1)
    for i in range(min(len(a), n + 1)):
        if not a[i]:
            continue
        for j in range(min(len(b), n + 1 - i)):
            out[i + j] += a[i] * b[j]
    return out


def series_div(a, b, n):
    """Coefficients of a/b through x**n; requires b[0] != 0."""
    out = [F(0)] * (n + 1)
    inv0 = F(1) / b[0]
    for i in range(n + 1):
        acc = a[i] if i < len(a) else F(0)
        for j in range(1, i + 1):
            if j < len(b) and b[j]:
                acc -= b[j] * out[i - j]
        out[i] = acc * inv0
    return out


def exp_coeffs(c, n):
    """Coefficients of e**(c*x) through x**n."""
    return [F(c) ** i / factorial(i) for i in range(n + 1)]


N = 18


def test_bernoulli_numbers_match_generating_function():
    # x/(e^x - 1) = 1 / sum_{i>=0} x^i/(i+1)!  -- series division done locally
    denom = [F(1, factorial(i + 1)) for i in range(N + 1)]
    coeffs = series_div([F(1)], denom, N)
    for n in range(N + 1):
        assert bernoulli_number(n) == coeffs[n] * factorial(n), n


def test_bernoulli_table():
    table = [F(1), F(-1, 2), F(1, 6), F(0), F(-1, 30), F(0), F(1, 42)]
    assert [bernoulli_number(n) for n in range(7)] == table
    assert bernoulli_number(12) == F(-691, 2730)


def test_euler_zero_values_match_generating_function():
    # 2/(e^x + 1): coefficient of x^n is euler_number(n)/n!
    # (e^x + 1 has constant term 2, then 1/i! for i >= 1)
    denom = [F(2) if i == 0 else F(1, factorial(i)) for i in range(N + 1)]
    coeffs = series_div([F(2)], denom, N)
    for n in range(N + 1):
        assert euler_number(n) == coeffs[n] * factorial(n), n


def test_euler_zero_table():
    assert [euler_number(n) for n in range(6)] == [
        F(1), F(-1, 2), F(0), F(1, 4), F(0), F(-1, 2),
    ]
    assert euler_number(7) == F(17, 8)
    # even entries beyond 0 all vanish
    assert all(euler_number(2 * n) == 0 for n in range(1, 10))


def test_euler_zero_cross_link_with_bernoulli():
    # E_n(0) = -2 (2^(n+1) - 1) B_{n+1} / (n+1)
    for n in range(1, 16):
        expected = F(-2) * (2 ** (n + 1) - 1) * bernoulli_number(n + 1) / (n + 1)
        assert euler_number(n) == expected, n


def test_second_kind_euler_numbers_match_sech_generating_function():
    # 2 e^x / (e^{2x} + 1): coefficient of x^m is E*_m / m!
    numer = [2 * c for c in exp_coeffs(1, N)]
    denom = [a + b for a, b in zip(exp_coeffs(2, N), exp_coeffs(0, N))]
    coeffs = series_div(numer, denom, N)
    for m in range(N + 1):
        assert second_kind_euler_number(m) == coeffs[m] * factorial(m), m


def test_second_kind_table_and_integrality():
    assert [second_kind_euler_number(m) for m in range(7)] == [
        1, 0, -1, 0, 5, 0, -61,
    ]
    for m in range(16):
        assert second_kind_euler_number(m).denominator == 1, m
        if m % 2:
            assert second_kind_euler_number(m) == 0


def test_second_kind_is_scaled_half_value():
    for m in range(12):
        assert second_kind_euler_number(m) == 2**m * euler_poly(m, F(1, 2))


def test_tan_series_matches_local_sin_cos_division():
    sin = [F(0)] * (2 * N + 2)
    cos = [F(0)] * (2 * N + 2)
    for i in range(N + 1):
        sin[2 * i + 1] = F((-1) ** i, factorial(2 * i + 1))
        cos[2 * i] = F((-1) ** i, factorial(2 * i))
    tan = series_div(sin, cos, 2 * N + 1)
    sec = series_div([F(1)], cos, 2 * N)
    for n in range(N):
        assert tan_series_coeff(n) == tan[2 * n + 1], n
        assert sec_series_coeff(n) == sec[2 * n], n


def test_tangent_number_table_and_link():
    assert [tangent_number(k) for k in range(1, 6)] == [1, 2, 16, 272, 7936]
    for n in range(8):
        assert tan_series_coeff(n) == F(tangent_number(n + 1), factorial(2 * n + 1))


@settings(**HYP)
@given(st.integers(0, 12), rationals)
def test_bernoulli_poly_difference_equation(n, x):
    expected = n * F(x) ** (n - 1) if n >= 1 else F(0)
    assert bernoulli_poly(n, x + 1) - bernoulli_poly(n, x) == expected


@settings(**HYP)
@given(st.integers(0, 12), rationals)
def test_bernoulli_poly_reflection(n, x):
    assert bernoulli_poly(n, 1 - x) == (-1) ** n * bernoulli_poly(n, x)


def test_bernoulli_poly_anchors_and_faulhaber():
    for n in range(12):
        assert bernoulli_poly(n, 0) == bernoulli_number(n)
    # sum_{j=0}^{m-1} j^n == (B_{n+1}(m) - B_{n+1}(0)) / (n+1)
    for n in range(6):
        for m in range(1, 9):
            brute = sum(F(j) ** n for j in range(m))
            closed = (bernoulli_poly(n + 1, m) - bernoulli_poly(n + 1, 0)) / (n + 1)
            assert brute == closed, (n, m)


@settings(**HYP)
@given(st.integers(0, 12), rationals)
def test_euler_poly_functional_equation(n, x):
    assert euler_poly(n, x) + euler_poly(n, x + 1) == 2 * F(x) ** n


@settings(**HYP)
@given(st.integers(0, 12), rationals)
def test_euler_poly_reflection(n, x):
    assert euler_poly(n, 1 - x) == (-1) ** n * euler_poly(n, x)


def test_euler_poly_anchors():
    for n in range(12):
        assert euler_poly(n, 0) == euler_number(n)
    assert euler_poly(0, F(7, 3)) == 1
    assert euler_poly(1, F(1, 3)) == F(1, 3) - F(1, 2)


@settings(**HYP)
@given(st.integers(0, 8), rationals, st.integers(-4, 4))
def test_bernoulli_function_periodicity(p, x, shift):
    assert bernoulli_function(p, x + shift) == bernoulli_function(p, x)


def test_bernoulli_function_matches_poly_on_unit_interval():
    for p in range(6):
        for q in (F(0), F(1, 7), F(1, 2), F(6, 7)):
            assert bernoulli_function(p, q) == bernoulli_poly(p, q)


@settings(**HYP)
@given(st.integers(0, 8), rationals)
def test_euler_function_antiperiodicity(m, x):
    assert euler_function(m, x + 1) == -euler_function(m, x)
    assert euler_function(m, x + 2) == euler_function(m, x)


def test_euler_function_midpoint_at_integers():
    # at integers the value is the mean of the one-sided limits
    for m in range(1, 7):
        for n in (-2, -1, 0, 1, 3):
            sign = -1 if n % 2 else 1
            left = -sign * euler_poly(m, 1)  # limit from below
            right = sign * euler_poly(m, 0)  # limit from above
            assert 2 * euler_function(m, n) == left + right, (m, n)
    for n in (-1, 0, 2):
        assert euler_function(0, n) == 0


def test_euler_function_matches_poly_off_integers():
    for m in range(5):
        for x in (F(1, 3), F(3, 4), F(7, 5), F(-1, 3)):
            n = floor(x)
            sign = -1 if n % 2 else 1
            assert euler_function(m, x) == sign * euler_poly(m, x - n)


@settings(**HYP)
@given(rationals, st.integers(-4, 4))
def test_sawtooth_is_odd_and_periodic(x, shift):
    assert sawtooth(x + shift) == sawtooth(x)
    assert sawtooth(-x) == -sawtooth(x)


def test_sawtooth_values():
    assert sawtooth(5) == 0
    assert sawtooth(F(1, 2)) == 0
    assert sawtooth(F(1, 3)) == F(-1, 6)
    assert sawtooth(F(5, 3)) == F(1, 6)
    # the sawtooth sums to zero over any full residue period
    for k in range(2, 12):
        assert sum(sawtooth(F(j, k)) for j in range(k)) == 0


# ---------------------------------------------------------------------------
# umbral evaluator
# ---------------------------------------------------------------------------


def test_umbral_binomial_brute_force():
    for n in range(9):
        brute = sum(
            comb(n, i) * euler_number(i) * euler_number(n - i) for i in range(n + 1)
        )
        assert umbral_eval((U + V) ** n) == brute, n


@settings(**HYP)
@given(st.integers(0, 7), st.integers(-5, 5), st.integers(-5, 5))
def test_umbral_affine_powers(n, a, b):
    brute = sum(
        comb(n, j) * F(a) ** j * F(b) ** (n - j) * euler_number(j)
        for j in range(n + 1)
    )
    assert umbral_eval((a * U + b) ** n) == brute


def test_umbral_bilinearity_and_constants():
    assert umbral_eval(F(7, 3)) == F(7, 3)
    assert umbral_eval(5) == 5
    p = 3 * U * V - 2 * V + F(1, 2)
    q = U * U + 1
    lhs = umbral_eval(p + q)
    assert lhs == umbral_eval(p) + umbral_eval(q)
    assert umbral_eval(2 * p) == 2 * umbral_eval(p)
    # U^2 lowers to euler_number(2) = 0, so q evaluates to 1
    assert umbral_eval(q) == 1


def test_umbral_poly_algebra():
    assert (U + V) - V == U
    assert (U - U) == UmbralPoly({})
    assert 2 + U == U + 2
    assert (1 - U) == -(U - 1)
    assert (U + V) ** 2 == U * U + 2 * U * V + V * V
    assert hash(U + V) == hash(V + U)
    assert repr(UmbralPoly({})) == "UmbralPoly(0)"


def test_umbral_rejects_bad_input():
    with pytest.raises(ValueError):
        (U + V) ** -1
    with pytest.raises(TypeError):
        umbral_eval(1.5)
    with pytest.raises(TypeError):
        umbral_eval("U")


# ---------------------------------------------------------------------------
# argument validation
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "call",
    [
        lambda: bernoulli_number(-1),
        lambda: bernoulli_poly(-2, 0),
        lambda: euler_number(-1),
        lambda: euler_poly(-3, 1),
        lambda: tangent_number(0),
        lambda: tan_series_coeff(-1),
        lambda: sec_series_coeff(-1),
    ],
)
def test_negative_indices_rejected(call):
    with pytest.raises(ValueError):
        call()
