"""Finite Dedekind-type character sums, all in exact rational arithmetic.

The alternating ("DC") sum of order m is

    dc_sum(m, h, k) = 2 * sum_{j=1}^{k-1} (-1)^(j-1) * (j/k) * Ebar_m(h*j/k)

with Ebar_m the antiperiodic Euler function and k odd.  Order 1 recovers a
Dedekind-like sum; order 0 ties to the Hardy sum hardy_s5 (see verify module
for the calibrated constant).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd

from .exact import (
    bernoulli_function,
    euler_function,
    euler_number,
    sawtooth,
    umbral_eval,
    U,
    V,
)
from .precision import PrecReal, pi_ball

__all__ = [
    "SumParams",
    "ReciprocityCase",
    "dedekind_sum",
    "dedekind_reciprocity_case",
    "dedekind_reciprocity_residual",
    "apostol_sum",
    "dc_sum",
    "hardy_s5",
    "y_sum",
    "s5_general",
    "kim_reciprocity_sides",
    "dc_even_reciprocity_lhs",
    "dc_even_reciprocity_rhs",
    "tangent_variant_rhs",
]


@dataclass(frozen=True)
class SumParams:
    """Arguments of a finite sum: order m and the coprime pair (h, k)."""

    h: int
    k: int
    order: int = 0


@dataclass(frozen=True)
class ReciprocityCase:
    params: SumParams
    lhs: Fraction
    rhs: Fraction
    residual: Fraction


def _check_pair(h: int, k: int, *, odd_k: bool = False, odd_h: bool = False) -> None:
    if not (isinstance(h, int) and isinstance(k, int)):
        raise ValueError("h and k must be integers")
    if k < 1:
        raise ValueError("k must be positive")
    if gcd(h, k) != 1:
        raise ValueError("h and k must be coprime")
    if odd_k and k % 2 == 0:
        raise ValueError("k must be odd")
    if odd_h and h % 2 == 0:
        raise ValueError("h must be odd")


def dedekind_sum(h: int, k: int) -> Fraction:
    """Classical sum of sawtooth products over j = 1..k-1."""
    _check_pair(h, k)
    return sum(
        (sawtooth(Fraction(j, k)) * sawtooth(Fraction(h * j, k)) for j in range(1, k)),
        Fraction(0),
    )


def dedekind_reciprocity_case(h: int, k: int) -> ReciprocityCase:
    """LHS s(h,k)+s(k,h), RHS -1/4 + (h/k + k/h + 1/(h k))/12, and residual."""
    _check_pair(h, k)
    _check_pair(k, h)
    lhs = dedekind_sum(h, k) + dedekind_sum(k, h)
    rhs = Fraction(-1, 4) + (Fraction(h, k) + Fraction(k, h) + Fraction(1, h * k)) / 12
    return ReciprocityCase(SumParams(h, k, 1), lhs, rhs, lhs - rhs)


def dedekind_reciprocity_residual(h: int, k: int) -> Fraction:
    return dedekind_reciprocity_case(h, k).residual


def apostol_sum(p: int, h: int, k: int) -> Fraction:
    """Weighted periodic-Bernoulli sum: sum_{a=0}^{k-1} (a/k) * Bbar_p(a*h/k).

    Order p = 1 coincides with dedekind_sum (checked exactly in the verify
    suite): the j = 0 term vanishes and the mean of Bbar_1 over a full period
    kills the difference between the weights a/k and ((a/k)).
    """
    if not isinstance(p, int) or p < 1:
        raise ValueError("order must be a positive integer")
    _check_pair(h, k)
    return sum(
        (Fraction(a, k) * bernoulli_function(p, Fraction(a * h, k)) for a in range(k)),
        Fraction(0),
    )


def dc_sum(m: int, h: int, k: int) -> Fraction:
    """Order-m alternating Euler-function sum T_m(h, k); k odd, gcd(h,k)=1."""
    if not isinstance(m, int) or m < 0:
        raise ValueError("order must be a non-negative integer")
    _check_pair(h, k, odd_k=True)
    total = Fraction(0)
    for j in range(1, k):
        term = Fraction(j, k) * euler_function(m, Fraction(h * j, k))
        total += term if j % 2 == 1 else -term
    return 2 * total


def hardy_s5(h: int, k: int) -> Fraction:
    """Hardy's alternating sawtooth sum with floor-twisted signs."""
    _check_pair(h, k)
    total = Fraction(0)
    for j in range(1, k + 1):
        sign = -1 if (j + (h * j) // k) % 2 else 1
        total += sign * sawtooth(Fraction(j, k))
    return total


def y_sum(h: int, k: int) -> Fraction:
    """Scaled Hardy sum: 4k times hardy_s5."""
    return 4 * k * hardy_s5(h, k)


def s5_general(y: int, h: int, k: int) -> Fraction:
    """Order-2y extension anchored at the Hardy sum: dc_sum(2y, h, k) / 2.

    At y = 0 this equals -hardy_s5(h, k) for h, k odd (the calibration in the
    verify suite pins the sign).
    """
    if not isinstance(y, int) or y < 0:
        raise ValueError("order must be a non-negative integer")
    return dc_sum(2 * y, h, k) / 2


def kim_reciprocity_sides(p: int, h: int, k: int) -> tuple[Fraction, Fraction]:
    """Both sides of the order-p two-variable reciprocity claim, exactly.

    LHS: k^p T_p(h,k) + h^p T_p(k,h).  RHS: an umbral expression; powers of
    the symbols U, V are lowered to Euler numbers after full binomial
    expansion.  The two sides are returned as computed so callers can inspect
    the (nonzero) residual; see the errata suite.
    """
    if not isinstance(p, int) or p < 1:
        raise ValueError("order must be a positive integer")
    _check_pair(h, k, odd_k=True, odd_h=True)
    _check_pair(k, h)
    lhs = Fraction(k) ** p * dc_sum(p, h, k) + Fraction(h) ** p * dc_sum(p, k, h)

    acc = Fraction(0)
    for u in range(k):
        f = (h * u) // k
        if (u - f) % 2 == 1:
            expr = (k * h * U + h * u + k * V + k * (h - f)) ** p
            acc += umbral_eval(expr)
    rhs = 2 * acc + umbral_eval((h * U + k * V) ** p) + (p + 2) * euler_number(p)
    return lhs, rhs


def dc_even_reciprocity_lhs(y: int, h: int, k: int) -> Fraction:
    """k h^(2y+1) T_2y(h,k) + h k^(2y+1) T_2y(k,h), exactly."""
    if not isinstance(y, int) or y < 1:
        raise ValueError("order parameter must be a positive integer")
    _check_pair(h, k, odd_k=True, odd_h=True)
    return (
        k * Fraction(h) ** (2 * y + 1) * dc_sum(2 * y, h, k)
        + h * Fraction(k) ** (2 * y + 1) * dc_sum(2 * y, k, h)
    )


def dc_even_reciprocity_rhs(y: int, h: int, k: int, precision: int = 128) -> PrecReal:
    """Transcendental side of the even-order reciprocity claim.

    pi-power coefficients are exact rationals; only pi itself is a ball.
    The verify suite records that this does NOT match dc_even_reciprocity_lhs
    as printed (fail-as-printed).
    """
    if not isinstance(y, int) or y < 1:
        raise ValueError("order parameter must be a positive integer")
    _check_pair(h, k, odd_k=True, odd_h=True)
    pi = pi_ball(precision)
    sign = -1 if y % 2 else 1
    first_coeff = (
        Fraction(sign)
        * Fraction(factorial(2 * y), 2 * factorial(4 * y + 1))
        * euler_number(4 * y + 1)
    )
    first = pi.pow_int(2 * y - 1) * PrecReal.from_exact(first_coeff, precision)
    inner = Fraction(0)
    for a in range(y):
        inner += (
            euler_number(2 * a + 1)
            * euler_number(2 * y - 2 * a - 1)
            * Fraction(h) ** (2 * a + 2)
            * Fraction(k) ** (2 * y - 2 * a)
            / (factorial(2 * a + 1) * factorial(2 * y - 2 * a + 1))
        )
    second = pi.pow_int(2) * PrecReal.from_exact(4 * factorial(2 * y) * inner, precision)
    return first + second


def tangent_variant_rhs(y: int, h: int, k: int, precision: int = 128) -> PrecReal:
    """Variant transcendental side using tangent coefficients.

    The inner sum runs only over indices where every factor is defined
    (tangent coefficients need index >= 1, factorials need a non-negative
    argument); at y = 1 that range is empty.  Also recorded fail-as-printed.
    """
    from .exact import tangent_number

    if not isinstance(y, int) or y < 1:
        raise ValueError("order parameter must be a positive integer")
    _check_pair(h, k, odd_k=True, odd_h=True)
    pi = pi_ball(precision)
    sign = -1 if y % 2 else 1
    first_coeff = (
        Fraction(sign)
        * Fraction(factorial(2 * y), 2 * factorial(4 * y + 1))
        * euler_number(4 * y + 1)
    )
    first = pi.pow_int(2 * y - 1) * PrecReal.from_exact(first_coeff, precision)
    inner = Fraction(0)
    for a in range(1, y):
        inner += (
            tangent_number(a)
            * tangent_number(y - a + 1)
            * Fraction(h) ** (2 * a - 1)
            * Fraction(k) ** (2 * y - 2 * a + 1)
            / (factorial(2 * a - 1) * factorial(2 * y - 2 * a - 1))
        )
    coeff = Fraction(sign * factorial(2 * y), 4**y) * inner
    return first + PrecReal.from_exact(coeff, precision)
