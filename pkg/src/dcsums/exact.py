"""Exact rational building blocks: Bernoulli/Euler numbers and polynomials,
their periodic extensions, tangent/secant Maclaurin coefficients, the sawtooth,
and a tiny two-symbol umbral evaluator.

Everything here returns :class:`fractions.Fraction` and is exact.  Conventions:

* ``bernoulli_number(1) == -1/2`` (the "minus" convention, i.e. the one under
  which ``bernoulli_poly(n, 0) == bernoulli_number(n)``).
* ``euler_number(n)`` is the *polynomial value at zero* ``E_n(0)`` — NOT the
  integer secant numbers.  So ``euler_number(1) == -1/2`` and the odd entries
  are nonzero while ``euler_number(2n) == 0`` for ``n >= 1``.
* ``second_kind_euler_number(m)`` gives the integer secant-tangent companions
  ``1, 0, -1, 0, 5, 0, -61, ...`` with ``E*_m == 2**m * E_m(1/2)``.
* ``euler_function(m, x)`` is the antiperiodic extension of ``euler_poly`` and
  takes the *mean of the one-sided limits* at integers, so Fourier-type
  identities hold on all of Q with no excluded points.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, floor
from typing import Union

Rational = Union[int, Fraction]

__all__ = [
    "Rational",
    "bernoulli_number",
    "bernoulli_poly",
    "bernoulli_function",
    "euler_number",
    "euler_poly",
    "euler_function",
    "second_kind_euler_number",
    "tangent_number",
    "tan_series_coeff",
    "sec_series_coeff",
    "sawtooth",
    "UmbralPoly",
    "umbral_eval",
    "U",
    "V",
]


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    """Bernoulli number B_n, with B_1 = -1/2."""
    if n < 0:
        raise ValueError("Bernoulli numbers need n >= 0")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    # B_n = -1/(n+1) * sum_{j<n} C(n+1, j) B_j
    acc = Fraction(0)
    for j in range(n):
        bj = bernoulli_number(j)
        if bj:
            acc += comb(n + 1, j) * bj
    return -acc / (n + 1)


def bernoulli_poly(n: int, x: Rational) -> Fraction:
    """Value of the Bernoulli polynomial B_n(x)."""
    if n < 0:
        raise ValueError("Bernoulli polynomials need n >= 0")
    xf = Fraction(x)
    acc = Fraction(0)
    xp = Fraction(1)  # xf ** (n - j), built from the j = n end downward
    for j in range(n, -1, -1):
        bj = bernoulli_number(j)
        if bj:
            acc += comb(n, j) * bj * xp
        xp *= xf
    return acc


def bernoulli_function(p: int, x: Rational) -> Fraction:
    """Periodic Bernoulli function: B_p evaluated on the fractional part of x."""
    xf = Fraction(x)
    return bernoulli_poly(p, xf - floor(xf))


@lru_cache(maxsize=None)
def euler_number(n: int) -> Fraction:
    """E_n(0), the Euler polynomial value at zero.

    Satisfies 2*E_n = -sum_{j<n} C(n,j) E_j for n >= 1 and
    E_n(0) = -2*(2**(n+1) - 1)*B_{n+1}/(n+1); both are exercised in tests.
    """
    if n < 0:
        raise ValueError("Euler numbers need n >= 0")
    if n == 0:
        return Fraction(1)
    acc = Fraction(0)
    for j in range(n):
        ej = euler_number(j)
        if ej:
            acc += comb(n, j) * ej
    return -acc / 2


def euler_poly(n: int, x: Rational) -> Fraction:
    """Value of the Euler polynomial E_n(x) = sum_j C(n,j) E_j(0) x**(n-j)."""
    if n < 0:
        raise ValueError("Euler polynomials need n >= 0")
    xf = Fraction(x)
    acc = Fraction(0)
    xp = Fraction(1)
    for j in range(n, -1, -1):
        ej = euler_number(j)
        if ej:
            acc += comb(n, j) * ej * xp
        xp *= xf
    return acc


def euler_function(m: int, x: Rational) -> Fraction:
    """Antiperiodic Euler function: (-1)**floor(x) * E_m({x}) off the integers.

    At integer arguments the mean of the one-sided limits is returned
    (0 for m = 0, (-1)**x * E_m(0) for m >= 1), which is the value the
    Fourier expansion converges to — identities stated through that
    expansion therefore hold on all of Q.
    """
    xf = Fraction(x)
    n = floor(xf)
    frac = xf - n
    sign = -1 if n % 2 else 1
    if frac:
        return sign * euler_poly(m, frac)
    if m == 0:
        return Fraction(0)
    return sign * euler_number(m)


@lru_cache(maxsize=None)
def second_kind_euler_number(m: int) -> Fraction:
    """Integer companions E*_m = sum_n C(m,n) 2**n E_n(0): 1, 0, -1, 0, 5, ..."""
    if m < 0:
        raise ValueError("need m >= 0")
    acc = Fraction(0)
    p2 = 1
    for n in range(m + 1):
        en = euler_number(n)
        if en:
            acc += comb(m, n) * p2 * en
        p2 *= 2
    return acc


def tangent_number(k: int) -> Fraction:
    """Tangent number: T_1, T_2, T_3, ... = 1, 2, 16, 272, ... (integer-valued)."""
    if k < 1:
        raise ValueError("tangent numbers start at k = 1")
    return (-1) ** (k - 1) * bernoulli_number(2 * k) / (2 * k) * (2 ** (2 * k) - 1) * 2 ** (2 * k)


def tan_series_coeff(n: int) -> Fraction:
    """Coefficient of z**(2n+1) in the Maclaurin series of tan z.

    Equals tangent_number(n+1) / (2n+1)!  — the cross-link with the odd Euler
    values (-1)**(n+1) 2**(2n+1) E_{2n+1}(0) / (2n+1)! is what is implemented.
    """
    if n < 0:
        raise ValueError("need n >= 0")
    sign = -1 if n % 2 == 0 else 1
    num = sign * Fraction(2) ** (2 * n + 1) * euler_number(2 * n + 1)
    return num / _factorial(2 * n + 1)


def sec_series_coeff(n: int) -> Fraction:
    """Coefficient of z**(2n) in the Maclaurin series of sec z:
    (-1)**n E*_{2n} / (2n)!."""
    if n < 0:
        raise ValueError("need n >= 0")
    return (-1) ** n * second_kind_euler_number(2 * n) / _factorial(2 * n)


@lru_cache(maxsize=None)
def _factorial(n: int) -> int:
    f = 1
    for i in range(2, n + 1):
        f *= i
    return f


def sawtooth(x: Rational) -> Fraction:
    """((x)): the odd 1-periodic sawtooth, x - floor(x) - 1/2 off Z and 0 on Z."""
    xf = Fraction(x)
    n = floor(xf)
    if xf == n:
        return Fraction(0)
    return xf - n - Fraction(1, 2)


class UmbralPoly:
    """Polynomial in two commuting formal symbols U, V with rational coefficients.

    Supports +, -, * (by scalars and by each other) and ** with non-negative
    integer exponents.  ``umbral_eval`` then lowers every monomial
    ``U**a * V**b`` to ``euler_number(a) * euler_number(b)`` — the usual
    "replace powers by subscripts" evaluation.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], Fraction] | None = None):
        self.terms: dict[tuple[int, int], Fraction] = {}
        if terms:
            for key, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[key] = c

    @staticmethod
    def _coerce(other) -> "UmbralPoly | None":
        if isinstance(other, UmbralPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UmbralPoly({(0, 0): Fraction(other)})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for key, c in o.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return UmbralPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UmbralPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in o.terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return UmbralPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("umbral powers need a non-negative integer exponent")
        result = UmbralPoly({(0, 0): Fraction(1)})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "UmbralPoly(0)"
        bits = []
        for (a, b), c in sorted(self.terms.items()):
            bits.append(f"{c}*U^{a}*V^{b}")
        return "UmbralPoly(" + " + ".join(bits) + ")"


U = UmbralPoly({(1, 0): Fraction(1)})
V = UmbralPoly({(0, 1): Fraction(1)})


def umbral_eval(expr) -> Fraction:
    """Lower U**a V**b monomials to euler_number(a)*euler_number(b) and sum.

    Accepts an UmbralPoly, an int, or a Fraction (constants evaluate to
    themselves); anything else raises TypeError.
    """
    if isinstance(expr, (int, Fraction)):
        return Fraction(expr)
    if not isinstance(expr, UmbralPoly):
        raise TypeError(f"cannot umbral-evaluate {type(expr).__name__}")
    acc = Fraction(0)
    for (a, b), c in expr.terms.items():
        acc += c * euler_number(a) * euler_number(b)
    return acc
