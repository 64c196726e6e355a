"""Certified arbitrary-precision arithmetic.

Values are MPFR floats wrapped in :class:`PrecReal` balls ``value ± abs_error``.
MPFR's correct rounding gives a per-operation error of at most one ulp of the
result; error bounds are propagated in a small up-rounding context so they are
themselves rigorous upper bounds.  Angles are kept exact as rational multiples
of pi (:class:`Angle`), so "is this sine exactly zero / is this tangent at a
pole" are integer questions, never float comparisons.

The Hurwitz zeta engine (`hurwitz_zeta_ball`) runs Euler-Maclaurin entirely in
exact rational arithmetic: direct sum, integral term, half term and all
Bernoulli corrections are mpq values, and the remainder for the completely
monotone kernel (x+a)^-s is enveloped by the first omitted correction term
(doubled here for cushion).  Only one rounding happens, at the very end.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd
from typing import NamedTuple, Union

import gmpy2
from gmpy2 import mpfr, mpq, mpz

from .exact import bernoulli_number

__all__ = [
    "GUARD",
    "PrecReal",
    "PrecComplex",
    "Angle",
    "AnglePoleError",
    "pi_ball",
    "log_fraction_ball",
    "sin_angle",
    "cos_angle",
    "tan_angle",
    "ZetaEval",
    "hurwitz_zeta_ball",
    "zeta_one_diff_ball",
]

GUARD = 16  # extra bits carried on stored values (pi cache included)

ExactLike = Union[int, Fraction, mpz, mpq]

# error-bound arithmetic: low precision, rounded toward +inf (upper bounds);
# only ever applied to non-negative quantities
_ERR_PREC = 64
_up = gmpy2.context(precision=_ERR_PREC, round=gmpy2.RoundUp)
_down = gmpy2.context(precision=_ERR_PREC, round=gmpy2.RoundDown)

_ZERO = mpfr(0)


def _vctx(prec: int) -> gmpy2.context:
    return gmpy2.context(precision=prec)


def _ulp(v: mpfr, prec: int) -> mpfr:
    """Exact power of two >= the rounding error of a correctly rounded v."""
    if v == 0:
        return _ZERO
    # |true - v| <= 2^(exp - prec) when v = m * 2^exp with 1/2 <= |m| < 1
    return _up.exp2(gmpy2.get_exp(v) - prec)


def _pow2_upper(x) -> mpfr:
    """Exact power of two >= x, for non-negative mpq/Fraction x."""
    if x == 0:
        return _ZERO
    num, den = x.numerator, x.denominator
    e = int(num).bit_length() - int(den).bit_length() + 1
    return _up.exp2(e)


def _exact_neg(v: mpfr) -> mpfr:
    """-v without rounding (the global context would crush the precision)."""
    return _vctx(v.precision).minus(v)


def _exact_abs(v: mpfr) -> mpfr:
    return v if v >= 0 else _exact_neg(v)


class PrecReal:
    """A real number known to lie in [value - abs_error, value + abs_error].

    ``work_precision`` is the precision the ball was requested at; values are
    stored with GUARD extra bits.  Instances are immutable by convention.
    """

    __slots__ = ("value", "abs_error", "work_precision")

    def __init__(self, value: mpfr, abs_error: mpfr, work_precision: int):
        self.value = value
        self.abs_error = abs_error
        self.work_precision = work_precision

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_exact(cls, x: ExactLike, work_precision: int) -> "PrecReal":
        q = mpq(x.numerator, x.denominator) if isinstance(x, Fraction) else mpq(x)
        prec = work_precision + GUARD
        v = mpfr(q, prec)
        err = _pow2_upper(abs(q - mpq(v))) if mpq(v) != q else _ZERO
        return cls(v, err, work_precision)

    @classmethod
    def exact_zero(cls, work_precision: int) -> "PrecReal":
        return cls(_ZERO, _ZERO, work_precision)

    # -- queries -----------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.abs_error == 0

    def value_fraction(self) -> Fraction:
        q = mpq(self.value)
        return Fraction(int(q.numerator), int(q.denominator))

    def error_fraction(self) -> Fraction:
        q = mpq(self.abs_error)
        return Fraction(int(q.numerator), int(q.denominator))

    def encloses(self, x: ExactLike) -> bool:
        """Exact check: does the ball contain the rational x?"""
        xq = mpq(x.numerator, x.denominator) if isinstance(x, Fraction) else mpq(x)
        return abs(xq - mpq(self.value)) <= mpq(self.abs_error)

    def agrees_with(self, other: "PrecReal") -> bool:
        """Exact check: |self.value - other.value| <= sum of the two bounds."""
        d = abs(mpq(self.value) - mpq(other.value))
        return d <= mpq(self.abs_error) + mpq(other.abs_error)

    def __float__(self) -> float:
        return float(self.value)

    def __repr__(self) -> str:
        return f"PrecReal({self.value!s} ± {self.abs_error!s} @ {self.work_precision}b)"

    def decimal(self, max_digits: int | None = None) -> str:
        """Decimal rendering with only the digits the error bound justifies."""
        if self.is_exact and self.value == 0:
            return "0"
        if self.abs_error == 0:
            digits = max_digits or int(self.work_precision * 0.3010) + 1
        else:
            # number of significant decimal digits: log10(|v| / err)
            if self.value == 0 or abs(self.value) <= self.abs_error:
                return "0"
            ratio = _up.div(abs(self.value), self.abs_error)
            digits = max(1, int(float(gmpy2.log10(ratio))))
            if max_digits is not None:
                digits = min(digits, max_digits)
        # format the stored mpfr directly: rewrapping through gmpy2.mpfr()
        # would re-round to the global (53-bit) context and fabricate digits
        return format(self.value, f".{digits}g")

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "PrecReal | None":
        if isinstance(other, PrecReal):
            return other
        if isinstance(other, (int, Fraction, type(mpz(0)), type(mpq(0)))):
            return PrecReal.from_exact(other, self.work_precision)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        wp = min(self.work_precision, o.work_precision)
        prec = wp + GUARD
        v = _vctx(prec).add(self.value, o.value)
        err = _up.add(_up.add(self.abs_error, o.abs_error), _ulp(v, prec))
        return PrecReal(v, err, wp)

    __radd__ = __add__

    def __neg__(self):
        return PrecReal(_exact_neg(self.value), self.abs_error, self.work_precision)

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
        wp = min(self.work_precision, o.work_precision)
        prec = wp + GUARD
        v = _vctx(prec).mul(self.value, o.value)
        # |xy - v| <= |xv|ey + |yv|ex + ex ey + ulp
        err = _up.add(
            _up.add(
                _up.add(
                    _up.mul(_exact_abs(self.value), o.abs_error),
                    _up.mul(_exact_abs(o.value), self.abs_error),
                ),
                _up.mul(self.abs_error, o.abs_error),
            ),
            _ulp(v, prec),
        )
        return PrecReal(v, err, wp)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        wp = min(self.work_precision, o.work_precision)
        prec = wp + GUARD
        ay = _exact_abs(o.value)
        low = _down.sub(ay, o.abs_error)
        if not low > 0:
            raise ZeroDivisionError("divisor ball contains zero")
        v = _vctx(prec).div(self.value, o.value)
        num = _up.add(_up.mul(_exact_abs(self.value), o.abs_error), _up.mul(ay, self.abs_error))
        den = _down.mul(ay, low)
        err = _up.add(_up.div(num, den), _ulp(v, prec))
        return PrecReal(v, err, wp)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __abs__(self):
        return PrecReal(_exact_abs(self.value), self.abs_error, self.work_precision)

    def widened(self, extra: ExactLike) -> "PrecReal":
        """Same center with the error bound enlarged by `extra` (exact, >= 0)."""
        if extra < 0:
            raise ValueError("widening amount must be non-negative")
        return PrecReal(self.value, _up.add(self.abs_error, _pow2_upper(extra)), self.work_precision)

    def pow_int(self, n: int) -> "PrecReal":
        if n < 0:
            return 1 / self.pow_int(-n)
        result = PrecReal.from_exact(1, self.work_precision)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


class PrecComplex:
    """Complex ball: a pair of PrecReal parts.  Iterable as (re, im)."""

    __slots__ = ("re", "im")

    def __init__(self, re: PrecReal, im: PrecReal):
        self.re = re
        self.im = im

    def __iter__(self):
        yield self.re
        yield self.im

    @classmethod
    def from_exact(cls, re: ExactLike, im: ExactLike, work_precision: int) -> "PrecComplex":
        return cls(PrecReal.from_exact(re, work_precision), PrecReal.from_exact(im, work_precision))

    def __add__(self, other: "PrecComplex") -> "PrecComplex":
        return PrecComplex(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "PrecComplex") -> "PrecComplex":
        return PrecComplex(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "PrecComplex":
        return PrecComplex(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, PrecComplex):
            return PrecComplex(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        return PrecComplex(self.re * other, self.im * other)

    __rmul__ = __mul__

    def conjugate(self) -> "PrecComplex":
        return PrecComplex(self.re, -self.im)

    def times_i(self) -> "PrecComplex":
        return PrecComplex(-self.im, self.re)

    def __repr__(self) -> str:
        return f"PrecComplex({self.re!r}, {self.im!r})"


class AnglePoleError(ArithmeticError):
    """Raised when an exact angle sits on a pole of the requested function."""


@dataclass(frozen=True)
class Angle:
    """The angle (p/q)*pi radians, stored reduced with q >= 1."""

    p: int
    q: int = 1

    def __post_init__(self):
        if self.q == 0:
            raise ValueError("angle denominator must be nonzero")
        p, q = self.p, self.q
        if q < 0:
            p, q = -p, -q
        g = gcd(p, q)
        if g > 1:
            p //= g
            q //= g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def from_fraction(cls, x: Fraction | int) -> "Angle":
        f = Fraction(x)
        return cls(f.numerator, f.denominator)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def times(self, m: int) -> "Angle":
        return Angle(self.p * m, self.q)

    def half(self) -> "Angle":
        return Angle(self.p, 2 * self.q)

    def reduced_mod_2(self) -> Fraction:
        """p/q reduced into [0, 2): the same point on the circle."""
        r = self.p % (2 * self.q)
        return Fraction(r, self.q)

    # exact pole / zero structure (integer arithmetic only)
    def sin_is_zero(self) -> bool:
        return self.q == 1

    def cos_is_zero(self) -> bool:
        return self.q == 2

    def tan_is_pole(self) -> bool:
        return self.cos_is_zero()


_pi_cache: dict[int, PrecReal] = {}
_pi_lock = threading.Lock()


def pi_ball(work_precision: int) -> PrecReal:
    """pi as a ball at work_precision (+GUARD internal) bits; cached."""
    got = _pi_cache.get(work_precision)
    if got is not None:
        return got
    with _pi_lock:
        got = _pi_cache.get(work_precision)
        if got is None:
            prec = work_precision + GUARD
            v = _vctx(prec).const_pi()
            got = PrecReal(v, _ulp(v, prec), work_precision)
            _pi_cache[work_precision] = got
    return got


def log_fraction_ball(x: Fraction, work_precision: int) -> PrecReal:
    """ln(x) for rational x > 0, as a certified ball."""
    if x <= 0:
        raise ValueError("log needs a positive argument")
    if x == 1:
        return PrecReal.exact_zero(work_precision)
    prec = work_precision + GUARD
    xa = mpfr(mpq(x.numerator, x.denominator), prec)
    v = _vctx(prec).log(xa)
    # argument conversion: relative error <= 2^(1-prec), so |d log| <= 2^(2-prec)
    err = _up.add(_up.exp2(2 - prec), _ulp(v, prec))
    return PrecReal(v, err, work_precision)


def _angle_value(a: Angle, work_precision: int) -> PrecReal:
    """The angle reduced to [0, 2*pi) as a ball."""
    r = a.reduced_mod_2()  # in [0, 2)
    if r == 0:
        return PrecReal.exact_zero(work_precision)
    return pi_ball(work_precision) * PrecReal.from_exact(r, work_precision)


def sin_angle(a: Angle, work_precision: int) -> PrecReal:
    r = a.reduced_mod_2()
    if r.denominator == 1:  # 0 or pi
        return PrecReal.exact_zero(work_precision)
    if r.denominator == 2:  # pi/2 or 3*pi/2
        return PrecReal.from_exact(1 if r.numerator == 1 else -1, work_precision)
    theta = _angle_value(a, work_precision)
    prec = work_precision + GUARD
    v = _vctx(prec).sin(theta.value)
    err = _up.add(theta.abs_error, _ulp(v, prec))  # |sin'| <= 1
    return PrecReal(v, err, work_precision)


def cos_angle(a: Angle, work_precision: int) -> PrecReal:
    r = a.reduced_mod_2()
    if r.denominator == 1:
        return PrecReal.from_exact(1 if r.numerator == 0 else -1, work_precision)
    if r.denominator == 2:
        return PrecReal.exact_zero(work_precision)
    theta = _angle_value(a, work_precision)
    prec = work_precision + GUARD
    v = _vctx(prec).cos(theta.value)
    err = _up.add(theta.abs_error, _ulp(v, prec))
    return PrecReal(v, err, work_precision)


def tan_angle(a: Angle, work_precision: int) -> PrecReal:
    if a.tan_is_pole():
        raise AnglePoleError(f"tan pole at {a.p}/{a.q} * pi")
    r = a.reduced_mod_2()
    if r.denominator == 1:
        return PrecReal.exact_zero(work_precision)
    theta = _angle_value(a, work_precision)
    prec = work_precision + GUARD
    ctx = _vctx(prec)
    v = ctx.tan(theta.value)
    # Lipschitz bound: |tan| on the interval peaks at an endpoint (no pole
    # inside: the error radius is far below the exact distance to any pole)
    e = theta.abs_error
    hi = max(
        _exact_abs(ctx.tan(_up.add(theta.value, e))),
        _exact_abs(ctx.tan(_down.sub(theta.value, e))),
        _exact_abs(v),
    )
    lipschitz = _up.add(mpfr(1), _up.mul(hi, hi))
    err = _up.add(_up.mul(e, _up.mul(lipschitz, mpfr("1.001"))), _ulp(v, prec))
    return PrecReal(v, err, work_precision)


def cot_angle(a: Angle, work_precision: int) -> PrecReal:
    if a.sin_is_zero():
        raise AnglePoleError(f"cot pole at {a.p}/{a.q} * pi")
    if a.cos_is_zero():
        return PrecReal.exact_zero(work_precision)
    return 1 / tan_angle(a, work_precision)


class ZetaEval(NamedTuple):
    value: PrecReal
    direct_terms: int


def _em_zeta_exact(s: int, a: Fraction, target: Fraction) -> tuple[mpq, mpq, int]:
    """Euler-Maclaurin for zeta(s, a) = sum_{n>=0} (n+a)^-s in exact rationals.

    Returns (exact partial value, remainder bound, direct terms used), with
    remainder bound <= target.  Valid for integer s >= 2 and rational a > 0:
    the kernel is completely monotone, so the remainder is enveloped by the
    first omitted Bernoulli correction (doubled below as a cushion).
    """
    p, q = a.numerator, a.denominator
    tq = mpq(target.numerator, target.denominator)
    N = max(16, s, (target.denominator.bit_length() // 3))
    while True:
        base_num = mpz(N) * q + p  # (N + a) = base_num / q
        direct = mpq(0)
        for n in range(N):
            d = mpz(n) * q + p
            direct += mpq(mpz(q) ** s, d**s)
        integral = mpq(mpz(q) ** (s - 1), base_num ** (s - 1) * (s - 1))
        half = mpq(mpz(q) ** s, 2 * base_num**s)
        total = direct + integral + half
        # Bernoulli corrections: B_2j/(2j)! * rising(s,2j-1) * (N+a)^(1-s-2j)
        rising = mpz(1)  # rising factorial s(s+1)...(s+r-1), built incrementally
        corr = mpq(0)
        bound = None
        m_used = 0
        prev_abs = None
        for j in range(1, 420):
            rising = rising * (s + 2 * j - 3) * (s + 2 * j - 2) if j > 1 else mpz(s)
            b2j = bernoulli_number(2 * j)
            coeff = mpq(b2j.numerator, b2j.denominator) / factorial(2 * j)
            term = coeff * rising * mpq(mpz(q) ** (s + 2 * j - 1), base_num ** (s + 2 * j - 1))
            # candidate remainder bound if we stop BEFORE adding term j
            cand = 2 * abs(term)
            if cand <= tq:
                bound = cand
                m_used = j - 1
                break
            if prev_abs is not None and abs(term) >= prev_abs:
                break  # divergence onset; need a larger N
            corr += term
            prev_abs = abs(term)
        if bound is not None:
            return total + corr, bound, N
        N *= 2


def _zeta_key(s: int, a: Fraction, wp: int):
    return (s, a.numerator, a.denominator, wp)


_zeta_cache: dict[tuple, ZetaEval] = {}
_zeta_lock = threading.Lock()


def hurwitz_zeta_ball(s: int, a: Fraction | int, work_precision: int) -> ZetaEval:
    """zeta(s, a) for integer s >= 2 and rational a > 0, certified.

    The returned abs_error is below 2^-work_precision.  Results are cached
    (initialize-once; safe under concurrent readers).
    """
    if not isinstance(s, int) or s < 2:
        raise ValueError("hurwitz zeta engine needs integer s >= 2")
    a = Fraction(a)
    if a <= 0:
        raise ValueError("hurwitz zeta needs a > 0")
    key = _zeta_key(s, a, work_precision)
    got = _zeta_cache.get(key)
    if got is not None:
        return got
    target = Fraction(1, 2 ** (work_precision + 8))
    exact, rem, n_terms = _em_zeta_exact(s, a, target)
    prec = work_precision + GUARD
    v = mpfr(exact, prec)
    err = _up.add(_pow2_upper(rem), _pow2_upper(abs(mpq(exact) - mpq(v))))
    out = ZetaEval(PrecReal(v, err, work_precision), n_terms)
    with _zeta_lock:
        _zeta_cache[key] = out
    return out


def zeta_one_diff_ball(a: Fraction, b: Fraction, work_precision: int) -> ZetaEval:
    """sum_{n>=0} [1/(n+a) - 1/(n+b)] for rational a, b > 0, certified.

    This is the s=1 Hurwitz difference (= digamma(b) - digamma(a)); the
    divergent parts cancel.  Euler-Maclaurin on the difference kernel with the
    periodic-Bernoulli remainder bound |B~_2M|/(2M)! <= 4/6^(2M).
    """
    if a <= 0 or b <= 0:
        raise ValueError("needs a, b > 0")
    if a == b:
        return ZetaEval(PrecReal.exact_zero(work_precision), 0)
    target = Fraction(1, 2 ** (work_precision + 8))
    N = max(16, work_precision // 3)
    while True:
        direct = mpq(0)
        bq = mpq(b.numerator, b.denominator)
        aq = mpq(a.numerator, a.denominator)
        for n in range(N):
            direct += (bq - aq) / ((n + aq) * (n + bq))
        na, nb = N + aq, N + bq
        half = (bq - aq) / (2 * na * nb)
        corr = mpq(0)
        bound = None
        prev_cand = None
        for j in range(1, 240):
            b2j = bernoulli_number(2 * j)
            coeff = mpq(b2j.numerator, b2j.denominator) / (2 * j)
            term = coeff * (mpq(1) / na ** (2 * j) - mpq(1) / nb ** (2 * j))
            cand = 4 * factorial(2 * j - 1) * (mpq(1) / na ** (2 * j) + mpq(1) / nb ** (2 * j)) / mpz(6) ** (2 * j)
            if cand <= mpq(target.numerator, target.denominator):
                bound = cand
                break
            if prev_cand is not None and cand >= prev_cand:
                break  # remainder bound stopped shrinking; need larger N
            prev_cand = cand
            corr += term
        if bound is not None:
            rational_part = direct + half + corr
            log_part = log_fraction_ball(
                Fraction(int(nb.numerator) * int(na.denominator), int(nb.denominator) * int(na.numerator)),
                work_precision,
            )
            out = PrecReal.from_exact(Fraction(int(rational_part.numerator), int(rational_part.denominator)), work_precision)
            out = out + log_part
            out = PrecReal(out.value, _up.add(out.abs_error, _pow2_upper(bound)), work_precision)
            return ZetaEval(out, N)
        N *= 2
