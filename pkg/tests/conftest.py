"""Shared helpers: exact conversion of mpmath oracle values to Fractions.

mpmath is used in the tests only, as an independent numerical oracle.  Its
binary floats convert to exact rationals, so every oracle comparison is a
rational-arithmetic statement: |ball center - oracle| <= ball bound + slack,
where the slack covers the oracle's own rounding and nothing else.
"""

from fractions import Fraction

import mpmath

mpmath.mp.prec = 240  # oracle working precision in bits

# A few hundred ulp at the oracle precision: far below any bound the library
# reports at <= 192 working bits, so slack can never mask a real failure.
ORACLE_SLACK = Fraction(1, 2**200)


def mpf_fraction(x) -> Fraction:
    """Exact rational value of an mpmath float."""
    x = mpmath.mpf(x)
    if x == 0:
        return Fraction(0)
    sign, man, exp, _ = x._mpf_
    f = Fraction(man) * Fraction(2) ** exp
    return -f if sign else f


def assert_ball_matches(ball, oracle, slack=ORACLE_SLACK):
    """The ball must agree with the oracle value up to its bound plus slack."""
    target = mpf_fraction(oracle)
    diff = abs(ball.value_fraction() - target)
    limit = ball.error_fraction() + slack
    assert diff <= limit, (
        f"{ball!r} vs oracle {mpmath.nstr(mpmath.mpf(oracle), 30)}: "
        f"off by {float(diff):.3e}, allowed {float(limit):.3e}"
    )


def assert_cball_matches(cball, oracle, slack=ORACLE_SLACK):
    """Component-wise oracle agreement for a complex ball."""
    oc = mpmath.mpc(oracle)
    assert_ball_matches(cball.re, oc.real, slack)
    assert_ball_matches(cball.im, oc.imag, slack)
