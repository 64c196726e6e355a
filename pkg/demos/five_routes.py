"""
One alternating sum, six independent routes
===========================================

T_{2y}(h, k) is a plain rational, but it also equals five different
infinite-series expressions.  Each series is summed with a certified
tail bound, so "the routes agree" means every ball encloses the exact
fraction - not that six floats look similar.
"""

from dcsums import (
    dc_sum,
    dc_sum_series_tan,
    dc_sum_hurwitz,
    dc_sum_clausen,
    dc_sum_polylog,
    dc_sum_gseries,
)

y, h, k = 2, 3, 7
exact = dc_sum(2 * y, h, k)
print(f"exact value of T_{2 * y}({h},{k}): {exact}")
print()

routes = [
    ("tangent-kernel series ", dc_sum_series_tan(y, h, k).result),
    ("Hurwitz-zeta window   ", dc_sum_hurwitz(y, h, k)),
    ("Clausen combination   ", dc_sum_clausen("even", y, h, k).result),
    ("polylog combination   ", dc_sum_polylog("even", y, h, k).result),
    ("quotient-series form  ", dc_sum_gseries(y, h, k).result),
]

for name, ball in routes:
    print(f"{name} {ball.decimal(35)}   encloses exact: {ball.encloses(exact)}")

# pairwise agreement is a stronger statement than each-close-to-float
balls = [b for _, b in routes]
assert all(a.agrees_with(b) for i, a in enumerate(balls) for b in balls[i + 1:])

# the odd orders have their own series pair
print()
odd = dc_sum(2 * y - 1, h, k)
print(f"exact value of T_{2 * y - 1}({h},{k}): {odd}")
for name, ball in [
    ("Clausen route ", dc_sum_clausen("odd", y, h, k).result),
    ("polylog route ", dc_sum_polylog("odd", y, h, k).result),
]:
    print(f"{name} {ball.decimal(35)}   encloses exact: {ball.encloses(odd)}")

# the periodic Euler function behind these sums has its own sine/cosine
# expansion; check it at a rational point against the exact polynomial value
from fractions import Fraction
from dcsums import euler_function, euler_function_series

pt = Fraction(2, 5)
ev = euler_function_series(3, pt)
print()
print(f"E_3 function at {pt}: exact {euler_function(3, pt)}, "
      f"series {ev.result.decimal(30)} after {ev.terms_used} terms")
assert ev.result.encloses(euler_function(3, pt))
