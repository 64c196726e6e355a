"""
Certified-error arithmetic with PrecReal and Angle
==================================================

A PrecReal is a midpoint plus an absolute error bound; every operation
keeps the bound honest, so `x.decimal()` never prints digits it cannot
back up.
"""

from fractions import Fraction

from dcsums import Angle, PrecReal, pi_ball, clausen, dirichlet_lambda, hurwitz_zeta

# exact dyadic inputs stay exact
x = PrecReal.from_exact(Fraction(3, 8), 128)
print("3/8 ->", x.decimal(), " exact?", x.is_exact)

# 1/3 is not a dyadic number, so the ball carries a genuine bound
t = PrecReal.from_exact(Fraction(1, 3), 128)
print("1/3 ->", t.decimal(40), " exact?", t.is_exact)

# arithmetic composes the bounds; the enclosure survives the round trip
y = (x + t) * (x - t)
print("(3/8+1/3)(3/8-1/3) =", y.decimal(40))
assert y.encloses(Fraction(3, 8) ** 2 - Fraction(1, 3) ** 2)

# pi itself is a ball, and asking for more precision tightens it
for prec in (64, 128, 256):
    p = pi_ball(prec)
    print(f"pi at {prec:3d} bits: bound = {float(p.abs_error):.3e}")

# Angle stores rational multiples of pi exactly, which is what lets the
# trig kernels detect poles and exact zeros instead of guessing from
# floating-point nearness
theta = Angle(2, 6)        # normalises to 1/3
print()
print("Angle(2, 6) ->", theta, " tan pole?", theta.tan_is_pole(),
      " sin zero?", theta.sin_is_zero())

# the order-2 Clausen value at pi/3 is the maximum of the curve
g = clausen(2, Angle(1, 3), precision=192)
print("Cl_2(pi/3) =", g.decimal(45))

# two classical series values with certified bounds
print("lambda(2) =", dirichlet_lambda(2, precision=192).decimal(45))
print("zeta(2, 1/4) =", hurwitz_zeta(2, Fraction(1, 4), precision=192).decimal(45))

# doubling the working precision never widens a reported bound
lo = dirichlet_lambda(3, precision=128)
hi = dirichlet_lambda(3, precision=256)
assert hi.abs_error <= lo.abs_error
assert lo.agrees_with(hi)
print()
print("lambda(3) bound at 128 bits:", f"{float(lo.abs_error):.3e}",
      " at 256 bits:", f"{float(hi.abs_error):.3e}")
