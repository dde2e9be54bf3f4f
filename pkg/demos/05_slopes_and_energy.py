"""The numeric shadow of the exact verdicts.

The functional p(sigma) = log ||sigma(w)||^2 - log ||sigma(v)||^2 grows
linearly in log|t|^2 along a one-parameter subgroup, with slope exactly
w_lam(w) - w_lam(v).  A two-point secant at t = 2^-20 and 2^-24 recovers
that integer to a few parts in 10^13 for unit coefficients, so the
floating-point layer can cross-check every exact verdict: semistable means
no direction of positive slope.
"""

import random

from stablepairs import (
    CoefficientVector,
    LatticeContext,
    TorusPoint,
    WeightSupport,
    f_energy,
    norm_sq,
    p_value,
    slope_along,
    weight,
)

free2 = LatticeContext.free(2)
v = WeightSupport([(0, 0)], free2)
w = WeightSupport([(1, 0), (-1, 0), (0, 1), (0, -1)], free2)
cv = CoefficientVector.units(v)
cw = CoefficientVector.units(w)

print("== norms and the p functional ==")
t = TorusPoint((2.0, 1.0))
print(f"  ||t(w)||^2 at t=(2,1): {norm_sq(t, cw):.6f}  (2^2 + 2^-2 + 1 + 1)")
print(f"  p(t) = {p_value(t, cv, cw):.6f}")

print()
print("== secant slopes against exact weight differences ==")
for lam in [(0, 1), (1, 0), (1, 1), (-2, 1)]:
    s = slope_along(lam, cv, cw)
    exact = weight(lam, w) - weight(lam, v)
    print(f"  lam={lam}: slope {s:+.9f}   exact {exact:+d}")

print()
print("== slopes never exceed zero on a semistable pair ==")
rng = random.Random(0)
worst = max(
    slope_along(lam, cv, cw)
    for lam in (
        (rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(500)
    )
    if any(lam)
)
print(f"  max slope over 500 random directions: {worst:.2e}")

print()
print("== the piecewise-linear energy is nonnegative for the same reason ==")
for theta in [(0.0, 1.0), (0.3, -0.7), (-2.0, -2.0)]:
    print(f"  f{theta} = {f_energy(theta, v, w):.6f}")
print("  (it vanishes exactly on directions where the two hulls touch)")
