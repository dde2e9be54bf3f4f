"""From stability to a uniform margin.

Stability of a pair upgrades to a quantitative statement: there is an
integer m such that sliding the weight polytope of v a 1/m fraction of the
way toward the scaled identity polytope keeps it inside the polytope of w.
The minimal such m is an honest complexity measure of the instance, and
the same m makes the finite inequality

    m * (w_lam(v) - w_lam(w)) >= w_lam(v) - q * w_lam(I)

hold for every direction lam at once.
"""

from fractions import Fraction

from stablepairs import (
    LatticeContext,
    PairInstance,
    RationalPolytope,
    WeightSupport,
    check_tian0,
    includes,
    minimal_uniform_m,
    minkowski_combine,
)

free2 = LatticeContext.free(2)

p = PairInstance(
    WeightSupport([(0, 0)], free2),
    WeightSupport([(1, 0), (-1, 0), (0, 1), (0, -1)], free2),
    1,
    RationalPolytope([(1, 0), (0, 1), (-1, -1)]),
)

m = minimal_uniform_m(p)
print(f"minimal uniform m: {m}")
print()
print("the Minkowski inclusion is tight at that m:")
qI = p.identity_geom.scaled(p.q)
for k in (1, 2, 3, 8):
    comb = minkowski_combine(p.hull_v, qI, Fraction(k - 1, k), Fraction(1, k))
    inside = includes(p.hull_w, comb)
    marker = "  <-- threshold" if k == m else ""
    print(f"  m={k}: vertices {comb.vertices} inside N(w)? {inside}{marker}")

print()
print("spot-checking the inequality at m and at m-1:")
for lam in [(0, -1), (1, 1), (-1, 0), (2, -1)]:
    at_m = check_tian0(p, m, lam)
    at_m1 = check_tian0(p, m - 1, lam)
    print(f"  lam={lam}: holds at m={m}? {at_m};  at m={m - 1}? {at_m1}")
print("(the failing direction at m-1 is exactly the one pointing at the")
print(" identity vertex that the inclusion loses)")
