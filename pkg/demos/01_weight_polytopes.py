"""Weights, supports, and their polytopes.

A weighted vector is summarized by its support: the set of lattice
characters acting on it with nonzero component.  Every decision this
library makes reduces to exact convex geometry on the hulls of those
supports.  This script walks the primitives: the pairing between a
one-parameter subgroup and a character, the weight of a direction against
a support (a minimum of pairings), and the support-function identity that
links the two worlds.
"""

from fractions import Fraction

from stablepairs import (
    LatticeContext,
    RationalPolytope,
    WeightSupport,
    hull_vertices,
    minkowski_combine,
    pair,
    standard_simplex,
    support_value,
    weight,
)

free2 = LatticeContext.free(2)

print("== pairing a direction with characters ==")
lam = (1, -1)
for a in [(1, 0), (0, 1), (2, 2)]:
    print(f"  <{lam}, {a}> = {pair(lam, a)}")

print()
print("== a weight support and its polytope ==")
A = WeightSupport([(1, 0), (0, 1), (-1, -1), (0, 0)], free2)
hull = RationalPolytope(A.weights)
print(f"  support: {A.weights}")
print(f"  hull vertices (the origin is interior): {hull.vertices}")
print(f"  redundant points never matter: "
      f"{hull_vertices([(0, 0), (1, 0), (Fraction(1, 2), 0)])}")

print()
print("== weight = min pairing = -support_value at the negated direction ==")
for lam in [(1, 0), (0, -1), (2, 3), (-1, -1)]:
    w = weight(lam, A)
    s = -support_value(hull, tuple(-c for c in lam))
    print(f"  lam={lam}:  min pairing {w}   -v_N(-lam) {s}")

print()
print("== Minkowski combinations track support functions exactly ==")
P = RationalPolytope([(0, 0)])
Q = RationalPolytope([(1, 0), (0, 1), (-1, -1)])
half = minkowski_combine(P, Q, Fraction(1, 2), Fraction(1, 2))
print(f"  (1/2)P + (1/2)Q vertices: {half.vertices}")
x = (3, -2)
lhs = half.support_value(x)
rhs = Fraction(1, 2) * P.support_value(x) + Fraction(1, 2) * Q.support_value(x)
print(f"  support at {x}: combined {lhs}, additive {rhs}")

print()
print("== sl mode: the diagonal is invisible ==")
sl3 = LatticeContext.sl(3)
simplex = standard_simplex(sl3, 1)
print(f"  identity polytope (ambient): {simplex.vertices}")
a = (2, 0, 1)
shifted = tuple(c + 5 for c in a)
print(f"  project {a}: {sl3.project_sl(a)}")
print(f"  project {shifted}: {sl3.project_sl(shifted)}  (same coset, same point)")
trace_zero = (1, 0, -1)
print(f"  pairing with trace-zero {trace_zero}: "
      f"{pair(trace_zero, a)} == {pair(trace_zero, shifted)}")
