"""Driving a vector to a prescribed limit.

Acting on a weighted vector with a one-parameter subgroup and renormalizing
kills every component whose pairing exceeds the minimum: the surviving
support is the argmin set.  Going backwards is the interesting direction:
given a target subset of the support, is there a subgroup whose limit has
exactly that support?  The finder answers with a primitive integral
direction or a certified "unreachable".
"""

from stablepairs import (
    DegenerationProblem,
    LatticeContext,
    WeightSupport,
    find_degeneration,
    limit_support,
)
from stablepairs.lattice import dot

free2 = LatticeContext.free(2)

weights = [(1, 0), (0, 1), (0, 0)]
A = WeightSupport(weights, free2)

print(f"support: {weights}")
print()
print("forward: limits along a few directions")
for lam in [(1, 1), (1, -1), (-2, -1)]:
    print(f"  lam={lam}: surviving support {limit_support(A, lam)}")

print()
print("backward: choose what should survive")
for keep in ([2], [0, 1], [0, 1, 2]):
    prob = DegenerationProblem(weights, keep, free2)
    lam = find_degeneration(prob)
    target = [weights[i] for i in keep]
    if lam is None:
        print(f"  keep {target}: unreachable")
    else:
        pairings = [dot(lam, a) for a in weights]
        print(f"  keep {target}: lam={lam}, pairings {pairings}")

print()
print("an unreachable pattern, and why")
bad = [(1, 0), (-1, 0), (0, 0)]
prob = DegenerationProblem(bad, [2], free2)
print(f"  support {bad}, keep the origin alone: {find_degeneration(prob)}")
print("  any direction pairs with (1,0) and (-1,0) to opposite signs, so one")
print("  of them always ties or beats the origin at the minimum")

print()
print("the kept pairings need not vanish, only tie at the minimum")
ramp = [(1, 0), (2, 0)]
prob = DegenerationProblem(ramp, [0], free2)
lam = find_degeneration(prob)
print(f"  support {ramp}, keep {[ramp[0]]}: lam={lam}, "
      f"pairings {[dot(lam, a) for a in ramp]}")
