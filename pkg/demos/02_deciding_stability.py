"""Deciding semistability and stability, with certificates.

Four small instances cover the whole verdict landscape:

  * nested sl segments            -> stable
  * origin inside a diamond       -> stable
  * a segment against itself      -> semistable but not stable
  * a point that must escape      -> not even semistable

Whenever a decision is negative the library hands back an integral
direction, and the point of this script is that you can re-check every
certificate with nothing but min-of-dot-products arithmetic.
"""

from stablepairs import (
    FrameFamily,
    LatticeContext,
    PairInstance,
    RationalPolytope,
    WeightSupport,
    is_semistable,
    is_stable,
    verdict,
    weight,
)

free2 = LatticeContext.free(2)
sl2 = LatticeContext.sl(2)
box = RationalPolytope([(1, 1), (1, -1), (-1, 1), (-1, -1)])

nested = PairInstance(
    WeightSupport([(1, 0), (0, 1)], sl2),
    WeightSupport([(2, 0), (0, 2)], sl2),
    1,
)
diamond = PairInstance(
    WeightSupport([(0, 0)], free2),
    WeightSupport([(1, 0), (-1, 0), (0, 1), (0, -1)], free2),
    1,
    RationalPolytope([(1, 0), (0, 1), (-1, -1)]),
)
segment = WeightSupport([(-1, 0), (1, 0)], free2)
self_pair = PairInstance(segment, segment, 1, box)
escaper = PairInstance(
    WeightSupport([(1, 0)], free2),
    WeightSupport([(0, 0)], free2),
    1,
    box,
)

for name, p in [("nested sl segments", nested), ("origin vs diamond", diamond),
                ("segment vs itself", self_pair), ("escaping point", escaper)]:
    semi, semi_wit = is_semistable(p)
    stab, stab_wit = is_stable(p)
    print(f"{name}: semistable={semi} stable={stab}")
    if not semi:
        lam = semi_wit
        print(f"  witness {lam}: w_lam(w) = {weight(lam, p.Aw)} "
              f"> {weight(lam, p.Av)} = w_lam(v)")
    elif not stab:
        lam = stab_wit
        print(f"  witness {lam}: w_lam(v) = w_lam(w) = {weight(lam, p.Av)} "
              f"while q*w_lam(I) = {p.q * p.identity_weight(lam)}")

print()
print("== verdicts conjoin over a frame family ==")
family = FrameFamily([diamond, self_pair])
v = verdict(family)
print(f"frames: [origin vs diamond, segment vs itself] -> {v}")
print("the first frame alone is stable; the family verdict pins frame"
      f" {v.frame_index} as the obstruction")
