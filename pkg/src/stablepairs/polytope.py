"""Exact rational convex polytopes given by point sets (V-representation).

Membership, inclusion, and support values are all decided from vertex sets
alone, either by exact maximization over vertices or by rational LP
feasibility.  No facet enumeration anywhere: the dimensions in play are
small and weight polytopes of single vectors are routinely degenerate
(points, segments, lower-dimensional hulls), so every operation here treats
those as first-class citizens.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from . import lp
from .lattice import InputError, LatticeContext, ModeError, RatVec, as_rat_vec, dot


def _check_common_dim(points: Sequence[RatVec]) -> int:
    if not points:
        raise InputError("empty point set")
    d = len(points[0])
    for p in points:
        if len(p) != d:
            raise InputError("points of mixed dimension")
    if d == 0:
        raise InputError("zero-dimensional ambient space")
    return d


def _in_hull(points: Sequence[RatVec], y: RatVec) -> bool:
    """Exact test: is y a convex combination of the given points?"""
    if len(points) == 1:
        return points[0] == y
    k = len(points)
    d = len(y)
    cons = []
    for i in range(k):
        row = [Fraction(0)] * k
        row[i] = Fraction(1)
        cons.append((row, lp.GEQ, 0))
    cons.append(([Fraction(1)] * k, lp.EQ, 1))
    for c in range(d):
        cons.append(([p[c] for p in points], lp.EQ, y[c]))
    result = lp.solve(lp.linear_program(k, cons))
    return result.status == lp.OPTIMAL


def hull_vertices(points: Iterable[Sequence]) -> tuple[RatVec, ...]:
    """Extreme points of the convex hull, in lexicographic order.

    Duplicates are removed first; a point is a vertex exactly when it is not
    a convex combination of the remaining points (decided by exact LP).
    """
    pts = [as_rat_vec(p) for p in points]
    _check_common_dim(pts)
    uniq = sorted(set(pts))
    if len(uniq) == 1:
        return (uniq[0],)
    verts = []
    for i, p in enumerate(uniq):
        others = uniq[:i] + uniq[i + 1:]
        if not _in_hull(others, p):
            verts.append(p)
    return tuple(verts)


class RationalPolytope:
    """Convex hull of finitely many rational points.

    The vertex sublist is computed once at construction and cached; instances
    are immutable and safe to share between threads.
    """

    __slots__ = ("points", "vertices", "dim")

    def __init__(self, points: Iterable[Sequence]):
        pts = tuple(as_rat_vec(p) for p in points)
        self.dim = _check_common_dim(pts)
        self.points = pts
        self.vertices = hull_vertices(pts)

    def __repr__(self):
        return f"RationalPolytope(vertices={[tuple(map(str, v)) for v in self.vertices]})"

    def __eq__(self, other):
        return isinstance(other, RationalPolytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def support_value(self, x: Sequence) -> Fraction:
        """max over the polytope of <x, y>; attained at a vertex."""
        direction = as_rat_vec(x)
        if len(direction) != self.dim:
            raise InputError(
                f"direction has dimension {len(direction)}, polytope has {self.dim}"
            )
        return max(dot(direction, v) for v in self.vertices)

    def min_pairing(self, x: Sequence) -> Fraction:
        """min over the polytope of <x, y>; equals -support_value at -x."""
        direction = as_rat_vec(x)
        if len(direction) != self.dim:
            raise InputError(
                f"direction has dimension {len(direction)}, polytope has {self.dim}"
            )
        return min(dot(direction, v) for v in self.vertices)

    def contains_point(self, y: Sequence) -> bool:
        point = as_rat_vec(y)
        if len(point) != self.dim:
            raise InputError(
                f"point has dimension {len(point)}, polytope has {self.dim}"
            )
        return _in_hull(self.vertices, point)

    def scaled(self, s) -> "RationalPolytope":
        factor = Fraction(s)
        if factor < 0:
            raise InputError("scaling factor must be nonnegative")
        return RationalPolytope([tuple(factor * c for c in v) for v in self.vertices])


def support_value(P: RationalPolytope, x: Sequence) -> Fraction:
    return P.support_value(x)


def contains_point(P: RationalPolytope, y: Sequence) -> bool:
    return P.contains_point(y)


def minkowski_combine(P: RationalPolytope, Q: RationalPolytope,
                      s, t) -> RationalPolytope:
    """Hull of {s*p + t*q} over vertices p of P and q of Q, for s, t >= 0.

    Its support value at every direction x is exactly
    s*support_value(P, x) + t*support_value(Q, x).
    """
    sf, tf = Fraction(s), Fraction(t)
    if sf < 0 or tf < 0:
        raise InputError("Minkowski coefficients must be nonnegative")
    if P.dim != Q.dim:
        raise InputError("polytopes of different dimension")
    combos = [
        tuple(sf * a + tf * b for a, b in zip(p, q))
        for p in P.vertices
        for q in Q.vertices
    ]
    return RationalPolytope(combos)


def first_outside_vertex(P: RationalPolytope, Q: RationalPolytope) -> RatVec | None:
    """First vertex of Q (lexicographic order) not contained in P, if any."""
    if P.dim != Q.dim:
        raise InputError("polytopes of different dimension")
    for v in Q.vertices:
        if not P.contains_point(v):
            return v
    return None


def includes(P: RationalPolytope, Q: RationalPolytope) -> bool:
    """True iff Q is a subset of P (every vertex of Q lies in P)."""
    return first_outside_vertex(P, Q) is None


def simplex_contains(a: Sequence[int], k: int, ctx: LatticeContext) -> bool:
    """Does the diagonal coset of weight ``a`` meet k times the standard simplex?

    Closed form: with s = (k - sum(a))/(N+1), the shifted representative
    a + s*(1,...,1) has coordinate sum k, and lies on the scaled simplex iff
    every shifted coordinate is nonnegative.
    """
    if ctx.mode != "sl":
        raise ModeError("simplex_contains is an sl-mode test")
    if k <= 0:
        raise InputError("simplex scale must be a positive integer")
    vec = ctx.check_weight(a)
    s = Fraction(k - sum(vec), ctx.ambient_dim)
    return all(c + s >= 0 for c in vec)
