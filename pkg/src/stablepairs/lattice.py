"""Character/cocharacter lattices, their pairing, and the two ambient modes.

Everything downstream works over one of two ambient setups:

* ``free`` mode: a rank-r torus with character lattice Z^r.  Weights and
  one-parameter subgroups are plain integer vectors of length r.
* ``sl`` mode: the diagonal torus of SL(N+1).  Weights live in Z^(N+1) as
  representatives of their class modulo the all-ones vector, and
  one-parameter subgroups are integer vectors with coordinate sum zero
  (trace zero, so they land in SL).

No canonical weight normalization is imposed in ``sl`` mode; all verdicts
are invariant under shifting a weight by a multiple of (1,...,1) as long as
every test direction is trace-zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class InputError(ValueError):
    """Malformed input: dimension mismatch, empty data, zero vector, etc."""


class ModeError(InputError):
    """Operation not available in this lattice mode."""


IntVec = tuple[int, ...]
RatVec = tuple[Fraction, ...]


def as_int_vec(coords: Iterable[int]) -> IntVec:
    vec = tuple(coords)
    for c in vec:
        if not isinstance(c, int) or isinstance(c, bool):
            raise InputError(f"integer coordinate expected, got {c!r}")
    return vec


def as_rat_vec(coords: Iterable) -> RatVec:
    return tuple(Fraction(c) for c in coords)


def dot(x: Sequence, y: Sequence):
    """Exact inner product; int when both sides are int."""
    if len(x) != len(y):
        raise InputError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return sum(a * b for a, b in zip(x, y))


@dataclass(frozen=True)
class LatticeContext:
    """Ambient data shared by weights and one-parameter subgroups.

    Construct through :meth:`free` or :meth:`sl`; ``ambient_dim`` is r in
    free mode and N+1 in sl mode.
    """

    mode: str
    ambient_dim: int

    def __post_init__(self):
        if self.mode not in ("free", "sl"):
            raise InputError(f"unknown lattice mode {self.mode!r}")
        if self.ambient_dim < 1:
            raise InputError("ambient dimension must be positive")

    @classmethod
    def free(cls, rank: int) -> "LatticeContext":
        if rank < 1:
            raise InputError("rank must be positive")
        return cls("free", rank)

    @classmethod
    def sl(cls, matrix_size: int) -> "LatticeContext":
        if matrix_size < 1:
            raise InputError("matrix size must be positive")
        return cls("sl", matrix_size)

    @property
    def rank(self) -> int:
        if self.mode != "free":
            raise ModeError("rank is a free-mode attribute")
        return self.ambient_dim

    @property
    def matrix_size(self) -> int:
        if self.mode != "sl":
            raise ModeError("matrix_size is an sl-mode attribute")
        return self.ambient_dim

    # -- validation ---------------------------------------------------

    def check_weight(self, a: Sequence[int]) -> IntVec:
        vec = as_int_vec(a)
        if len(vec) != self.ambient_dim:
            raise InputError(
                f"weight has length {len(vec)}, expected {self.ambient_dim}"
            )
        return vec

    def check_one_param(self, lam: Sequence[int], allow_zero: bool = False) -> IntVec:
        vec = as_int_vec(lam)
        if len(vec) != self.ambient_dim:
            raise InputError(
                f"one-parameter subgroup has length {len(vec)}, "
                f"expected {self.ambient_dim}"
            )
        if self.mode == "sl" and sum(vec) != 0:
            raise InputError(
                f"sl-mode one-parameter subgroup must have coordinate sum 0, "
                f"got {sum(vec)}"
            )
        if not allow_zero and not any(vec):
            raise InputError("one-parameter subgroup must be nonzero")
        return vec

    # -- operations ---------------------------------------------------

    def project_sl(self, a: Sequence) -> RatVec:
        """Project a point to the trace-zero hyperplane.

        Realizes the quotient by the diagonal line: returns
        a - (sum(a)/(N+1)) * (1,...,1), which has coordinate sum zero.  Two
        points differing by a multiple of (1,...,1) project to the same
        point; on integer weights this is the quotient map on cosets.
        """
        if self.mode != "sl":
            raise ModeError("project_sl requires an sl-mode context")
        vec = as_rat_vec(a)
        if len(vec) != self.ambient_dim:
            raise InputError(
                f"point has length {len(vec)}, expected {self.ambient_dim}"
            )
        shift = sum(vec) / self.ambient_dim
        return tuple(c - shift for c in vec)


def pair(lam: Sequence[int], a: Sequence[int]) -> int:
    """Standard pairing of a one-parameter subgroup with a character.

    Plain integer dot product.  In sl mode the value does not depend on the
    chosen diagonal representative of ``a`` provided ``lam`` has coordinate
    sum zero.
    """
    return dot(as_int_vec(lam), as_int_vec(a))


def standard_simplex(ctx: LatticeContext, k: int):
    """k times the weight polytope of the identity matrix, in ambient coords.

    The convex hull of {k*e_1, ..., k*e_(N+1)}.  After :meth:`project_sl`
    its image contains the origin in its relative interior.
    """
    from .polytope import RationalPolytope

    if ctx.mode != "sl":
        raise ModeError("the standard simplex lives in sl mode")
    if k <= 0:
        raise InputError("simplex scale must be a positive integer")
    n = ctx.ambient_dim
    verts = []
    for i in range(n):
        e = [0] * n
        e[i] = k
        verts.append(tuple(e))
    return RationalPolytope(verts)
