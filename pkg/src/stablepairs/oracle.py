"""Brute-force reference decisions by exhaustive direction enumeration.

Test-only machinery: every decision the package makes by exact geometry is
re-derivable here by trying every integer direction in a box.  In ambient
dimension <= 3 the box radius from :func:`sufficient_bound` is large enough
that the equality/strictness loci of the piecewise-linear weight functions
all meet the enumerated grid, so agreement with the geometric path is a
real equivalence, not a spot check.  Above dimension 3 the bound is
heuristic and the guarantee flag says so.

Enumeration is vectorized with numpy; the arithmetic stays integral (free
mode identity polytopes are cleared of denominators first), so there is no
rounding anywhere despite the array backend.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .lattice import InputError, IntVec
from .stability import PairInstance

_INT64_GUARD = 1 << 60


@dataclass(frozen=True)
class OracleBox:
    bound: int
    dim: int
    exhaustive_guarantee: bool

    def __post_init__(self):
        if self.bound < 1:
            raise InputError("oracle box bound must be at least 1")


def sufficient_bound(p: PairInstance) -> int:
    """Box radius d*H with H a Hadamard bound on (d-1)x(d-1) minors of
    pairwise differences across A(v), A(w) and the scaled identity vertices.

    Extreme rays of the refined normal fan solve (d-1)-sized integer minor
    systems over those differences, so every cone of the refinement meets
    the box of this radius in an integer point.
    """
    d = p.context.ambient_dim
    if d == 1:
        return 1
    points = [tuple(Fraction(c) for c in a) for a in p.Av.weights]
    points += [tuple(Fraction(c) for c in a) for a in p.Aw.weights]
    points += [tuple(p.q * c for c in v) for v in p.identity.vertices]
    spread = Fraction(0)
    for i in range(d):
        coords = [pt[i] for pt in points]
        spread = max(spread, max(coords) - min(coords))
    diff = math.ceil(spread)
    if diff == 0:
        return d
    # H = ceil( sqrt( (d-1)^(d-1) * diff^(2(d-1)) ) ), exact integer sqrt.
    x = (d - 1) ** (d - 1) * diff ** (2 * (d - 1))
    root = math.isqrt(x)
    if root * root < x:
        root += 1
    return d * root


def box_for(p: PairInstance) -> OracleBox:
    d = p.context.ambient_dim
    return OracleBox(sufficient_bound(p), d, d <= 3)


@functools.lru_cache(maxsize=32)
def _grid(bound: int, dim: int, mode: str) -> np.ndarray:
    if mode == "sl":
        # The last coordinate is forced by trace zero, so enumerate prefixes
        # only; prefix order is full lexicographic order here.
        prefix = np.array(
            list(itertools.product(range(-bound, bound + 1), repeat=dim - 1)),
            dtype=np.int64,
        ).reshape(-1, dim - 1)
        last = -prefix.sum(axis=1)
        grid = np.concatenate([prefix, last[:, None]], axis=1)
        grid = grid[np.abs(last) <= bound]
    else:
        grid = np.array(
            list(itertools.product(range(-bound, bound + 1), repeat=dim)),
            dtype=np.int64,
        )
    grid = grid[np.any(grid != 0, axis=1)]
    grid.setflags(write=False)
    return grid


def enumerate_directions(box: OracleBox, context) -> np.ndarray:
    """All nonzero integer directions in the box, lexicographic order,
    restricted to trace zero in sl mode.  The returned array is cached and
    read-only."""
    if box.dim != context.ambient_dim:
        raise InputError("oracle box dimension mismatch")
    if context.mode == "sl" and box.dim == 1:
        return np.empty((0, 1), dtype=np.int64)
    return _grid(box.bound, box.dim, context.mode)


def _int_matrix(points) -> tuple[np.ndarray, int]:
    """Stack rational points into an integer matrix plus common denominator."""
    fracs = [[Fraction(c) for c in pt] for pt in points]
    den = 1
    for row in fracs:
        for c in row:
            den = den * c.denominator // math.gcd(den, c.denominator)
    mat = np.array(
        [[int(c * den) for c in row] for row in fracs], dtype=np.int64
    )
    return mat, den


def _weight_table(p: PairInstance, grid: np.ndarray):
    """Minimum pairings over A(v), A(w) and the identity vertex set for every
    grid direction.  Identity minima come back scaled by the returned
    denominator so everything stays integral."""
    av = np.array(p.Av.weights, dtype=np.int64)
    aw = np.array(p.Aw.weights, dtype=np.int64)
    ident, den = _int_matrix(p.identity.vertices)
    if grid.size and max(
        np.abs(grid).max() * max(np.abs(av).max(), np.abs(aw).max(), np.abs(ident).max(), 1)
        * grid.shape[1], den
    ) > _INT64_GUARD:
        raise InputError("oracle inputs too large for int64 enumeration")
    wv = (grid @ av.T).min(axis=1)
    ww = (grid @ aw.T).min(axis=1)
    wi_scaled = (grid @ ident.T).min(axis=1)
    return wv, ww, wi_scaled, den


def _first(grid: np.ndarray, mask: np.ndarray) -> IntVec | None:
    idx = np.flatnonzero(mask)
    if idx.size == 0:
        return None
    return tuple(int(c) for c in grid[idx[0]])


def brute_semistable(p: PairInstance, box: OracleBox) -> tuple[bool, IntVec | None]:
    """Literal quantifier check of w_lam(w) <= w_lam(v) over the box."""
    grid = enumerate_directions(box, p.context)
    if grid.shape[0] == 0:
        return True, None
    wv, ww, _, _ = _weight_table(p, grid)
    witness = _first(grid, ww > wv)
    return witness is None, witness


def brute_stable(p: PairInstance, box: OracleBox) -> tuple[bool, IntVec | None]:
    grid = enumerate_directions(box, p.context)
    if grid.shape[0] == 0:
        return True, None
    wv, ww, wi_scaled, den = _weight_table(p, grid)
    semi_witness = _first(grid, ww > wv)
    if semi_witness is not None:
        return False, semi_witness
    violating = (ww == wv) & (p.q * wi_scaled < wv * den)
    witness = _first(grid, violating)
    return witness is None, witness


def brute_min_m(p: PairInstance, box: OracleBox, m_cap: int) -> int | None:
    """Least m <= m_cap making the uniform inequality hold over the whole
    box, or None if no such m exists."""
    if m_cap < 1:
        raise InputError("m_cap must be at least 1")
    grid = enumerate_directions(box, p.context)
    if grid.shape[0] == 0:
        return 1
    wv, ww, wi_scaled, den = _weight_table(p, grid)
    gap = (wv - ww) * den              # den * (w_v - w_w)
    need = wv * den - p.q * wi_scaled  # den * (w_v - q w_I), always >= 0
    if np.any(gap < 0):
        return None
    flat = gap == 0
    if np.any(need[flat] > 0):
        return None
    pos = gap > 0
    if not np.any(pos):
        return 1
    m = int(np.max((need[pos] + gap[pos] - 1) // gap[pos]))
    m = max(m, 1)
    return m if m <= m_cap else None
