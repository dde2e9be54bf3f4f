"""Floating-point realization of the analytic layer.

Squared norms of torus translates, the log-ratio functional p, slope
extraction along one-parameter subgroups, and the piecewise-linear energy
difference of support maxima.

Everything here works with moduli only: phases of torus entries and of
coefficients never enter any of the norms below, so inputs carry positive
magnitudes.  Norm evaluations factor out the dominant exponent and sum in
log-domain; at the slope sample points (2^-20, 2^-24) a naive product would
underflow double precision long before the weights get interesting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .lattice import InputError, IntVec
from .stability import WeightSupport

_LOG2 = math.log(2.0)
_SLOPE_LOG_T1 = -20.0 * _LOG2
_SLOPE_LOG_T2 = -24.0 * _LOG2


@dataclass(frozen=True)
class CoefficientVector:
    """A support together with positive coefficient magnitudes, one per weight.

    ``magnitudes`` is aligned with ``support.weights``.  Weights listed more
    than once by a caller combine by root-sum-square, since only the summed
    squared magnitude per weight enters any norm.
    """

    support: WeightSupport
    magnitudes: tuple[float, ...]

    def __init__(self, support: WeightSupport, magnitudes: Sequence[float]):
        mags = tuple(float(m) for m in magnitudes)
        if len(mags) != len(support.weights):
            raise InputError(
                f"{len(mags)} magnitudes for {len(support.weights)} weights"
            )
        for m in mags:
            if not m > 0 or math.isinf(m):
                raise InputError("coefficient magnitudes must be positive and finite")
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "magnitudes", mags)

    @classmethod
    def units(cls, support: WeightSupport) -> "CoefficientVector":
        """All magnitudes 1; slopes do not depend on this choice."""
        return cls(support, (1.0,) * len(support.weights))

    @classmethod
    def from_pairs(cls, support_weights: Iterable[tuple[IntVec, float]],
                   context) -> "CoefficientVector":
        squares: dict[IntVec, float] = {}
        for a, m in support_weights:
            key = context.check_weight(a)
            m = float(m)
            if not m > 0:
                raise InputError("coefficient magnitudes must be positive")
            squares[key] = squares.get(key, 0.0) + m * m
        support = WeightSupport(squares.keys(), context)
        return cls(support, [math.sqrt(squares[a]) for a in support.weights])


@dataclass(frozen=True)
class TorusPoint:
    """Moduli of a diagonal torus element, all positive."""

    moduli: tuple[float, ...]

    def __init__(self, moduli: Sequence[float]):
        mods = tuple(float(t) for t in moduli)
        for t in mods:
            if not t > 0:
                raise InputError("torus moduli must be positive")
        object.__setattr__(self, "moduli", mods)


def _log_norm_sq(log_moduli: Sequence[float], v: CoefficientVector) -> float:
    """log of sum_a |c_a|^2 * prod_i |t_i|^(2 a_i), dominant term factored."""
    terms = []
    for a, mag in zip(v.support.weights, v.magnitudes):
        e = 2.0 * math.log(mag)
        for ai, li in zip(a, log_moduli):
            if ai:
                e += 2.0 * ai * li
        terms.append(e)
    top = max(terms)
    return top + math.log(sum(math.exp(t - top) for t in terms))


def _require_matching(v: CoefficientVector, w: CoefficientVector):
    if v.support.context != w.support.context:
        raise InputError("coefficient vectors live in different contexts")


def norm_sq(t: TorusPoint, v: CoefficientVector) -> float:
    """Squared norm of the torus translate of v."""
    if len(t.moduli) != v.support.context.ambient_dim:
        raise InputError("torus point dimension mismatch")
    return math.exp(_log_norm_sq([math.log(m) for m in t.moduli], v))


def p_value(t: TorusPoint, v: CoefficientVector, w: CoefficientVector) -> float:
    """log ||t(w)||^2 - log ||t(v)||^2, computed stably in log-domain."""
    _require_matching(v, w)
    if len(t.moduli) != v.support.context.ambient_dim:
        raise InputError("torus point dimension mismatch")
    logs = [math.log(m) for m in t.moduli]
    return _log_norm_sq(logs, w) - _log_norm_sq(logs, v)


def slope_along(lam: Sequence[int], v: CoefficientVector,
                w: CoefficientVector) -> float:
    """Coefficient of log|t|^2 in p along the subgroup, by secant.

    Sampled at t = 2^-20 and 2^-24; for tame coefficient magnitudes this
    lands within 1e-6 of the exact integer w_lam(w) - w_lam(v).
    """
    _require_matching(v, w)
    vec = v.support.context.check_one_param(lam)

    def p_at(log_t: float) -> float:
        logs = [c * log_t for c in vec]
        return _log_norm_sq(logs, w) - _log_norm_sq(logs, v)

    p1 = p_at(_SLOPE_LOG_T1)
    p2 = p_at(_SLOPE_LOG_T2)
    return (p2 - p1) / (2.0 * (_SLOPE_LOG_T2 - _SLOPE_LOG_T1))


def f_energy(theta: Sequence[float], Av: WeightSupport, Aw: WeightSupport) -> float:
    """Piecewise-linear energy: max of <a', theta> over A(w) minus the same
    max over A(v), evaluated on geometry coordinates.

    Nonnegative everywhere exactly when the pair is semistable frame-wise;
    positively homogeneous of degree one by construction.
    """
    if Av.context != Aw.context:
        raise InputError("supports live in different contexts")
    th = [float(x) for x in theta]
    if len(th) != Av.context.ambient_dim:
        raise InputError("direction dimension mismatch")

    def top(support: WeightSupport) -> float:
        best = -math.inf
        for point in support.geometry_points():
            val = sum(float(c) * x for c, x in zip(point, th))
            if val > best:
                best = val
        return best

    return top(Aw) - top(Av)
