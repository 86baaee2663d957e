"""Lorenz curves, the non-normalized dominance order and transition analysis.

The difference ``D = I_Y - I_Z`` of two integral curves is piecewise quadratic
on the merged knot set, so its extrema are found exactly: at knots or at the
single interior critical point of each piece.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    ConstructionFailed,
    DomainMismatch,
    IdenticalFunctions,
    NotDominated,
    NotStrictlyDecreasing,
    ZeroTotal,
)
from .measures import h_measure
from .numerics import bisect_root
from .profile import (
    EPS,
    PiecewiseLinear,
    envelope_knots,
    merged_abscissae,
    restrict,
)

__all__ = [
    "ClassificationResult",
    "DominanceVerdict",
    "EverywhereComparison",
    "PrefixStructure",
    "Relation",
    "TransitionReport",
    "classify",
    "compare_everywhere",
    "construct_intermediate",
    "dominates_lorenz",
    "dominates_nn",
    "gap_extrema",
    "lorenz_normalized",
    "lorenz_points",
    "prefix_structure",
    "transitions",
]


class Relation(str, Enum):
    EQUAL = "Equal"
    LESS_NEQ = "LessNeq"
    GREATER_NEQ = "GreaterNeq"
    LESS = "Less"
    GREATER = "Greater"
    INCOMPARABLE = "Incomparable"
    UNDETERMINED = "Undetermined"

    def flipped(self) -> Relation:
        return {
            Relation.LESS_NEQ: Relation.GREATER_NEQ,
            Relation.GREATER_NEQ: Relation.LESS_NEQ,
            Relation.LESS: Relation.GREATER,
            Relation.GREATER: Relation.LESS,
        }.get(self, self)


@dataclass(frozen=True)
class DominanceVerdict:
    relation: Relation
    witness_points: tuple[tuple[float, float, float], ...]
    min_gap: float
    max_gap: float


def _same_domain(Z: PiecewiseLinear, Y: PiecewiseLinear) -> None:
    if Z.T != Y.T:
        raise DomainMismatch(f"domains differ: T={Z.T!r} vs T={Y.T!r}")


def gap_extrema(Z: PiecewiseLinear, Y: PiecewiseLinear) -> list[tuple[float, float]]:
    """Candidate extrema ``(x, I_Y(x) - I_Z(x))``: all merged knots plus interior critical points."""
    _same_domain(Z, Y)
    IZ, IY = Z.integral, Y.integral
    xs = merged_abscissae(Z, Y)
    d = (Y.values(xs) - Z.values(xs)).tolist()
    out: list[tuple[float, float]] = []
    for j, x in enumerate(xs):
        D = IY.eval(x) - IZ.eval(x)
        out.append((x, D))
        if j + 1 < len(xs):
            L = xs[j + 1] - x
            e = (d[j + 1] - d[j]) / L
            if e != 0.0:
                u = -d[j] / e
                if 0 < u < L:
                    out.append((x + u, D - d[j] * d[j] / (2 * e)))
    return out


def _tol_integral(Z: PiecewiseLinear, Y: PiecewiseLinear, eps: float) -> float:
    return eps * max(1.0, abs(Z.integral.total), abs(Y.integral.total))


def _tol_values(Z: PiecewiseLinear, Y: PiecewiseLinear, eps: float) -> float:
    return eps * max(1.0, Z.ys[0], Y.ys[0])


def dominates_nn(Z: PiecewiseLinear, Y: PiecewiseLinear, eps: float = EPS) -> DominanceVerdict:
    """Verdict on ``Z ≺ Y`` (``I_Z <= I_Y`` on ``[0, T]``)."""
    cands = gap_extrema(Z, Y)
    IZ, IY = Z.integral, Y.integral
    tol = _tol_integral(Z, Y, eps)
    lo_x, lo = min(cands, key=lambda c: c[1])
    hi_x, hi = max(cands, key=lambda c: c[1])

    def wit(x: float) -> tuple[float, float, float]:
        return (x, IZ.eval(x), IY.eval(x))

    pos, neg = hi > tol, lo < -tol
    if pos and neg:
        rel = Relation.INCOMPARABLE
        w = (wit(lo_x), wit(hi_x))
    elif pos:
        near = [x for x, D in cands if -tol <= D < 0]
        rel = Relation.UNDETERMINED if near else Relation.LESS_NEQ
        w = (wit(hi_x),) + tuple(wit(x) for x in near[:1])
    elif neg:
        near = [x for x, D in cands if 0 < D <= tol]
        rel = Relation.UNDETERMINED if near else Relation.GREATER_NEQ
        w = (wit(lo_x),) + tuple(wit(x) for x in near[:1])
    else:
        equal = Z.same_as(Y, _tol_values(Z, Y, eps))
        rel = Relation.EQUAL if equal else Relation.UNDETERMINED
        w = (wit(hi_x if abs(hi) >= abs(lo) else lo_x),)
    return DominanceVerdict(rel, w, float(lo), float(hi))


def lorenz_normalized(Z: PiecewiseLinear) -> PiecewiseLinear:
    """Function on ``[0, 1]`` whose integral curve is the Lorenz curve of ``Z``."""
    total = Z.integral.total
    if total <= 0:
        raise ZeroTotal("Lorenz curve needs a positive total")
    T = Z.T
    xs = [x / T for x in Z.xs]
    xs[-1] = 1.0
    return PiecewiseLinear._from_computed(xs, [y * T / total for y in Z.ys])


def lorenz_points(Z: PiecewiseLinear, n: int) -> list[tuple[float, float]]:
    if n < 2:
        raise ValueError("need n >= 2")
    total = Z.integral.total
    if total <= 0:
        raise ZeroTotal("Lorenz curve needs a positive total")
    pts = [(k / n, Z.integral.eval(Z.T * k / n) / total) for k in range(n + 1)]
    pts[-1] = (1.0, 1.0)
    return pts


def dominates_lorenz(Z: PiecewiseLinear, Y: PiecewiseLinear, eps: float = EPS) -> DominanceVerdict:
    return dominates_nn(lorenz_normalized(Z), lorenz_normalized(Y), eps)


# zero-set structure of Z - Y ---------------------------------------------------


def _zero_components(Z: PiecewiseLinear, Y: PiecewiseLinear, tol: float) -> list[tuple[float, float]]:
    xs = merged_abscissae(Z, Y)
    d = (Z.values(xs) - Y.values(xs)).tolist()
    zero = [abs(v) <= tol for v in d]
    raw: list[tuple[float, float]] = []
    for j, x in enumerate(xs):
        if zero[j]:
            raw.append((x, x))
        if j + 1 < len(xs):
            if zero[j] and zero[j + 1]:
                raw.append((x, xs[j + 1]))
            elif not zero[j] and not zero[j + 1] and d[j] * d[j + 1] < 0:
                xc = x + (xs[j + 1] - x) * d[j] / (d[j] - d[j + 1])
                raw.append((xc, xc))
    raw.sort()
    merged: list[tuple[float, float]] = []
    for lo, hi in raw:
        if merged and lo <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
        else:
            merged.append((lo, hi))
    return merged


def _sign_between(Z: PiecewiseLinear, Y: PiecewiseLinear, lo: float, hi: float) -> str:
    m = (lo + hi) / 2
    diff = Z(m) - Y(m)
    return "below" if diff < 0 else "above"


@dataclass(frozen=True)
class PrefixStructure:
    """How ``Z`` and ``Y`` start out.

    ``start`` is the relation at rank 0 (``below`` means ``Z < Y``); ``a`` the
    end of the initial equality interval (0 unless ``start == "equal"``);
    ``after`` the strict relation right after ``a``; ``b`` the next point of
    equality (``T`` if none) and ``b_closed`` whether the strict relation still
    holds at ``b``.
    """

    start: str
    a: float
    after: str
    b: float
    b_closed: bool


def prefix_structure(Z: PiecewiseLinear, Y: PiecewiseLinear, eps: float = EPS) -> PrefixStructure:
    _same_domain(Z, Y)
    T = Z.T
    comps = _zero_components(Z, Y, _tol_values(Z, Y, eps))
    if comps and comps[0][0] == 0.0:
        a = comps[0][1]
        if a >= T:
            return PrefixStructure("equal", T, "none", T, False)
        rest = comps[1:]
        b = rest[0][0] if rest else T
        return PrefixStructure("equal", a, _sign_between(Z, Y, a, b), b, not rest)
    b = comps[0][0] if comps else T
    sign = "below" if Z.ys[0] < Y.ys[0] else "above"
    return PrefixStructure(sign, 0.0, sign, b, not comps)


@dataclass(frozen=True)
class TransitionReport:
    transitions: tuple[tuple[float, str], ...]
    x1: float
    fnt: bool = True


def transitions(Z: PiecewiseLinear, Y: PiecewiseLinear, eps: float = EPS) -> TransitionReport:
    _same_domain(Z, Y)
    T = Z.T
    comps = _zero_components(Z, Y, _tol_values(Z, Y, eps))
    if comps == [(0.0, T)]:
        raise IdenticalFunctions("Z and Y coincide on [0, T]")
    found: list[tuple[float, str]] = []
    for k, (lo, hi) in enumerate(comps):
        if lo == hi:
            if lo == 0.0:
                found.append((0.0, "iv"))
            elif lo == T:
                if k == 0:
                    found.append((T, "v"))
            else:
                found.append((lo, "i"))
        else:
            if lo > 0.0:
                found.append((lo, "ii"))
            if hi < T:
                found.append((hi, "iii"))
    found.sort()
    x1 = found[0][0] if found else T
    return TransitionReport(tuple(found), x1, True)


@dataclass(frozen=True)
class ClassificationResult:
    case: str
    a: float | None
    b: float
    b_closed: bool


def classify(Z: PiecewiseLinear, Y: PiecewiseLinear, eps: float = EPS) -> ClassificationResult:
    verdict = dominates_nn(Z, Y, eps)
    if verdict.relation is not Relation.LESS_NEQ:
        raise NotDominated(f"expected Z ≺≠ Y, got {verdict.relation.value}")
    ps = prefix_structure(Z, Y, eps)
    if ps.start == "below":
        return ClassificationResult("BelowFromStart", None, ps.b, ps.b_closed)
    if ps.start == "equal" and ps.after == "below":
        return ClassificationResult("EqualThenBelow", ps.a, ps.b, ps.b_closed)
    return ClassificationResult("NotApplicable", None, ps.b, ps.b_closed)


# impact concentration ------------------------------------------------------------


def _truncate(Y: PiecewiseLinear, s: float, t: float) -> PiecewiseLinear:
    """``Y`` on ``[0, s]``, then ``min(Y, L)`` with ``L`` falling from ``Y(s)`` to 0 at ``t``."""
    T = Y.T
    ys_ = Y(s)
    head_x = [x for x in Y.xs if x < s]
    head_y = [y for x, y in zip(Y.xs, Y.ys) if x < s]
    tx, ty = restrict(Y, s, T)
    if t < T:
        lx, ly = [s, t, T], [ys_, 0.0, 0.0]
    else:
        lx, ly = [s, T], [ys_, ys_ * (1 - (T - s) / (t - s))]
    mx, my = envelope_knots(tx, ty, lx, ly, min)
    return PiecewiseLinear._from_computed(head_x + mx, head_y + my)


def construct_intermediate(Z: PiecewiseLinear, Y: PiecewiseLinear, eps: float = EPS,
                           grid: int = 4096) -> PiecewiseLinear:
    """``Y*`` with the mean of ``Z`` and ``Z ≺ Y* <= Y``."""
    if not Z.is_strictly_decreasing():
        raise NotStrictlyDecreasing("construction requires a strictly decreasing Z")
    if not (Z.in_u0() and Y.in_u0()):
        raise NotDominated("both functions must be positive on [0, T)")
    verdict = dominates_nn(Z, Y, eps)
    if verdict.relation is not Relation.LESS_NEQ:
        raise NotDominated(f"expected Z ≺≠ Y, got {verdict.relation.value}")
    IZ, IY = Z.integral, Y.integral
    target = IZ.total
    if abs(IY.total - target) <= 1e-12 * max(1.0, target):
        return Y
    T = Y.T
    tol = _tol_integral(Z, Y, 1e-10)

    x_star = bisect_root(lambda x: target - IY.eval(x), 0.0, T, 200)

    def build(s: float) -> PiecewiseLinear:
        hi = s + (T - s)
        for _ in range(200):
            if _truncate(Y, s, hi).integral.total >= target:
                break
            hi = s + 2 * (hi - s)
        t = bisect_root(lambda t: target - _truncate(Y, s, t).integral.total, s, hi, 200)
        return _truncate(Y, s, t)

    def feasible(cand: PiecewiseLinear) -> bool:
        return min(D for _, D in gap_extrema(Z, cand)) >= -tol

    chosen: PiecewiseLinear | None = None
    prev_s = None
    for k in range(60):
        s = x_star * (1 - 2.0 ** -k) if k else 0.0
        if s >= x_star:
            break
        cand = build(s)
        if feasible(cand):
            chosen = cand
            if prev_s is not None:
                lo, hi = prev_s, s
                for _ in range(30):
                    mid = (lo + hi) / 2
                    c2 = build(mid)
                    if feasible(c2):
                        hi, chosen = mid, c2
                    else:
                        lo = mid
            break
        prev_s = s
    if chosen is None:
        raise ConstructionFailed("no truncation point satisfies the integral ordering")
    _verify_intermediate(Z, Y, chosen, grid)
    return chosen


def _verify_intermediate(Z: PiecewiseLinear, Y: PiecewiseLinear, Ys: PiecewiseLinear, grid: int) -> None:
    target = Z.integral.total
    if abs(Ys.integral.total - target) > 1e-8 * target:
        raise ConstructionFailed("mean mismatch")
    xs = np.linspace(0.0, Z.T, grid)
    iz, iy, istar = Z.integral.eval_many(xs), Y.integral.eval_many(xs), Ys.integral.eval_many(xs)
    slack = 1e-10 * max(1.0, target)
    if np.any(istar < iz - slack) or np.any(istar > iy + slack):
        raise ConstructionFailed("integral sandwich violated")
    pts = merged_abscissae(Y, Ys)
    if np.any(Ys.values(pts) > Y.values(pts) + 1e-12 * max(1.0, Y.ys[0])):
        raise ConstructionFailed("Y* exceeds Y")


# combined comparison ---------------------------------------------------------------


@dataclass(frozen=True)
class EverywhereComparison:
    pointwise_less: bool
    exists_pointwise_less: bool
    mu_leq_everywhere: bool
    nn_dominated: bool
    nn_leq: bool
    h_bundle_all_less: bool
    percentile_all_less: bool
    z0_less: bool
    z0_leq: bool
    grid_based: tuple[str, ...] = ("h_bundle_all_less", "percentile_all_less")


def _compact_grid(lo: float, n: int) -> list[float]:
    """``n`` parameters in ``[lo, ∞)`` equispaced in ``θ/(1+θ)``, excluding ``∞``."""
    u0 = lo / (1 + lo)
    us = [u0 + (1 - u0) * k / n for k in range(n)]
    return [u / (1 - u) for u in us if u > 0]


def compare_everywhere(Z: PiecewiseLinear, Y: PiecewiseLinear, grid: int = 257,
                       eps: float = EPS) -> EverywhereComparison:
    _same_domain(Z, Y)
    T = Z.T
    tol_v = _tol_values(Z, Y, eps)
    xs = merged_abscissae(Z, Y)
    d = Y.values(xs) - Z.values(xs)
    pointwise_less = bool(np.all(d[:-1] > tol_v) and d[-1] >= -tol_v)
    exists_less = bool(np.any(d > tol_v))
    verdict = dominates_nn(Z, Y, eps)
    tol_i = _tol_integral(Z, Y, eps)
    z0_leq = Z.ys[0] <= Y.ys[0] + tol_v
    mu_leq = z0_leq and min(D for _, D in gap_extrema(Z, Y)) >= -tol_i

    lo = max(Z.ys[-1], Y.ys[-1]) / T
    thetas = [th for th in _compact_grid(lo, grid) if th > 0]
    h_less = bool(thetas) and all(h_measure(Y, th) - h_measure(Z, th) > eps * max(1.0, T)
                                  for th in thetas)
    fr = [k / grid for k in range(grid)]
    p_less = all(Y(f * T) - Z(f * T) > tol_v for f in fr)
    return EverywhereComparison(
        pointwise_less=pointwise_less,
        exists_pointwise_less=exists_less,
        mu_leq_everywhere=bool(mu_leq),
        nn_dominated=verdict.relation is Relation.LESS_NEQ,
        nn_leq=verdict.relation in (Relation.LESS_NEQ, Relation.EQUAL),
        h_bundle_all_less=h_less,
        percentile_all_less=p_less,
        z0_less=Z.ys[0] < Y.ys[0] - tol_v,
        z0_leq=bool(z0_leq),
    )
