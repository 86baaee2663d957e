"""Continuous decreasing rank-frequency functions and their discrete counterparts.

A :class:`PiecewiseLinear` is the carrier of every computation in the toolkit:
a continuous, decreasing, non-negative function on ``[0, T]`` given by its
knots.  Integrals are exact per-segment quadratics (:class:`IntegralCurve`).
"""

from __future__ import annotations

import bisect
import math
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    DomainMismatch,
    EmptyInput,
    NegativeValue,
    NonDecreasingOrdinates,
    NonMonotoneAbscissae,
    NonZeroTail,
    NotLarger,
    OutOfDomain,
    ResultNotDecreasing,
)

EPS = 1e-12

__all__ = [
    "EPS",
    "DiscreteProfile",
    "IntegralCurve",
    "PiecewiseLinear",
    "average_curve",
    "constant",
    "envelope_knots",
    "evaluate",
    "extend_with_zeros",
    "from_counts",
    "integral",
    "linear",
    "merged_abscissae",
    "pl_from_points",
    "pl_max",
    "pl_min",
    "pointwise_combine",
    "restrict",
    "sample_function",
    "scale",
    "shift",
    "to_continuous",
    "zero",
]


def _validate(xs: Sequence[float], ys: Sequence[float]) -> None:
    if len(xs) == 0:
        raise EmptyInput("no knots given")
    if len(xs) != len(ys):
        raise EmptyInput("abscissae and ordinates differ in length")
    if len(xs) < 2:
        raise NonMonotoneAbscissae("a domain of positive length needs at least two knots")
    for v in (*xs, *ys):
        if not math.isfinite(v):
            raise OutOfDomain(f"non-finite knot coordinate {v!r}")
    if xs[0] != 0.0:
        raise NonMonotoneAbscissae(f"first abscissa must be 0, got {xs[0]!r}")
    for a, b in zip(xs, xs[1:]):
        if not b > a:
            raise NonMonotoneAbscissae(f"abscissae not strictly increasing at {b!r}")
    for i, y in enumerate(ys):
        if y < 0:
            raise NegativeValue(f"negative ordinate {y!r} at knot {i}")
    for i, (a, b) in enumerate(zip(ys, ys[1:])):
        if b > a:
            raise NonDecreasingOrdinates(f"ordinate increases from {a!r} to {b!r} at knot {i + 1}")


@dataclass(frozen=True)
class PiecewiseLinear:
    """Continuous decreasing function on ``[0, T]`` interpolating its knots."""

    xs: tuple[float, ...]
    ys: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "xs", tuple(float(x) for x in self.xs))
        object.__setattr__(self, "ys", tuple(float(y) for y in self.ys))
        _validate(self.xs, self.ys)

    @classmethod
    def _from_computed(cls, xs: Sequence[float], ys: Sequence[float]) -> PiecewiseLinear:
        """Build from arithmetic results, absorbing rounding-level defects.

        Repeated or out-of-order abscissae are merged, ordinate upticks and
        negative values within the comparison band are clamped.  Anything
        larger is still rejected by validation.  Distinct abscissae are kept
        however close they are, so steep drops survive.
        """
        if not xs:
            raise EmptyInput("no knots given")
        span = max(abs(xs[-1]), 1.0)
        scale_y = max((abs(y) for y in ys), default=1.0) or 1.0
        tol_y = 64 * EPS * max(scale_y, 1.0)
        cx: list[float] = [float(xs[0])]
        cy: list[float] = [float(ys[0])]
        for x, y in zip(xs[1:], ys[1:]):
            x, y = float(x), float(y)
            if x <= cx[-1]:
                # keep the later abscissa only when it is the domain end
                cy[-1] = min(cy[-1], y)
                if x > cx[-1] and len(cx) > 1:
                    cx[-1] = x
                continue
            cx.append(x)
            cy.append(y)
        for i in range(len(cy)):
            if -tol_y <= cy[i] < 0:
                cy[i] = 0.0
            if i and cy[i - 1] < cy[i] <= cy[i - 1] + tol_y:
                cy[i] = cy[i - 1]
        if cx[0] != 0.0 and abs(cx[0]) <= 1e-14 * span:
            cx[0] = 0.0
        if len(cx) == 1:
            raise ResultNotDecreasing("construction collapsed to a single knot")
        try:
            return cls(tuple(cx), tuple(cy))
        except (NonDecreasingOrdinates, NegativeValue) as exc:
            raise ResultNotDecreasing(str(exc)) from exc

    # basic geometry -------------------------------------------------------

    @property
    def T(self) -> float:
        return self.xs[-1]

    @property
    def knots(self) -> list[tuple[float, float]]:
        return list(zip(self.xs, self.ys))

    @cached_property
    def slopes(self) -> tuple[float, ...]:
        return tuple(
            (y1 - y0) / (x1 - x0)
            for x0, x1, y0, y1 in zip(self.xs, self.xs[1:], self.ys, self.ys[1:])
        )

    def segment_index(self, x: float) -> int:
        """Index ``i`` of the segment ``[x_i, x_{i+1}]`` containing ``x``."""
        i = bisect.bisect_right(self.xs, x) - 1
        return min(max(i, 0), len(self.xs) - 2)

    def __call__(self, x: float) -> float:
        return evaluate(self, x)

    def values(self, x: np.ndarray | Sequence[float]) -> np.ndarray:
        """Vectorised evaluation, no domain checks."""
        return np.interp(np.asarray(x, dtype=float), self.xs, self.ys)

    # membership predicates ------------------------------------------------

    def is_zero(self) -> bool:
        return self.ys[0] == 0.0

    def in_u0(self) -> bool:
        """``Z > 0`` on ``[0, T)``."""
        return all(y > 0 for y in self.ys[:-1])

    def is_strictly_decreasing(self) -> bool:
        return all(b < a for a, b in zip(self.ys, self.ys[1:]))

    @cached_property
    def integral(self) -> IntegralCurve:
        return IntegralCurve.of(self)

    def same_as(self, other: PiecewiseLinear, tol: float = 0.0) -> bool:
        """Pointwise equality on the merged knot set (within ``tol``)."""
        if abs(self.T - other.T) > tol * max(1.0, self.T):
            return False
        grid = merged_abscissae(self, other)
        return bool(np.all(np.abs(self.values(grid) - other.values(grid)) <= tol))

    def __repr__(self) -> str:
        pts = ", ".join(f"({x:g},{y:g})" for x, y in zip(self.xs, self.ys))
        return f"PiecewiseLinear[{pts}]"


@dataclass(frozen=True)
class IntegralCurve:
    """Exact antiderivative ``I_Z(x) = ∫_0^x Z``, one quadratic per segment.

    On segment ``i`` with ``u = x - x_i``:
    ``I(x) = cum[i] + ys[i]*u + slopes[i]*u**2/2``.
    """

    xs: tuple[float, ...]
    ys: tuple[float, ...]
    slopes: tuple[float, ...]
    cum: tuple[float, ...]

    @classmethod
    def of(cls, Z: PiecewiseLinear) -> IntegralCurve:
        cum = [0.0]
        for x0, x1, y0, y1 in zip(Z.xs, Z.xs[1:], Z.ys, Z.ys[1:]):
            cum.append(cum[-1] + (x1 - x0) * (y0 + y1) / 2)
        return cls(Z.xs, Z.ys, Z.slopes, tuple(cum))

    @property
    def total(self) -> float:
        return self.cum[-1]

    @property
    def T(self) -> float:
        return self.xs[-1]

    def coefficients(self, i: int) -> tuple[float, float, float, float, float]:
        """``(x_i, x_{i+1}, I(x_i), Z(x_i), slope)`` for segment ``i``."""
        return self.xs[i], self.xs[i + 1], self.cum[i], self.ys[i], self.slopes[i]

    def eval(self, x: float) -> float:
        if x < 0 or x > self.T * (1 + 1e-15):
            raise OutOfDomain(f"x={x!r} outside [0, {self.T!r}]")
        i = bisect.bisect_right(self.xs, x) - 1
        i = min(max(i, 0), len(self.xs) - 2)
        if x == self.xs[i + 1]:
            return self.cum[i + 1]
        u = x - self.xs[i]
        return self.cum[i] + self.ys[i] * u + self.slopes[i] * u * u / 2

    def __call__(self, x: float) -> float:
        return self.eval(x)

    def eval_many(self, x: np.ndarray | Sequence[float]) -> np.ndarray:
        arr = np.asarray(x, dtype=float)
        xs = np.asarray(self.xs)
        idx = np.clip(np.searchsorted(xs, arr, side="right") - 1, 0, len(xs) - 2)
        u = arr - xs[idx]
        return (
            np.asarray(self.cum)[idx]
            + np.asarray(self.ys)[idx] * u
            + np.asarray(self.slopes)[idx] * u * u / 2
        )


@dataclass(frozen=True)
class DiscreteProfile:
    """Non-increasing item counts ``z_1 >= ... >= z_T >= 0``."""

    counts: tuple[float, ...]

    def __post_init__(self) -> None:
        counts = tuple(float(c) for c in self.counts)
        object.__setattr__(self, "counts", counts)
        if not counts:
            raise EmptyInput("a profile needs at least one source")
        for i, c in enumerate(counts):
            if not math.isfinite(c):
                raise OutOfDomain(f"non-finite count {c!r}")
            if c < 0:
                raise NegativeValue(f"negative count {c!r} at rank {i + 1}")
        for i, (a, b) in enumerate(zip(counts, counts[1:])):
            if b > a:
                raise NonDecreasingOrdinates(f"count increases at rank {i + 2}")

    @property
    def T(self) -> int:
        return len(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, rank: int) -> float:
        """One-based access ``profile[r] = z_r``."""
        if not 1 <= rank <= len(self.counts):
            raise OutOfDomain(f"rank {rank} outside 1..{len(self.counts)}")
        return self.counts[rank - 1]


# construction ----------------------------------------------------------------


def pl_from_points(points: Iterable[tuple[float, float]]) -> PiecewiseLinear:
    pts = list(points)
    if not pts:
        raise EmptyInput("no points given")
    return PiecewiseLinear(tuple(p[0] for p in pts), tuple(p[1] for p in pts))


def linear(T: float, S: float) -> PiecewiseLinear:
    """The line through ``(0, S)`` and ``(T, 0)``."""
    return PiecewiseLinear((0.0, T), (S, 0.0))


def constant(c: float, T: float) -> PiecewiseLinear:
    return PiecewiseLinear((0.0, T), (c, c))


def zero(T: float) -> PiecewiseLinear:
    return constant(0.0, T)


def sample_function(f: Callable[[float], float], T: float, n: int) -> PiecewiseLinear:
    """Knot sampling of a decreasing callable at ``n + 1`` equispaced ranks."""
    if n < 1:
        raise EmptyInput("need at least one segment")
    xs = [T * k / n for k in range(n + 1)]
    xs[-1] = T
    return PiecewiseLinear._from_computed(xs, [f(x) for x in xs])


def from_counts(raw: Iterable[float]) -> DiscreteProfile:
    values = [float(v) for v in raw]
    if not values:
        raise EmptyInput("no counts given")
    for i, v in enumerate(values):
        if v < 0:
            raise NegativeValue(f"negative count {v!r} at position {i}")
    return DiscreteProfile(tuple(sorted(values, reverse=True)))


def to_continuous(profile: DiscreteProfile) -> PiecewiseLinear:
    z = profile.counts
    xs = tuple(float(i) for i in range(len(z) + 1))
    return PiecewiseLinear(xs, (*z, z[-1]))


# calculus ---------------------------------------------------------------------


def evaluate(Z: PiecewiseLinear, x: float) -> float:
    T = Z.T
    if not (0 <= x <= T) or math.isnan(x):
        if 0 <= x <= T * (1 + 1e-15):
            x = T
        else:
            raise OutOfDomain(f"x={x!r} outside [0, {T!r}]")
    i = Z.segment_index(x)
    x0, x1 = Z.xs[i], Z.xs[i + 1]
    if x == x0:
        return Z.ys[i]
    if x == x1:
        return Z.ys[i + 1]
    y0, y1 = Z.ys[i], Z.ys[i + 1]
    return y0 + (y1 - y0) * ((x - x0) / (x1 - x0))


def integral(Z: PiecewiseLinear) -> IntegralCurve:
    return Z.integral


def average_curve(Z: PiecewiseLinear, theta: float) -> float:
    """``μ_θ(Z) = I_Z(θ)/θ`` with ``μ_0(Z) = Z(0)``."""
    if not 0 <= theta <= Z.T * (1 + 1e-15):
        raise OutOfDomain(f"theta={theta!r} outside [0, {Z.T!r}]")
    if theta == 0:
        return Z.ys[0]
    return Z.integral.eval(min(theta, Z.T)) / theta


def extend_with_zeros(Z: PiecewiseLinear, W: float) -> PiecewiseLinear:
    if Z.ys[-1] != 0.0:
        raise NonZeroTail(f"Z(T) = {Z.ys[-1]!r} is not zero")
    if not W > Z.T:
        raise NotLarger(f"W={W!r} must exceed T={Z.T!r}")
    return PiecewiseLinear((*Z.xs, float(W)), (*Z.ys, 0.0))


# pointwise algebra -----------------------------------------------------------


def merged_abscissae(*fs: PiecewiseLinear) -> list[float]:
    """Sorted union of the knot abscissae of functions sharing a domain."""
    return sorted(set().union(*(f.xs for f in fs)))


def _check_same_domain(Z: PiecewiseLinear, Y: PiecewiseLinear) -> None:
    if Z.T != Y.T:
        raise DomainMismatch(f"domains differ: T={Z.T!r} vs T={Y.T!r}")


def envelope_knots(ax: Sequence[float], ay: Sequence[float], bx: Sequence[float],
                   by: Sequence[float], pick: Callable[[float, float], float]
                   ) -> tuple[list[float], list[float]]:
    """Pointwise ``pick`` (min or max) of two PL graphs over a common interval.

    Crossing points strictly inside a merged segment become new knots.
    """
    xs = sorted(set(ax) | set(bx))
    zs, ys = np.interp(xs, ax, ay), np.interp(xs, bx, by)
    out_x: list[float] = [xs[0]]
    out_y: list[float] = [pick(float(zs[0]), float(ys[0]))]
    for j in range(len(xs) - 1):
        d0, d1 = zs[j] - ys[j], zs[j + 1] - ys[j + 1]
        if d0 * d1 < 0:
            t = d0 / (d0 - d1)
            xc = xs[j] + t * (xs[j + 1] - xs[j])
            if xs[j] < xc < xs[j + 1]:
                out_x.append(float(xc))
                out_y.append(float(zs[j] + t * (zs[j + 1] - zs[j])))
        out_x.append(xs[j + 1])
        out_y.append(pick(float(zs[j + 1]), float(ys[j + 1])))
    return out_x, out_y


def _envelope(Z: PiecewiseLinear, Y: PiecewiseLinear, pick: Callable[[float, float], float]) -> PiecewiseLinear:
    _check_same_domain(Z, Y)
    return PiecewiseLinear._from_computed(*envelope_knots(Z.xs, Z.ys, Y.xs, Y.ys, pick))


def pl_min(Z: PiecewiseLinear, Y: PiecewiseLinear) -> PiecewiseLinear:
    return _envelope(Z, Y, min)


def pl_max(Z: PiecewiseLinear, Y: PiecewiseLinear) -> PiecewiseLinear:
    return _envelope(Z, Y, max)


def shift(Z: PiecewiseLinear, delta: float, clamp: bool = False) -> PiecewiseLinear:
    """``Z + δ``; with ``clamp`` the result is ``max(Z + δ, 0)``."""
    ys = [y + delta for y in Z.ys]
    if min(ys) >= 0:
        return PiecewiseLinear._from_computed(Z.xs, ys)
    if not clamp:
        raise ResultNotDecreasing(f"shift by {delta!r} produces negative values")
    out_x: list[float] = []
    out_y: list[float] = []
    for i, (x, y) in enumerate(zip(Z.xs, ys)):
        if y >= 0:
            out_x.append(x)
            out_y.append(y)
            continue
        if i and ys[i - 1] > 0:
            x0 = Z.xs[i - 1]
            out_x.append(x0 + (x - x0) * ys[i - 1] / (ys[i - 1] - y))
            out_y.append(0.0)
        if not out_x:
            out_x.append(x)
            out_y.append(0.0)
    if out_x[-1] != Z.T:
        out_x.append(Z.T)
        out_y.append(0.0)
    return PiecewiseLinear._from_computed(out_x, out_y)


def scale(Z: PiecewiseLinear, c: float) -> PiecewiseLinear:
    if c < 0:
        raise ResultNotDecreasing(f"scaling by {c!r} reverses the order")
    return PiecewiseLinear(Z.xs, tuple(c * y for y in Z.ys))


def restrict(Z: PiecewiseLinear, lo: float, hi: float) -> tuple[list[float], list[float]]:
    """Knots of ``Z`` on ``[lo, hi]`` (raw lists, abscissae not rebased)."""
    xs = [lo] + [x for x in Z.xs if lo < x < hi] + [hi]
    return xs, [evaluate(Z, x) for x in xs]


def pointwise_combine(op: str, *inputs: PiecewiseLinear, delta: float | None = None,
                      c: float | None = None, clamp: bool = False) -> PiecewiseLinear:
    """Dispatch ``min``, ``max``, ``shift`` and ``scale``."""
    if op in ("min", "max"):
        if len(inputs) < 1:
            raise EmptyInput("no inputs")
        fn = pl_min if op == "min" else pl_max
        out = inputs[0]
        for other in inputs[1:]:
            out = fn(out, other)
        return out
    if len(inputs) != 1:
        raise ValueError(f"{op} takes exactly one input")
    if op == "shift":
        if delta is None:
            raise ValueError("shift needs delta")
        return shift(inputs[0], delta, clamp=clamp)
    if op == "scale":
        if c is None:
            raise ValueError("scale needs c")
        return scale(inputs[0], c)
    raise ValueError(f"unknown operation {op!r}")
