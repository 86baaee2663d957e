"""Single-valued impact measures, their existence conditions and localization values."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .errors import OutOfDomain, Undefined
from .numerics import adaptive_simpson, bisect_root
from .profile import DiscreteProfile, PiecewiseLinear, average_curve, evaluate

__all__ = [
    "DiscreteMeasures",
    "LocalizationResult",
    "MEASURE_TAGS",
    "MeasureKind",
    "a_index",
    "avg_of_avgs",
    "discrete_measures",
    "evaluate_discrete",
    "evaluate_measure",
    "g_measure",
    "h_measure",
    "localization",
    "parse_measure",
    "percentile",
    "plateau_start",
    "r_index",
    "truncated",
]

MEASURE_TAGS = (
    "H", "Kosmulski", "G", "R", "A", "TruncatedAverage", "TruncatedTotal",
    "Percentile", "MaxValue", "AvgOfAvgs", "Mean", "Total",
)


@dataclass(frozen=True)
class MeasureKind:
    """Tag plus parameters of a single-valued measure.

    ``Mean`` and ``Total`` are the full-domain average and total; unlike
    ``TruncatedAverage(T)`` they follow the domain when it is extended.
    """

    tag: str
    theta: float | None = None
    p: float | None = None

    def __post_init__(self) -> None:
        if self.tag not in MEASURE_TAGS:
            raise ValueError(f"unknown measure tag {self.tag!r}")
        needs_theta = self.tag in ("H", "Kosmulski", "G", "R", "TruncatedAverage",
                                   "TruncatedTotal", "Percentile")
        if needs_theta and self.theta is None:
            raise ValueError(f"{self.tag} needs a parameter theta")
        if self.tag in ("H", "Kosmulski", "G", "R") and not self.theta > 0:
            raise ValueError("theta must be positive")
        if self.tag == "TruncatedAverage" and self.theta < 0:
            raise ValueError("theta must be non-negative")
        if self.tag == "TruncatedTotal" and not self.theta > 0:
            raise ValueError("theta must be positive")
        if self.tag == "Kosmulski" and (self.p is None or not self.p > 0):
            raise ValueError("Kosmulski needs p > 0")
        if self.tag == "Percentile" and not 0 < self.theta < 1:
            raise ValueError("percentile parameter must lie in (0, 1)")

    @property
    def label(self) -> str:
        if self.tag == "Kosmulski":
            return f"Kosmulski({self.theta:g},{self.p:g})"
        if self.theta is not None:
            return f"{self.tag}({self.theta:g})"
        return self.tag

    # convenience constructors
    @classmethod
    def h(cls, theta: float = 1.0) -> MeasureKind:
        return cls("H", theta)

    @classmethod
    def g(cls, theta: float = 1.0) -> MeasureKind:
        return cls("G", theta)

    @classmethod
    def r(cls, theta: float = 1.0) -> MeasureKind:
        return cls("R", theta)

    @classmethod
    def a(cls) -> MeasureKind:
        return cls("A")

    @classmethod
    def mu(cls, theta: float) -> MeasureKind:
        return cls("TruncatedAverage", theta)

    @classmethod
    def total(cls, theta: float) -> MeasureKind:
        return cls("TruncatedTotal", theta)

    @classmethod
    def pct(cls, theta: float) -> MeasureKind:
        return cls("Percentile", theta)

    @classmethod
    def kosmulski(cls, theta: float, p: float) -> MeasureKind:
        return cls("Kosmulski", theta, p)


@dataclass(frozen=True)
class LocalizationResult:
    c: float | None
    d: float | None
    C_interval: tuple[float, float] | None
    D_interval: tuple[float, float] | None


# pointwise indices -------------------------------------------------------------


def h_measure(Z: PiecewiseLinear, theta: float = 1.0, p: float = 1.0) -> float:
    """Unique ``x`` with ``Z(x) = θ x^p``."""
    if not theta > 0 or not p > 0:
        raise ValueError("theta and p must be positive")
    T = Z.T
    if Z.ys[-1] > theta * T ** p:
        raise Undefined(f"Z(T)={Z.ys[-1]!r} exceeds {theta!r}*T^{p!r}: index not defined")
    if Z.ys[0] == 0.0:
        return 0.0
    xs, ys = Z.xs, Z.ys
    for i in range(len(xs) - 1):
        x0, x1 = xs[i], xs[i + 1]
        if ys[i + 1] > theta * x1 ** p:
            continue
        if ys[i + 1] == theta * x1 ** p:
            if ys[i] > theta * x0 ** p or i == 0:
                return x1
        s = Z.slopes[i]
        if p == 1.0:
            x = x0 + (ys[i] - theta * x0) / (theta - s)
        else:
            y0 = ys[i]
            x = bisect_root(lambda t: y0 + s * (t - x0) - theta * t ** p, x0, x1, 80)
        return min(max(x, x0), x1)
    return T


def g_measure(Z: PiecewiseLinear, theta: float = 1.0) -> float:
    """Unique positive root of ``I_Z(x) = θ x²`` (0 for the zero function)."""
    if not theta > 0:
        raise ValueError("theta must be positive")
    I = Z.integral
    T = Z.T
    if I.total > theta * T * T:
        raise Undefined(f"I_Z(T)={I.total!r} exceeds {theta!r}*T^2: g not defined")
    if Z.ys[0] == 0.0:
        return 0.0
    for i in range(len(I.xs) - 1):
        x0, x1, c0, y0, s = I.coefficients(i)
        if I.cum[i + 1] > theta * x1 * x1:
            continue
        a2 = s / 2 - theta
        a1 = y0 - 2 * theta * x0
        a0 = c0 - theta * x0 * x0
        if x0 == 0.0:
            u = -a1 / a2
        else:
            # a2 < 0 < a0: exactly one positive root; stable quadratic formula
            disc = math.sqrt(max(a1 * a1 - 4 * a2 * a0, 0.0))
            q = -(a1 + math.copysign(disc, a1)) / 2
            roots = [r for r in (q / a2 if a2 else math.inf, a0 / q if q else math.inf)
                     if math.isfinite(r)]
            positive = [r for r in roots if r >= 0]
            u = min(positive) if positive else 0.0
        return min(max(x0 + u, x0), x1)
    return T


def r_index(Z: PiecewiseLinear, theta: float = 1.0) -> float:
    return math.sqrt(Z.integral.eval(h_measure(Z, theta)))


def a_index(Z: PiecewiseLinear, theta: float = 1.0) -> float:
    h = h_measure(Z, theta)
    if h == 0.0:
        raise Undefined("A-index needs a positive h-index")
    return Z.integral.eval(h) / h


def truncated(kind: Literal["average", "total"], Z: PiecewiseLinear, theta: float) -> float:
    if kind == "average":
        return average_curve(Z, theta)
    if kind == "total":
        if not 0 < theta <= Z.T * (1 + 1e-15):
            raise OutOfDomain(f"theta={theta!r} outside (0, {Z.T!r}]")
        return Z.integral.eval(min(theta, Z.T))
    raise ValueError(f"unknown truncation kind {kind!r}")


def percentile(Z: PiecewiseLinear, theta: float) -> float:
    if not 0 < theta < 1:
        raise OutOfDomain(f"percentile parameter {theta!r} outside (0, 1)")
    return evaluate(Z, theta * Z.T)


def avg_of_avgs(Z: PiecewiseLinear) -> float:
    """``(1/T) ∫_0^T μ_θ(Z) dθ`` by adaptive Simpson on every segment."""
    total = 0.0
    for x0, x1 in zip(Z.xs, Z.xs[1:]):
        total += adaptive_simpson(lambda t: average_curve(Z, t), x0, x1, 1e-12)
    return total / Z.T


def evaluate_measure(kind: MeasureKind, Z: PiecewiseLinear) -> float:
    tag, th = kind.tag, kind.theta
    if tag == "H":
        return h_measure(Z, th)
    if tag == "Kosmulski":
        return h_measure(Z, th, kind.p)
    if tag == "G":
        return g_measure(Z, th)
    if tag == "R":
        return r_index(Z, th)
    if tag == "A":
        return a_index(Z)
    if tag == "TruncatedAverage":
        return truncated("average", Z, th)
    if tag == "TruncatedTotal":
        return truncated("total", Z, th)
    if tag == "Percentile":
        return percentile(Z, th)
    if tag == "MaxValue":
        return Z.ys[0]
    if tag == "AvgOfAvgs":
        return avg_of_avgs(Z)
    if tag == "Mean":
        return Z.integral.total / Z.T
    if tag == "Total":
        return Z.integral.total
    raise ValueError(tag)


# localization ------------------------------------------------------------------


def plateau_start(Z: PiecewiseLinear, x: float) -> float:
    """Smallest ``a <= x`` such that ``Z`` is constant on ``[a, x]``."""
    if x <= 0:
        return 0.0
    i = Z.segment_index(x)
    if x == Z.xs[i] and i > 0:
        i -= 1
    elif x == Z.xs[i]:
        return x
    a = x
    while i >= 0 and Z.slopes[i] == 0.0:
        a = Z.xs[i]
        i -= 1
    return a


def localization(kind: MeasureKind, Z: PiecewiseLinear) -> LocalizationResult:
    """Exact ``c`` and ``d`` values together with the windows ``[c, T]`` and ``[d, T]``."""
    T = Z.T
    tag = kind.tag
    if tag == "A":
        evaluate_measure(kind, Z)
        return LocalizationResult(None, None, None, None)
    if tag == "MaxValue":
        return LocalizationResult(0.0, 0.0, (0.0, T), (0.0, T))
    if tag in ("H", "Kosmulski", "G"):
        point = evaluate_measure(kind, Z)
    elif tag == "R":
        point = h_measure(Z, kind.theta)
    elif tag in ("TruncatedAverage", "TruncatedTotal"):
        if kind.theta > T * (1 + 1e-15):
            raise OutOfDomain(f"theta={kind.theta!r} outside [0, {T!r}]")
        point = min(kind.theta, T)
    elif tag == "Percentile":
        point = kind.theta * T
    else:
        # whole-domain functionals need the full window
        evaluate_measure(kind, Z)
        point = T
    c = point
    d = point if (Z.is_strictly_decreasing() or point >= T) else plateau_start(Z, point)
    return LocalizationResult(c, d, (c, T), (d, T))


# discrete setting ----------------------------------------------------------------


@dataclass(frozen=True)
class DiscreteMeasures:
    """Sum-based measures on a count vector."""

    profile: DiscreteProfile

    @property
    def h(self) -> int:
        return self.h_theta(1.0)

    def h_theta(self, theta: float, p: float = 1.0) -> int:
        z = self.profile.counts
        return max((r for r in range(1, len(z) + 1) if z[r - 1] >= theta * r ** p), default=0)

    @property
    def g(self) -> int:
        return self.g_theta(1.0)

    def g_theta(self, theta: float) -> int:
        z = self.profile.counts
        total, best, r = 0.0, 0, 1
        while True:
            if r <= len(z):
                total += z[r - 1]
            if total >= theta * r * r:
                best = r
            elif r >= len(z):
                break
            r += 1
        return best

    @property
    def r(self) -> float:
        return math.sqrt(self.total(self.h)) if self.h else 0.0

    @property
    def a(self) -> float:
        h = self.h
        if h == 0:
            raise Undefined("A-index needs a positive h-index")
        return self.total(h) / h

    def total(self, theta: int) -> float:
        if not 0 <= theta <= len(self.profile.counts) or theta != int(theta):
            raise OutOfDomain(f"rank count {theta:g} outside 0..{len(self.profile)}")
        return float(sum(self.profile.counts[: int(theta)]))

    def mu(self, theta: int) -> float:
        if theta == 0:
            return self.profile.counts[0]
        return self.total(theta) / theta


def discrete_measures(profile: DiscreteProfile) -> DiscreteMeasures:
    return DiscreteMeasures(profile)


def evaluate_discrete(kind: MeasureKind, profile: DiscreteProfile) -> float:
    """Discrete analogue of :func:`evaluate_measure`, computed by sums over ranks."""
    dm = DiscreteMeasures(profile)
    z = profile.counts
    T = len(z)
    tag, th = kind.tag, kind.theta
    if tag == "H":
        return float(dm.h_theta(th))
    if tag == "Kosmulski":
        return float(dm.h_theta(th, kind.p))
    if tag == "G":
        return float(dm.g_theta(th))
    if tag == "R":
        h = dm.h_theta(th)
        return math.sqrt(dm.total(h))
    if tag == "A":
        return dm.a
    if tag == "TruncatedAverage":
        return dm.mu(th)
    if tag == "TruncatedTotal":
        return dm.total(th)
    if tag == "Percentile":
        return z[max(math.ceil(th * T), 1) - 1]
    if tag == "MaxValue":
        return z[0]
    if tag == "AvgOfAvgs":
        return sum(dm.mu(r) for r in range(1, T + 1)) / T
    if tag == "Mean":
        return dm.total(T) / T
    if tag == "Total":
        return dm.total(T)
    raise ValueError(tag)


_TOKEN_TAGS = {
    "h": "H", "g": "G", "r": "R", "a": "A", "mu": "TruncatedAverage",
    "total": "TruncatedTotal", "pct": "Percentile", "max": "MaxValue",
    "avgavg": "AvgOfAvgs", "mean": "Mean", "sum": "Total", "kos": "Kosmulski",
}


def parse_measure(token: str) -> MeasureKind:
    """Parse a CLI token such as ``h:1``, ``kos:1:2``, ``mu:3`` or ``a``."""
    name, *params = token.strip().split(":")
    if name not in _TOKEN_TAGS:
        raise ValueError(f"unknown measure {name!r}")
    tag = _TOKEN_TAGS[name]
    nums = [float(v) for v in params]
    if tag == "Kosmulski":
        if len(nums) != 2:
            raise ValueError("kos needs theta and p")
        return MeasureKind(tag, nums[0], nums[1])
    if tag in ("A", "MaxValue", "AvgOfAvgs", "Mean", "Total"):
        if nums:
            raise ValueError(f"{name} takes no parameter")
        return MeasureKind(tag)
    if len(nums) != 1:
        raise ValueError(f"{name} needs exactly one parameter")
    return MeasureKind(tag, nums[0])
