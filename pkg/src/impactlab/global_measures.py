"""Global impact measures: functionals that strictly increase along ``Z ≺≠ Y``.

Every functional here is an integral of a function of ``Z`` or ``I_Z``.  On each
linear segment the integrand has an elementary antiderivative, which is used
directly; nearly flat segments (where the antiderivative difference would
cancel) fall back to adaptive Simpson.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass

from .dominance import Relation, dominates_nn
from .errors import BadExponent, NotDominatedPair, ZeroMean
from .numerics import adaptive_simpson
from .profile import EPS, PiecewiseLinear
from .verdicts import AxiomId, AxiomVerdict, Outcome, knots_of

__all__ = [
    "GLOBAL_TAGS",
    "GlobalMeasureKind",
    "check_global_monotone",
    "curve_length",
    "cv_squared",
    "evaluate_global",
    "gini_area",
    "mean",
    "power_integral",
    "theil_classical",
    "theil_generalized",
    "variance",
]

GLOBAL_TAGS = ("GiniArea", "CurveLength", "PowerIntegral", "TheilGeneralized", "TheilClassical",
               "CVSquared")

_FLAT = 1e-6


def _segments(Z: PiecewiseLinear) -> Iterator[tuple[float, float, float]]:
    for x0, x1, z0, z1 in zip(Z.xs, Z.xs[1:], Z.ys, Z.ys[1:]):
        yield x1 - x0, z0, z1


def _segment_integral(L: float, z0: float, z1: float, g: Callable[[float], float],
                      G: Callable[[float], float]) -> float:
    """``∫ g(z(s)) ds`` over a segment where ``z`` runs linearly from ``z0`` to ``z1``."""
    if L == 0:
        return 0.0
    dz = z1 - z0
    if abs(dz) <= _FLAT * max(1.0, abs(z0), abs(z1)):
        return adaptive_simpson(lambda s: g(z0 + dz * s / L), 0.0, L, 1e-12)
    return L * (G(z1) - G(z0)) / dz


def gini_area(Z: PiecewiseLinear) -> float:
    """Area under the non-normalized Lorenz curve, ``∫₀ᵀ I_Z``."""
    total = 0.0
    cum = 0.0
    for L, z0, z1 in _segments(Z):
        k = (z1 - z0) / L if L else 0.0
        total += cum * L + z0 * L * L / 2 + k * L ** 3 / 6
        cum += L * (z0 + z1) / 2
    return total


def _arc(z: float) -> float:
    return (z * math.sqrt(1 + z * z) + math.asinh(z)) / 2


def curve_length(Z: PiecewiseLinear) -> float:
    """``∫₀ᵀ √(1 + Z²) − T``."""
    f = lambda z: math.sqrt(1 + z * z)  # noqa: E731
    return sum(_segment_integral(L, z0, z1, f, _arc) for L, z0, z1 in _segments(Z)) - Z.T


def power_integral(Z: PiecewiseLinear, p: float) -> float:
    """``∫₀ᵀ Z^p`` for ``p > 1``."""
    if not p > 1:
        raise BadExponent(f"exponent must exceed 1, got {p!r}")
    if float(p).is_integer():
        n = int(p)
        return sum(L * sum(z0 ** k * z1 ** (n - k) for k in range(n + 1)) / (n + 1)
                   for L, z0, z1 in _segments(Z))
    return sum(adaptive_simpson(lambda s, L=L, z0=z0, z1=z1: (z0 + (z1 - z0) * s / L) ** p,
                                0.0, L, 1e-10) if L else 0.0
               for L, z0, z1 in _segments(Z))


def _xlogx(z: float) -> float:
    return z * math.log(z) if z > 0 else 0.0


def _xlogx_anti(z: float) -> float:
    return z * z * (math.log(z) / 2 - 0.25) if z > 0 else 0.0


def theil_generalized(Z: PiecewiseLinear) -> float:
    """``∫₀ᵀ Z ln Z`` with ``0 ln 0 = 0``."""
    return sum(_segment_integral(L, z0, z1, _xlogx, _xlogx_anti) for L, z0, z1 in _segments(Z))


def mean(Z: PiecewiseLinear) -> float:
    return Z.integral.total / Z.T


def theil_classical(Z: PiecewiseLinear) -> float:
    """``(1/T)∫₀ᵀ (Z/μ) ln(Z/μ)``."""
    mu = mean(Z)
    if mu <= 0:
        raise ZeroMean("Theil index needs a positive mean")
    f = lambda z: _xlogx(z / mu)  # noqa: E731
    F = lambda z: mu * _xlogx_anti(z / mu)  # noqa: E731
    return sum(_segment_integral(L, z0, z1, f, F) for L, z0, z1 in _segments(Z)) / Z.T


def variance(Z: PiecewiseLinear) -> float:
    """``(1/T)∫₀ᵀ (Z − μ)²``."""
    mu = mean(Z)
    acc = 0.0
    for L, z0, z1 in _segments(Z):
        a, b = z0 - mu, z1 - mu
        acc += L * (a * a + a * b + b * b) / 3
    return acc / Z.T


def cv_squared(Z: PiecewiseLinear) -> float:
    mu = mean(Z)
    if mu <= 0:
        raise ZeroMean("coefficient of variation needs a positive mean")
    return variance(Z) / (mu * mu)


@dataclass(frozen=True)
class GlobalMeasureKind:
    tag: str
    p: float | None = None

    def __post_init__(self) -> None:
        if self.tag not in GLOBAL_TAGS:
            raise ValueError(f"unknown global measure {self.tag!r}")
        if self.tag == "PowerIntegral" and (self.p is None or not self.p > 1):
            raise BadExponent(f"PowerIntegral needs p > 1, got {self.p!r}")

    @property
    def label(self) -> str:
        return f"PowerIntegral({self.p:g})" if self.tag == "PowerIntegral" else self.tag


def evaluate_global(kind: GlobalMeasureKind, Z: PiecewiseLinear) -> float:
    match kind.tag:
        case "GiniArea":
            return gini_area(Z)
        case "CurveLength":
            return curve_length(Z)
        case "PowerIntegral":
            return power_integral(Z, kind.p)  # type: ignore[arg-type]
        case "TheilGeneralized":
            return theil_generalized(Z)
        case "TheilClassical":
            return theil_classical(Z)
        case _:
            return cv_squared(Z)


def check_global_monotone(kind: GlobalMeasureKind,
                          pairs: Sequence[tuple[PiecewiseLinear, PiecewiseLinear]],
                          margin: float = 1e-12, eps: float = EPS) -> AxiomVerdict:
    """Check ``m(Z) < m(Y)`` on pairs with ``Z ≺≠ Y``.

    Pairs with equal totals are tallied separately: on a fixed-mean class the
    same inequality says ``m`` is a concentration measure.
    """
    witnesses = []
    checked = violated = equal_mean = equal_mean_violated = 0
    smallest = math.inf
    for Z, Y in pairs:
        if dominates_nn(Z, Y, eps).relation is not Relation.LESS_NEQ:
            raise NotDominatedPair(f"pair is not strictly dominated: {Z!r} vs {Y!r}")
        mz, my = evaluate_global(kind, Z), evaluate_global(kind, Y)
        checked += 1
        smallest = min(smallest, my - mz)
        same_total = abs(Z.integral.total - Y.integral.total) <= 1e-9 * max(1.0, Z.integral.total)
        equal_mean += same_total
        if not my - mz > margin:
            violated += 1
            equal_mean_violated += same_total
            if len(witnesses) < 3:
                witnesses.append({"m_Z": mz, "m_Y": my, "Z": knots_of(Z), "Y": knots_of(Y)})
    if violated:
        outcome = Outcome.VIOLATED
    elif checked == 0:
        outcome = Outcome.VACUOUS
    else:
        outcome = Outcome.HOLDS
    details = {"checked": checked, "violated": violated, "min_increase": smallest,
               "equal_mean_pairs": equal_mean, "equal_mean_violated": equal_mean_violated}
    return AxiomVerdict(AxiomId.II, outcome, witnesses, [f"global monotonicity of {kind.label}"],
                        False, details)
