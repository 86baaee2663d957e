"""Bounded adversarial search for (III.1)/(III.2) counterexamples at a given window."""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass
from typing import Any

from ..errors import ImpactError
from ..measures import MeasureKind, evaluate_measure, localization
from ..profile import PiecewiseLinear, evaluate
from ..verdicts import knots_of
from .witnesses import flatten_below, lift_above

__all__ = ["LocalizationReport", "ProbeResult", "as_evaluator", "localization_report", "probe_requirement"]

Evaluator = Callable[[PiecewiseLinear], float]
DEFAULT_BUDGET = 10_000


def as_evaluator(measure: MeasureKind | Evaluator) -> tuple[Evaluator, str]:
    if isinstance(measure, MeasureKind):
        return (lambda Z: evaluate_measure(measure, Z)), measure.label
    return measure, getattr(measure, "__name__", "custom")


@dataclass(frozen=True)
class ProbeResult:
    requirement: str
    a: float
    violated: bool
    candidates: int
    undetermined: int
    witness: dict[str, Any] | None = None


def _fractions(n: int) -> list[float]:
    """``n`` fractions in ``(0, 1]`` dense near 0 and spanning to 1."""
    geo = [10.0 ** (-6 + 6 * k / max(n // 2 - 1, 1)) for k in range(n // 2)]
    lin = [(k + 1) / (n - n // 2) for k in range(n - n // 2)]
    return sorted(set(geo + lin))


def _deltas(scale: float, n: int = 10) -> list[float]:
    return [scale * 10.0 ** (-9 * k / (n - 1)) / 2 for k in range(n)]


def _build(Z: PiecewiseLinear, requirement: str, a: float, d: float, knee: float,
           level: float) -> PiecewiseLinear:
    if requirement == "III_1":
        return lift_above(Z, a, d, knee, min(level, evaluate(Z, a) + d))
    return flatten_below(Z, a, d, knee, min(level, evaluate(Z, a) - d))


def _candidates(Z: PiecewiseLinear, requirement: str, a: float,
                budget: int) -> Iterator[tuple[float, float, float]]:
    """``(δ, knee, level)`` triples, most aggressive shapes first."""
    T = Z.T
    za = evaluate(Z, a)
    n_knee = n_level = max(int((budget / 10) ** 0.5), 2)
    knees = [a + (T - a) * f for f in _fractions(n_knee)]
    levels = [0.0, *_fractions(n_level - 1)]
    if requirement == "III_1":
        for d in _deltas(max(Z.ys[0], 1.0)):
            for knee in knees:
                for lv in levels:
                    yield d, knee, lv * (za + d)
    elif za > 0:
        for d in _deltas(2 * za):
            for lv in reversed(levels):
                for knee in reversed(knees):
                    yield d, knee, lv * (za - d)


def _shrink(Z: PiecewiseLinear, m: Evaluator, requirement: str, a: float, d: float, knee: float,
            level: float, mz: float) -> tuple[PiecewiseLinear, float]:
    """Halve ``δ`` (keeping the tail shape) while the violation persists."""
    best = (_build(Z, requirement, a, d, knee, level), d)
    for _ in range(30):
        d /= 2
        try:
            cand = _build(Z, requirement, a, d, knee, level)
            my = m(cand)
        except ImpactError:
            break
        if (my > mz) if requirement == "III_1" else (my < mz):
            break
        best = (cand, d)
    return best


def probe_requirement(measure: MeasureKind | Evaluator, Z: PiecewiseLinear, requirement: str,
                      a: float, budget: int = DEFAULT_BUDGET, eps: float = 1e-12,
                      shrink: bool = True) -> ProbeResult:
    """Search for ``Y ≫ Z`` (III_1) or ``Y ≪ Z`` (III_2) on ``[0, a]`` breaking the requirement.

    A violation means ``m(Y) <= m(Z)`` (III_1) or ``m(Y) >= m(Z)`` (III_2).
    Differences smaller than the tolerance but nonzero are counted as
    undetermined rather than as violations.
    """
    if requirement not in ("III_1", "III_2"):
        raise ValueError(requirement)
    m, _ = as_evaluator(measure)
    mz = m(Z)
    sign = 1.0 if requirement == "III_1" else -1.0
    seen = undetermined = 0
    for d, knee, level in _candidates(Z, requirement, a, budget):
        if seen >= budget:
            break
        seen += 1
        try:
            Y = _build(Z, requirement, a, d, knee, level)
            my = m(Y)
        except ImpactError:
            continue
        gap = sign * (my - mz)
        tol = eps * max(1.0, abs(mz), abs(my))
        if gap > tol:
            continue
        if gap != 0 and gap > -tol:
            undetermined += 1
            continue
        if shrink:
            Y, d = _shrink(Z, m, requirement, a, d, knee, level, mz)
            my = m(Y)
        witness = {"a": a, "delta": d, "m_Z": mz, "m_Y": my, "Z": knots_of(Z), "Y": knots_of(Y)}
        return ProbeResult(requirement, a, True, seen, undetermined, witness)
    return ProbeResult(requirement, a, False, seen, undetermined)


@dataclass(frozen=True)
class LocalizationReport:
    measure: str
    c: float | None
    d: float | None
    below: tuple[ProbeResult, ...]
    at: tuple[ProbeResult, ...]

    @property
    def confirmed(self) -> bool:
        """Failures strictly below ``c``/``d`` and none at them."""
        return all(p.violated for p in self.below) and not any(p.violated for p in self.at)


def localization_report(kind: MeasureKind, Z: PiecewiseLinear, budget: int = DEFAULT_BUDGET,
                        below: tuple[float, ...] = (0.5, 0.9, 0.99)) -> LocalizationReport:
    """Probe (III.1) just below and at ``c``, and (III.2) just below and at ``d``."""
    loc = localization(kind, Z)
    if loc.c is None or loc.d is None:
        return LocalizationReport(kind.label, None, None, (), ())
    under: list[ProbeResult] = []
    at: list[ProbeResult] = []
    for req, point in (("III_1", loc.c), ("III_2", loc.d)):
        for f in below:
            if point * f > 0:
                under.append(probe_requirement(kind, Z, req, point * f, budget))
        if 0 < point < Z.T:
            at.append(probe_requirement(kind, Z, req, point, budget))
    return LocalizationReport(kind.label, loc.c, loc.d, tuple(under), tuple(at))
