"""Adversarial constructions that break localization requirements."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import BadDelta, BadWindow, DeltaTooLarge, Undefined
from ..measures import a_index, h_measure
from ..profile import PiecewiseLinear, constant, evaluate, pl_max, shift

__all__ = ["ShiftResult", "flatten_below", "lift_above", "plateau_lift", "shift_down_clamped"]


def _head(Z: PiecewiseLinear, a: float, delta: float) -> list[tuple[float, float]]:
    pts = [(x, y + delta) for x, y in zip(Z.xs, Z.ys) if x < a]
    pts.append((a, evaluate(Z, a) + delta))
    return pts


def _tail(pts: list[tuple[float, float]], knee: float, level: float, T: float) -> PiecewiseLinear:
    if knee > pts[-1][0]:
        pts.append((knee, level))
    if T > pts[-1][0]:
        pts.append((T, level))
    return PiecewiseLinear(tuple(p[0] for p in pts), tuple(p[1] for p in pts))


def lift_above(Z: PiecewiseLinear, a: float, delta: float, knee: float | None = None,
               level: float | None = None) -> PiecewiseLinear:
    """``Z + δ`` on ``[0, a]``, a segment down to ``(knee, level)``, then constant.

    The defaults ``knee = h_Z`` and ``level = h_Z/2`` reproduce the classical
    adversary showing that ``h`` cannot localize below its own value.
    """
    if not delta > 0:
        raise BadWindow(f"delta must be positive, got {delta!r}")
    T = Z.T
    if knee is None:
        try:
            h = h_measure(Z)
        except Undefined as exc:
            raise BadWindow(str(exc)) from exc
        if not 0 < a < h:
            raise BadWindow(f"need 0 < a < h_Z = {h!r}, got a={a!r}")
        knee = h
        level = h / 2 if level is None else level
    if not 0 < a < T or not a < knee <= T:
        raise BadWindow(f"need 0 < a < knee <= T, got a={a!r}, knee={knee!r}")
    top = evaluate(Z, a) + delta
    level = top if level is None else level
    if not 0 <= level <= top:
        raise BadWindow(f"level {level!r} outside [0, {top!r}]")
    return _tail(_head(Z, a, delta), knee, level, T)


def flatten_below(Z: PiecewiseLinear, a: float, delta: float, knee: float | None = None,
                  level: float | None = None) -> PiecewiseLinear:
    """``Z − δ`` on ``[0, a]`` and constant ``Z(a) − δ`` afterwards.

    Passing ``knee``/``level`` bends the tail further down instead.
    """
    T = Z.T
    if not 0 < a < T:
        raise BadWindow(f"need 0 < a < T, got a={a!r}")
    if not delta > 0:
        raise BadWindow(f"delta must be positive, got {delta!r}")
    za = evaluate(Z, a)
    if delta >= za:
        raise DeltaTooLarge(f"delta={delta!r} must be below Z(a)={za!r}")
    top = za - delta
    level = top if level is None else level
    knee = T if knee is None else knee
    if not a <= knee <= T or not 0 <= level <= top:
        raise BadWindow(f"tail ({knee!r}, {level!r}) does not continue the window")
    return _tail(_head(Z, a, -delta), knee, level, T)


def plateau_lift(Z: PiecewiseLinear, level: float) -> PiecewiseLinear:
    """``max(Z, level)``: pointwise above ``Z``."""
    return pl_max(Z, constant(level, Z.T))


@dataclass(frozen=True)
class ShiftResult:
    Y: PiecewiseLinear
    delta: float
    bound: float

    @property
    def condition_met(self) -> bool:
        """Does ``δ`` satisfy the upper bound the construction needs?"""
        return self.delta <= self.bound


def _mean_up_to(Z: PiecewiseLinear, x: float) -> float:
    return Z.integral.eval(x) / x


def shift_down_clamped(Z: PiecewiseLinear, delta: float | None = None) -> ShiftResult:
    """``max(Z − δ, 0)`` together with the bound ``min(½(J(h_Y) − J(h_Z)), h_Z)``.

    ``J(x)`` is the average of ``Z`` over ``[0, x]``.  With ``delta=None`` the
    largest ``δ`` on a geometric grid that satisfies its own bound is
    returned; :class:`BadDelta` signals that no such ``δ`` exists.
    """
    if not Z.is_strictly_decreasing():
        raise BadDelta("Z must be strictly decreasing")
    h = h_measure(Z)
    if not h > 0:
        raise BadDelta("h_Z must be positive")

    def build(d: float) -> ShiftResult:
        Y = shift(Z, -d, clamp=True)
        hy = h_measure(Y)
        bound = min(0.5 * (_mean_up_to(Z, hy) - _mean_up_to(Z, h)), h) if hy > 0 else 0.0
        return ShiftResult(Y, d, bound)

    if delta is not None:
        if not 0 < delta < h:
            raise BadDelta(f"need 0 < delta < h_Z = {h!r}, got {delta!r}")
        return build(delta)

    # slack(δ) = bound(δ) − δ; look for the largest δ with nonnegative slack
    grid = [h * (1 - 2.0 ** -k) for k in range(1, 40)][::-1] + [h * 2.0 ** -k for k in range(1, 40)]
    for d in grid:
        res = build(d)
        if res.condition_met and a_index(res.Y) > a_index(Z):
            return res
    raise BadDelta("no delta satisfies the construction's bound for this Z")

