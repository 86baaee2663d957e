"""Seeded random rank-frequency functions and dominated pairs."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from .dominance import Relation, dominates_nn
from .profile import PiecewiseLinear, linear

__all__ = ["linear_family", "make_rng", "random_dominated_pair", "random_dominated_pairs", "random_pl"]


def make_rng(seed: int | np.random.Generator | None) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def _abscissae(rng: np.random.Generator, T: float, n: int) -> list[float]:
    inner = np.sort(rng.uniform(0.0, T, n - 2))
    xs = [0.0, *inner.tolist(), float(T)]
    # drop accidental duplicates so abscissae stay strictly increasing
    return [x for i, x in enumerate(xs) if i == 0 or x > xs[i - 1]]


def random_pl(rng: np.random.Generator, T: float | None = None, n_knots: int | None = None,
              max_value: float = 20.0, min_value: float = 0.0, zero_tail: float = 0.0) -> PiecewiseLinear:
    """Random decreasing PL function with values in ``[min_value, max_value]``.

    With probability ``zero_tail`` the last knots are set to zero, producing a
    non-strictly decreasing function; otherwise values are strictly decreasing.
    """
    T = float(rng.uniform(1.0, 20.0)) if T is None else float(T)
    n = int(rng.integers(2, 9)) if n_knots is None else n_knots
    xs = _abscissae(rng, T, n)
    ys = np.sort(rng.uniform(min_value, max_value, len(xs)))[::-1].tolist()
    if len(set(ys)) < len(ys):
        ys = [max_value - (max_value - min_value) * i / len(ys) for i in range(len(ys))]
    if zero_tail and len(ys) > 2 and rng.random() < zero_tail:
        k = int(rng.integers(1, len(ys) - 1))
        ys[-k:] = [0.0] * k
    return PiecewiseLinear(tuple(xs), tuple(ys))


def random_dominated_pair(rng: np.random.Generator, T: float | None = None, max_value: float = 20.0,
                          min_value: float = 0.0, n_knots: int | None = None,
                          max_tries: int = 200) -> tuple[PiecewiseLinear, PiecewiseLinear]:
    """``(Z, Y)`` with ``Z ≺≠ Y`` confirmed by the exact dominance test.

    ``Y = max(Z + P, min_value)`` where ``P`` is a random decreasing PL
    perturbation that starts positive and may turn negative.
    """
    for _ in range(max_tries):
        Z = random_pl(rng, T, n_knots, max_value, min_value)
        pxs = _abscissae(rng, Z.T, int(rng.integers(2, 6)))
        top = float(rng.uniform(0.1, 0.5 * max_value))
        pys = np.sort(rng.uniform(-0.5 * top, top, len(pxs)))[::-1]
        pys[0] = top
        xs = sorted(set(Z.xs) | set(pxs))
        ys = np.maximum(Z.values(xs) + np.interp(xs, pxs, pys), min_value)
        Y = PiecewiseLinear._from_computed(xs, ys.tolist())
        if dominates_nn(Z, Y).relation is Relation.LESS_NEQ:
            return Z, Y
    raise RuntimeError("could not generate a dominated pair")


def random_dominated_pairs(seed: int | np.random.Generator | None, count: int,
                           **kwargs: float) -> list[tuple[PiecewiseLinear, PiecewiseLinear]]:
    rng = make_rng(seed)
    return [random_dominated_pair(rng, **kwargs) for _ in range(count)]  # type: ignore[arg-type]


def linear_family(T: float, heights: Sequence[float]) -> list[PiecewiseLinear]:
    return [linear(T, S) for S in heights]
