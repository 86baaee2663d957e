"""Family-relative checks of bundle properties (CES, PED, W1, W2, WL, IB, GIB).

Existential quantifiers over ``θ`` are searched on a grid of ``Q_Z ∩ Q_Y``, so
a ``holds`` verdict is exact while a ``violated`` one for an existence
property is relative to that grid (``grid_based`` is set accordingly).
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from typing import Any

import numpy as np

from ..bundles import DEFAULT_GRID, BundleSpec, bundle_less_a, bundle_less_ab, check_bundle_axioms
from ..dominance import Relation, dominates_nn, prefix_structure
from ..errors import ImpactError
from ..profile import EPS, PiecewiseLinear, evaluate, merged_abscissae
from ..verdicts import AxiomId, AxiomVerdict, Outcome, combine, knots_of

__all__ = ["BUNDLE_PROPERTIES", "check_bundle_property", "exists_smaller"]

BUNDLE_PROPERTIES = (AxiomId.CES, AxiomId.PED, AxiomId.W1, AxiomId.W2, AxiomId.WL, AxiomId.IB,
                     AxiomId.GIB)


def _tol(u: float, v: float, eps: float) -> float:
    return eps * max(1.0, abs(u), abs(v))


def _eval(B: BundleSpec, Z: PiecewiseLinear, t: float) -> float | None:
    try:
        return B.evaluator(Z, t)
    except ImpactError:
        return None


def _pairs(family: Sequence[PiecewiseLinear]) -> list[tuple[PiecewiseLinear, PiecewiseLinear]]:
    return [(Z, Y) for i, Z in enumerate(family) for j, Y in enumerate(family) if i != j and Z.T == Y.T]


def _common_grid(B: BundleSpec, Z: PiecewiseLinear, Y: PiecewiseLinear, grid: int) -> list[float]:
    Q = B.admissible(Z).intersect(B.admissible(Y))
    return [t for t in Q.grid(grid) if math.isfinite(t)]


def exists_smaller(B: BundleSpec, Z: PiecewiseLinear, Y: PiecewiseLinear, grid: int = DEFAULT_GRID,
                   eps: float = EPS) -> tuple[str, tuple[float, float, float] | None]:
    """Search ``θ`` with ``m_θ(Z) < m_θ(Y)``: ``found``, ``none`` or ``undetermined``."""
    near = None
    for t in _common_grid(B, Z, Y, grid):
        mz, my = _eval(B, Z, t), _eval(B, Y, t)
        if mz is None or my is None:
            continue
        g = my - mz
        if g > _tol(mz, my, eps):
            return "found", (t, mz, my)
        if 0 < g:
            near = near or (t, mz, my)
    return ("undetermined", near) if near else ("none", None)


def _le(Z: PiecewiseLinear, Y: PiecewiseLinear) -> bool:
    xs = merged_abscissae(Z, Y)
    return bool(np.all(Z.values(xs) <= Y.values(xs)))


def _somewhere_below(Z: PiecewiseLinear, Y: PiecewiseLinear, eps: float) -> bool:
    xs = merged_abscissae(Z, Y)
    d = Y.values(xs) - Z.values(xs)
    return bool(np.any(d > eps * max(1.0, Z.ys[0], Y.ys[0])))


def _wit(Z: PiecewiseLinear, Y: PiecewiseLinear, **extra: Any) -> dict[str, Any]:
    return {**extra, "Z": knots_of(Z), "Y": knots_of(Y)}


def _existence_property(B: BundleSpec, prop: AxiomId, family: Sequence[PiecewiseLinear], grid: int,
                        eps: float) -> AxiomVerdict:
    antecedent = {
        AxiomId.W1: lambda Z, Y: _le(Z, Y) and not Z.same_as(Y),
        AxiomId.W2: lambda Z, Y: _somewhere_below(Z, Y, eps),
        AxiomId.WL: lambda Z, Y: dominates_nn(Z, Y, eps).relation is Relation.LESS_NEQ,
    }[prop]
    counts = {"checked": 0, "violated": 0, "undetermined": 0}
    wits: list[dict[str, Any]] = []
    for Z, Y in _pairs(family):
        if not antecedent(Z, Y):
            continue
        counts["checked"] += 1
        status, _ = exists_smaller(B, Z, Y, grid, eps)
        if status == "none":
            counts["violated"] += 1
            t = _common_grid(B, Z, Y, 3)
            sample = {"theta": t[0], "m_Z": _eval(B, Z, t[0]), "m_Y": _eval(B, Y, t[0])} if t else {}
            wits.append(_wit(Z, Y, **sample))
        elif status == "undetermined":
            counts["undetermined"] += 1
    return combine(prop, counts, wits[:3], [f"θ searched on a {grid}-point grid"], grid_based=True)


def _check_ces(B: BundleSpec, family: Sequence[PiecewiseLinear], grid: int, eps: float) -> AxiomVerdict:
    counts = {"checked": 0, "violated": 0, "undetermined": 0}
    wits: list[dict[str, Any]] = []
    for i, Z in enumerate(family):
        for Y in family[i + 1:]:
            if Y.T != Z.T or Y.same_as(Z):
                continue
            counts["checked"] += 1
            differs = near = False
            for t in _common_grid(B, Z, Y, grid):
                mz, my = _eval(B, Z, t), _eval(B, Y, t)
                if mz is None or my is None:
                    continue
                if abs(my - mz) > _tol(mz, my, eps):
                    differs = True
                    break
                near = near or my != mz
            if differs:
                continue
            if near:
                counts["undetermined"] += 1
            else:
                counts["violated"] += 1
                wits.append(_wit(Z, Y))
    return combine(AxiomId.CES, counts, wits[:3], [f"θ searched on a {grid}-point grid"], grid_based=True)


def _check_ped(B: BundleSpec, family: Sequence[PiecewiseLinear], grid: int, eps: float) -> AxiomVerdict:
    """Values must be ranks in ``[0, T]``; with a descriptor ``f`` we also need ``Z(m_θ) = f(θ, m_θ)``."""
    counts = {"checked": 0, "violated": 0, "undetermined": 0}
    wits: list[dict[str, Any]] = []
    f = B.ped_descriptor
    for Z in family:
        counts["checked"] += 1
        for t in (t for t in B.admissible(Z).grid(grid) if math.isfinite(t)):
            x = _eval(B, Z, t)
            if x is None:
                continue
            if not -_tol(x, Z.T, eps) <= x <= Z.T + _tol(x, Z.T, eps):
                counts["violated"] += 1
                wits.append({"theta": t, "value": x, "T": Z.T, "reason": "value is not a rank",
                             "Z": knots_of(Z)})
                break
            if f is not None:
                x = min(max(x, 0.0), Z.T)
                zx, fx = evaluate(Z, x), f(t, x)
                if abs(zx - fx) > _tol(zx, fx, 1e-9):
                    counts["violated"] += 1
                    wits.append({"theta": t, "value": x, "Z_at": zx, "f_at": fx,
                                 "reason": "descriptor mismatch", "Z": knots_of(Z)})
                    break
    notes = []
    if counts["violated"] == 0 and f is None:
        # look for two functions whose values coincide at a rank where the functions differ
        for Z, Y in _pairs(family):
            for t in _common_grid(B, Z, Y, grid):
                xz, xy = _eval(B, Z, t), _eval(B, Y, t)
                if xz is None or xy is None or abs(xz - xy) > _tol(xz, xy, eps):
                    continue
                zx, yx = evaluate(Z, xz), evaluate(Y, xz)
                if abs(zx - yx) > _tol(zx, yx, 1e-9):
                    counts["violated"] += 1
                    wits.append(_wit(Z, Y, theta=t, value=xz, reason="same value, different heights"))
                    break
            if counts["violated"]:
                break
        if not counts["violated"]:
            counts["undetermined"] += 1
            notes.append("no descriptor supplied and no refutation found")
    return combine(AxiomId.PED, counts, wits[:3], notes, grid_based=True)


def _check_ib(B: BundleSpec, family: Sequence[PiecewiseLinear], grid: int, eps: float) -> AxiomVerdict:
    parts = check_bundle_axioms(B, family, min(grid, 65), eps)
    outcomes = [p.outcome for p in parts]
    if Outcome.VIOLATED in outcomes:
        outcome = Outcome.VIOLATED
    elif Outcome.UNDETERMINED in outcomes:
        outcome = Outcome.UNDETERMINED
    else:
        outcome = Outcome.HOLDS
    wits = [w for p in parts for w in p.witnesses][:3]
    return AxiomVerdict(AxiomId.IB, outcome, wits, [], True, {p.axiom.value: p.outcome.value for p in parts})


def _check_gib(B: BundleSpec, family: Sequence[PiecewiseLinear], grid: int, eps: float) -> AxiomVerdict:
    counts = {"checked": 0, "violated": 0, "undetermined": 0}
    wits: list[dict[str, Any]] = []
    for Z, Y in _pairs(family):
        ps = prefix_structure(Z, Y, eps)
        if ps.start == "below":
            # the window may reach b itself only when the strict relation survives there
            tests = [("a", None, ps.b * f) for f in (0.25, 0.5, 0.75, 1.0)
                     if 0 < ps.b * f <= Z.T and (f < 1.0 or ps.b_closed)]
        elif ps.start == "equal" and ps.after == "below":
            tests = [("ab", ps.a, ps.a + (ps.b - ps.a) * f) for f in (0.25, 0.5, 1.0)
                     if f < 1.0 or ps.b_closed]
        else:
            continue
        for kind, a, b in tests:
            counts["checked"] += 1
            cmp = bundle_less_a(B, Z, Y, b, grid, eps) if kind == "a" else \
                bundle_less_ab(B, Z, Y, a, b, grid, eps)  # type: ignore[arg-type]
            if cmp.relation == "not_less":
                counts["violated"] += 1
                t, mz, my = cmp.witnesses[0]
                wits.append(_wit(Z, Y, a=a if kind == "ab" else b, b=b if kind == "ab" else None,
                                 theta=t, m_Z=mz, m_Y=my))
                break
            if cmp.relation == "undetermined":
                counts["undetermined"] += 1
    return combine(AxiomId.GIB, counts, wits[:3], [f"θ checked on a {grid}-point grid"], grid_based=True)


def check_bundle_property(B: BundleSpec, prop: AxiomId | str, family: Sequence[PiecewiseLinear],
                          grid: int = DEFAULT_GRID, eps: float = EPS) -> AxiomVerdict:
    """Check one bundle property on ``family`` (pairs are taken within a common ``T``)."""
    prop = AxiomId(prop)
    if prop not in BUNDLE_PROPERTIES:
        raise ValueError(f"{prop.value} is not a bundle property")
    if not family:
        raise ValueError("family must be nonempty")
    if prop is AxiomId.CES:
        v = _check_ces(B, family, grid, eps)
    elif prop is AxiomId.PED:
        v = _check_ped(B, family, grid, eps)
    elif prop is AxiomId.IB:
        v = _check_ib(B, family, grid, eps)
    elif prop is AxiomId.GIB:
        v = _check_gib(B, family, grid, eps)
    else:
        v = _existence_property(B, prop, family, grid, eps)
    v.details["bundle"] = B.kind
    return v
