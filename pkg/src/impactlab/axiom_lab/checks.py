"""Requirement (I)–(IV) and strong-axiom (ax.1–ax.4) checks on finite families."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from typing import Any

import numpy as np

from ..dominance import gap_extrema, prefix_structure
from ..errors import BadDelta, ImpactError, InapplicableAxiom, NonZeroTail
from ..measures import MeasureKind, h_measure, localization
from ..profile import EPS, PiecewiseLinear, extend_with_zeros, merged_abscissae, shift, zero
from ..verdicts import AxiomId, AxiomVerdict, Outcome, combine, knots_of
from .search import DEFAULT_BUDGET, Evaluator, as_evaluator, probe_requirement
from .witnesses import plateau_lift, shift_down_clamped

__all__ = ["a_grid", "check_measure_axiom", "check_strong_axioms", "strictly_above_on", "strong_order"]

MeasureLike = MeasureKind | Evaluator
_MEASURE_AXIOMS = {AxiomId.I, AxiomId.II, AxiomId.III_1, AxiomId.III_2, AxiomId.III,
                   AxiomId.III_prime, AxiomId.IV}


def _tol(*values: float, eps: float = EPS) -> float:
    return eps * max(1.0, *(abs(v) for v in values))


def _safe(m: Evaluator, Z: PiecewiseLinear) -> float | None:
    try:
        return m(Z)
    except ImpactError:
        return None


def strictly_above_on(Y: PiecewiseLinear, Z: PiecewiseLinear, a: float, eps: float = EPS) -> bool:
    """``Y > Z`` on ``[0, a]`` (exact for PL functions: check knots in the window and ``a``)."""
    if Y.T != Z.T:
        return False
    xs = [x for x in merged_abscissae(Y, Z) if x < a] + [a]
    d = Y.values(xs) - Z.values(xs)
    return bool(np.all(d > _tol(Y.ys[0], Z.ys[0], eps=eps)))


def _geq(Y: PiecewiseLinear, Z: PiecewiseLinear) -> bool:
    if Y.T != Z.T:
        return False
    xs = merged_abscissae(Y, Z)
    return bool(np.all(Y.values(xs) >= Z.values(xs)))


def a_grid(T: float, depth: int = 12) -> list[float]:
    return [T * (1 - 2.0 ** -k) for k in range(1, depth + 1)]


def _pairs(family: Sequence[PiecewiseLinear]) -> list[tuple[PiecewiseLinear, PiecewiseLinear]]:
    return [(Z, Y) for i, Z in enumerate(family) for j, Y in enumerate(family) if i != j and Z.T == Y.T]


# (I), (II), (IV) ---------------------------------------------------------------------


def _check_I(m: Evaluator, family: Sequence[PiecewiseLinear]) -> AxiomVerdict:
    counts = {"checked": 0, "violated": 0, "undetermined": 0}
    wits: list[dict[str, Any]] = []
    members = list(family) + [zero(T) for T in sorted({F.T for F in family})]
    skipped = 0
    for Z in members:
        v = _safe(m, Z)
        if v is None:
            skipped += 1
            continue
        counts["checked"] += 1
        if (v == 0) != Z.is_zero():
            counts["violated"] += 1
            wits.append({"m_Z": v, "Z": knots_of(Z)})
    notes = [f"{skipped} member(s) outside the measure's domain skipped"] if skipped else []
    return combine(AxiomId.I, counts, wits[:3], notes)


def _monotone_pairs(family: Sequence[PiecewiseLinear], perturb: bool) -> list[tuple[PiecewiseLinear, PiecewiseLinear, str]]:
    """``(small, big, origin)`` with ``big >= small`` pointwise."""
    out = [(Z, Y, "family") for Z, Y in _pairs(family) if _geq(Y, Z) and not Y.same_as(Z)]
    if not perturb:
        return out
    for Z in family:
        top = max(Z.ys[0], 1.0)
        for r in (0.01, 0.1, 1.0):
            out.append((Z, shift(Z, r * top), "shift_up"))
        for r in (0.2, 0.4, 0.5, 0.6, 0.8):
            lv = r * Z.ys[0]
            if lv > Z.ys[-1]:
                out.append((Z, plateau_lift(Z, lv), "plateau_lift"))
        if Z.is_strictly_decreasing() and Z.ys[-1] == 0:
            try:
                res = shift_down_clamped(Z)
                out.append((res.Y, Z, "shift_down_clamped"))
            except (BadDelta, ImpactError):
                pass
    return out


def _check_II(m: Evaluator, family: Sequence[PiecewiseLinear], perturb: bool) -> AxiomVerdict:
    counts = {"checked": 0, "violated": 0, "undetermined": 0}
    wits: list[dict[str, Any]] = []
    for small, big, origin in _monotone_pairs(family, perturb):
        ms, mb = _safe(m, small), _safe(m, big)
        if ms is None or mb is None:
            continue
        counts["checked"] += 1
        if mb < ms - _tol(ms, mb):
            counts["violated"] += 1
            wits.append({"origin": origin, "m_Z": ms, "m_Y": mb, "Z": knots_of(small), "Y": knots_of(big)})
    return combine(AxiomId.II, counts, wits[:3], ["Z <= Y pointwise; violation means m(Y) < m(Z)"])


def _check_IV(m: Evaluator, family: Sequence[PiecewiseLinear]) -> AxiomVerdict:
    counts = {"checked": 0, "violated": 0, "undetermined": 0}
    wits: list[dict[str, Any]] = []
    strict = 0
    for Z in family:
        for factor in (1.5, 2.0):
            try:
                W = extend_with_zeros(Z, Z.T * factor)
            except NonZeroTail:
                continue
            mz, mw = _safe(m, Z), _safe(m, W)
            if mz is None or mw is None:
                continue
            counts["checked"] += 1
            tol = _tol(mz, mw)
            if mw > mz + tol:
                counts["violated"] += 1
                wits.append({"W": Z.T * factor, "m_Z": mz, "m_Y": mw, "Z": knots_of(Z), "Y": knots_of(W)})
            elif mw < mz - tol:
                strict += 1
    v = combine(AxiomId.IV, counts, wits[:3])
    if v.outcome is Outcome.HOLDS:
        v.details["type"] = "IV.2" if strict else "IV.1"
    return v


# (III.1), (III.2), (III), (III') --------------------------------------------------------


def _window_counterexample(m: Evaluator, Z: PiecewiseLinear, requirement: str, a: float,
                           family: Sequence[PiecewiseLinear], budget: int,
                           perturb: bool) -> dict[str, Any] | None:
    mz = _safe(m, Z)
    if mz is None:
        return None
    for Y in family:
        if Y is Z or Y.T != Z.T:
            continue
        if requirement == "III_1" and strictly_above_on(Y, Z, a):
            bad = lambda my: my <= mz  # noqa: E731
        elif requirement == "III_2" and strictly_above_on(Z, Y, a):
            bad = lambda my: my >= mz  # noqa: E731
        else:
            continue
        my = _safe(m, Y)
        if my is not None and bad(my):
            return {"a": a, "origin": "family", "m_Z": mz, "m_Y": my, "Z": knots_of(Z), "Y": knots_of(Y)}
    if perturb:
        res = probe_requirement(m, Z, requirement, a, budget)
        if res.violated:
            return {**res.witness, "origin": "search"}  # type: ignore[dict-item]
    return None


def _check_window(m: Evaluator, axiom: AxiomId, family: Sequence[PiecewiseLinear], budget: int,
                  perturb: bool, anchors: Callable[[PiecewiseLinear], list[float]]) -> AxiomVerdict:
    requirement = axiom.value
    counts = {"checked": 0, "violated": 0, "undetermined": 0}
    wits: list[dict[str, Any]] = []
    found_a: list[float | None] = []
    for Z in family:
        if Z.is_zero() and requirement == "III_2":
            found_a.append(Z.T / 2)  # nothing lies below the zero function
            continue
        cands = sorted(set(anchors(Z)))
        per = max(budget // max(len(cands) * len(family), 1), 200)
        counts["checked"] += 1
        last = None
        good = None
        for a in cands:
            w = _window_counterexample(m, Z, requirement, a, family, per, perturb)
            if w is None:
                good = a
                break
            last = w
        found_a.append(good)
        if good is None:
            counts["violated"] += 1
            if last is not None:
                wits.append(last)
    v = combine(axiom, counts, wits[:3], ["search-based over candidate windows"], grid_based=True)
    v.details["a_values"] = found_a
    return v


def _anchor_fn(kind: MeasureKind | None) -> Callable[[PiecewiseLinear], list[float]]:
    def anchors(Z: PiecewiseLinear) -> list[float]:
        pts = a_grid(Z.T)
        if kind is not None:
            try:
                loc = localization(kind, Z)
                for p in (loc.c, loc.d):
                    if p is not None and 0 < p < Z.T:
                        pts.append(p)
            except ImpactError:
                pass
        return pts
    return anchors


def check_measure_axiom(measure: MeasureLike, axiom: AxiomId | str, family: Sequence[PiecewiseLinear],
                        budget: int = DEFAULT_BUDGET, seed: int = 0, perturb: bool = True) -> AxiomVerdict:
    """Check one requirement on ``family`` (plus generated perturbations when ``perturb``).

    The search is deterministic; ``seed`` is recorded for provenance only.
    """
    axiom = AxiomId(axiom)
    if axiom not in _MEASURE_AXIOMS:
        raise InapplicableAxiom(f"{axiom.value} is not a single-measure requirement")
    if not family:
        raise ValueError("family must be nonempty")
    m, label = as_evaluator(measure)
    kind = measure if isinstance(measure, MeasureKind) else None
    if axiom is AxiomId.I:
        v = _check_I(m, family)
    elif axiom is AxiomId.II:
        v = _check_II(m, family, perturb)
    elif axiom is AxiomId.IV:
        v = _check_IV(m, family)
    elif axiom in (AxiomId.III_1, AxiomId.III_2):
        v = _check_window(m, axiom, family, budget, perturb, _anchor_fn(kind))
    elif axiom is AxiomId.III:
        parts = [_check_window(m, ax, family, budget // 2, perturb, _anchor_fn(kind))
                 for ax in (AxiomId.III_1, AxiomId.III_2)]
        v = _merge(AxiomId.III, parts)
    else:
        v = _check_prime(m, family, budget, perturb, _anchor_fn(kind))
    v.details.update({"measure": label, "seed": seed})
    return v


def _merge(axiom: AxiomId, parts: list[AxiomVerdict]) -> AxiomVerdict:
    order = [Outcome.VIOLATED, Outcome.UNDETERMINED, Outcome.HOLDS, Outcome.VACUOUS]
    outcome = min((p.outcome for p in parts), key=order.index)
    wits = [w for p in parts for w in p.witnesses][:3]
    return AxiomVerdict(axiom, outcome, wits, [n for p in parts for n in p.notes], True,
                        {p.axiom.value: p.outcome.value for p in parts})


def _check_prime(m: Evaluator, family: Sequence[PiecewiseLinear], budget: int, perturb: bool,
                 anchors: Callable[[PiecewiseLinear], list[float]]) -> AxiomVerdict:
    """(III′) with a window shared by the pair: ``Y ≫ Z`` on ``[0, a]`` must give ``m(Y) > m(Z)``.

    (III.1) or (III.2) on the family implies (III′); when both fail we search
    for pairs refuting every candidate window.
    """
    parts = [_check_window(m, ax, family, budget // 2, perturb, anchors)
             for ax in (AxiomId.III_1, AxiomId.III_2)]
    if any(p.outcome in (Outcome.HOLDS, Outcome.VACUOUS) for p in parts):
        return AxiomVerdict(AxiomId.III_prime, Outcome.HOLDS, [], ["implied by (III.1) or (III.2)"], True,
                            {p.axiom.value: p.outcome.value for p in parts})
    counts = {"checked": 0, "violated": 0, "undetermined": 0}
    wits: list[dict[str, Any]] = []
    for Z in family:
        counts["checked"] += 1
        refuted_all = True
        last = None
        for a in anchors(Z):
            w = _window_counterexample(m, Z, "III_1", a, family, max(budget // 50, 200), perturb)
            if w is None:
                refuted_all = False
                break
            last = w
        if refuted_all:
            counts["violated"] += 1
            if last is not None:
                wits.append(last)
    return combine(AxiomId.III_prime, counts, wits[:3], ["search-based over candidate windows"], True)


# strong axioms -----------------------------------------------------------------------------


def strong_order(Z: PiecewiseLinear, Y: PiecewiseLinear, eps: float = EPS) -> bool:
    """``M(Z) < M(Y)`` on ``]0, T[``: ``Z(0) < Y(0)`` and ``I_Z < I_Y`` at every interior extremum."""
    if Z.T != Y.T:
        return False
    if not Y.ys[0] - Z.ys[0] > _tol(Y.ys[0], Z.ys[0], eps=eps):
        return False
    tol_i = _tol(Z.integral.total, Y.integral.total, eps=eps)
    T = Z.T
    for x, D in gap_extrema(Z, Y):
        if 0 < x < T and not D > tol_i:
            return False
        if x == T and D < -tol_i:
            return False
    return True


def _anchor_point(kind: MeasureKind | None, Z: PiecewiseLinear) -> float | None:
    if kind is None:
        return None
    try:
        loc = localization(kind, Z)
        return loc.c if loc.c is not None else h_measure(Z)
    except ImpactError:
        return None


def check_strong_axioms(measure: MeasureLike, family: Sequence[PiecewiseLinear],
                        grid: int = 1000, eps: float = EPS) -> list[AxiomVerdict]:
    """ax.1–ax.4.  ``grid`` sets the sampling used to report the minimal gap of ``M`` curves."""
    if not family:
        raise ValueError("family must be nonempty")
    m, label = as_evaluator(measure)
    kind = measure if isinstance(measure, MeasureKind) else None
    out = []

    v = _check_I(m, family)
    out.append(AxiomVerdict(AxiomId.ax1, v.outcome, v.witnesses, v.notes, False, v.details))

    counts = {"checked": 0, "violated": 0, "undetermined": 0}
    wits: list[dict[str, Any]] = []
    for Z, Y in _pairs(family):
        if not _geq(Y, Z):
            continue
        mz, my = _safe(m, Z), _safe(m, Y)
        if mz is None or my is None:
            continue
        counts["checked"] += 1
        if my < mz - _tol(mz, my, eps=eps):
            counts["violated"] += 1
            wits.append({"m_Z": mz, "m_Y": my, "Z": knots_of(Z), "Y": knots_of(Y)})
    out.append(combine(AxiomId.ax2, counts, wits[:3]))

    counts = {"checked": 0, "violated": 0, "undetermined": 0}
    wits = []
    for Z, Y in _pairs(family):
        if not strong_order(Z, Y, eps):
            continue
        mz, my = _safe(m, Z), _safe(m, Y)
        if mz is None or my is None:
            continue
        counts["checked"] += 1
        gap = my - mz
        if gap > _tol(mz, my, eps=eps):
            continue
        if gap != 0 and gap > -_tol(mz, my, eps=eps):
            counts["undetermined"] += 1
            continue
        counts["violated"] += 1
        xs = np.linspace(0, Z.T, grid + 1)[1:]
        min_gap = float(np.min(Y.integral.eval_many(xs) / xs - Z.integral.eval_many(xs) / xs))
        wits.append({"m_Z": mz, "m_Y": my, "min_M_gap": min_gap, "Z": knots_of(Z), "Y": knots_of(Y)})
    out.append(combine(AxiomId.ax3, counts, wits[:3], ["pairs with M(Z) < M(Y) on ]0,T["]))

    counts = {"checked": 0, "violated": 0, "undetermined": 0}
    wits = []
    notes = []
    if kind is None:
        notes.append("no anchor a_X known for a custom evaluator")
    else:
        for Z, Y in _pairs(family):
            ps = prefix_structure(Z, Y, eps)
            az, ay = _anchor_point(kind, Z), _anchor_point(kind, Y)
            if ps.start != "equal" or az is None or ay is None or ps.a < min(az, ay):
                continue
            mz, my = _safe(m, Z), _safe(m, Y)
            if mz is None or my is None:
                continue
            counts["checked"] += 1
            if abs(mz - my) > _tol(mz, my, eps=1e-9):
                counts["violated"] += 1
                wits.append({"m_Z": mz, "m_Y": my, "Z": knots_of(Z), "Y": knots_of(Y)})
    out.append(combine(AxiomId.ax4, counts, wits[:3], notes))
    for v in out:
        v.details["measure"] = label
    return out
