"""Bundles ``(m, ψ)``: parameterized measure families with a scanning injection.

Universal statements over the parameter ``θ`` are evaluated on grids.  Bounded
parameter sets use equispaced grids; unbounded ones are compactified through
``θ ↦ θ/(1+θ)`` so the grid reaches far into the tail without including ``∞``.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np

from .dominance import prefix_structure
from .errors import (
    BadIndex,
    BadInterval,
    DigitOutOfRange,
    InadmissibleParameter,
    MixedPsiDirections,
    OutOfDomain,
    Undefined,
)
from .measures import g_measure, h_measure, truncated
from .profile import EPS, PiecewiseLinear, average_curve, evaluate, merged_abscissae, zero
from .verdicts import AxiomId, AxiomVerdict, combine, knots_of

__all__ = [
    "BundleComparison",
    "BundleSpec",
    "Interval",
    "average_bundle",
    "bundle_eval",
    "bundle_less_a",
    "bundle_less_ab",
    "check_bundle_axioms",
    "custom_bundle",
    "g_bundle",
    "h_bundle",
    "kosmulski_bundle",
    "percentile_bundle",
    "psi_value",
    "radix_measure",
    "radix_value_exact",
    "theta_set",
    "total_bundle",
]

DEFAULT_GRID = 257


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float
    lo_closed: bool = True
    hi_closed: bool = True

    @property
    def empty(self) -> bool:
        if self.lo > self.hi:
            return True
        return self.lo == self.hi and not (self.lo_closed and self.hi_closed)

    def contains(self, t: float) -> bool:
        if t < self.lo or t > self.hi:
            return False
        if t == self.lo and not self.lo_closed:
            return False
        return not (t == self.hi and not self.hi_closed)

    def intersect(self, other: Interval) -> Interval:
        if self.lo > other.lo:
            lo, lc = self.lo, self.lo_closed
        elif other.lo > self.lo:
            lo, lc = other.lo, other.lo_closed
        else:
            lo, lc = self.lo, self.lo_closed and other.lo_closed
        if self.hi < other.hi:
            hi, hc = self.hi, self.hi_closed
        elif other.hi < self.hi:
            hi, hc = other.hi, other.hi_closed
        else:
            hi, hc = self.hi, self.hi_closed and other.hi_closed
        return Interval(lo, hi, lc, hc and math.isfinite(hi))

    def overlaps(self, other: Interval) -> bool:
        return not self.intersect(other).empty or self.hi == other.lo or other.hi == self.lo

    def hull(self, other: Interval) -> Interval:
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        lc = (self.lo_closed if self.lo == lo else False) or (other.lo_closed if other.lo == lo else False)
        hc = (self.hi_closed if self.hi == hi else False) or (other.hi_closed if other.hi == hi else False)
        return Interval(lo, hi, lc, hc and math.isfinite(hi))

    def grid(self, n: int = DEFAULT_GRID) -> list[float]:
        if self.empty:
            return []
        if self.lo == self.hi:
            return [self.lo]
        if math.isfinite(self.hi):
            pts = [self.lo + (self.hi - self.lo) * k / (n - 1) for k in range(n)]
            pts[-1] = self.hi
            if not self.hi_closed:
                pts = pts[:-1]
        else:
            u0 = self.lo / (1 + self.lo)
            pts = [u / (1 - u) for u in (u0 + (1 - u0) * k / n for k in range(n))]
            pts[0] = self.lo
        if not self.lo_closed:
            pts = pts[1:]
        return pts

    def describe(self) -> str:
        lb = "[" if self.lo_closed else "]"
        rb = "]" if self.hi_closed else "["
        return f"{lb}{self.lo:.6g}, {self.hi:.6g}{rb}"


Direction = str  # "increasing" or "decreasing"


@dataclass(frozen=True)
class BundleSpec:
    """A bundle: evaluator ``m_θ(Z)``, scanning map ``ψ_Z(x)`` and admissible set ``Q_Z``."""

    kind: str
    evaluator: Callable[[PiecewiseLinear, float], float]
    psi: Callable[[PiecewiseLinear, float], float]
    direction: Direction | Callable[[PiecewiseLinear], Direction]
    admissible: Callable[[PiecewiseLinear], Interval]
    ped_descriptor: Callable[[float, float], float] | None = None
    description: str = ""

    def direction_for(self, Z: PiecewiseLinear) -> Direction:
        return self.direction(Z) if callable(self.direction) else self.direction


def _identity_psi(Z: PiecewiseLinear, x: float) -> float:
    if not 0 <= x <= Z.T:
        raise OutOfDomain(f"x={x!r} outside [0, {Z.T!r}]")
    return float(x)


def _full(Z: PiecewiseLinear) -> Interval:
    return Interval(0.0, Z.T)


def total_bundle() -> BundleSpec:
    return BundleSpec("TotalBundle", lambda Z, t: truncated("total", Z, t), _identity_psi,
                      "increasing", lambda Z: Interval(0.0, Z.T, False, True),
                      description="truncated totals I_θ")


def average_bundle() -> BundleSpec:
    return BundleSpec("AverageBundle", average_curve, _identity_psi, "increasing", _full,
                      description="truncated averages μ_θ")


def percentile_bundle() -> BundleSpec:
    return BundleSpec("PercentileBundle", evaluate, _identity_psi, "increasing",
                      lambda Z: Interval(0.0, Z.T, True, False),
                      description="values Z(θ) at rank θ")


def _ratio_psi(power: float) -> Callable[[PiecewiseLinear, float], float]:
    def psi(Z: PiecewiseLinear, x: float) -> float:
        if not 0 <= x <= Z.T:
            raise OutOfDomain(f"x={x!r} outside [0, {Z.T!r}]")
        if x == 0:
            return math.inf if Z.ys[0] > 0 else 0.0
        return evaluate(Z, x) / x ** power
    return psi


def _g_psi(Z: PiecewiseLinear, x: float) -> float:
    if not 0 <= x <= Z.T:
        raise OutOfDomain(f"x={x!r} outside [0, {Z.T!r}]")
    if x == 0:
        return math.inf if Z.ys[0] > 0 else 0.0
    return Z.integral.eval(x) / (x * x)


def _lower_ray(lo: float) -> Interval:
    return Interval(lo, math.inf, lo > 0, False)


def h_bundle() -> BundleSpec:
    return BundleSpec("HBundle", h_measure, _ratio_psi(1.0), "decreasing",
                      lambda Z: _lower_ray(Z.ys[-1] / Z.T),
                      ped_descriptor=lambda th, x: th * x,
                      description="generalized h-indices h_θ")


def kosmulski_bundle(p: float) -> BundleSpec:
    return BundleSpec(f"KosmulskiBundle({p:g})", lambda Z, t: h_measure(Z, t, p), _ratio_psi(p),
                      "decreasing", lambda Z: _lower_ray(Z.ys[-1] / Z.T ** p),
                      ped_descriptor=lambda th, x: th * x ** p,
                      description=f"Kosmulski indices with exponent {p:g}")


def g_bundle() -> BundleSpec:
    return BundleSpec("GBundle", g_measure, _g_psi, "decreasing",
                      lambda Z: _lower_ray(Z.integral.total / Z.T ** 2),
                      description="generalized g-indices g_θ")


def custom_bundle(description: str, evaluator: Callable[[PiecewiseLinear, float], float],
                  psi: Callable[[PiecewiseLinear, float], float] | None = None,
                  direction: Direction | Callable[[PiecewiseLinear], Direction] = "increasing",
                  admissible: Callable[[PiecewiseLinear], Interval] | None = None,
                  ped_descriptor: Callable[[float, float], float] | None = None) -> BundleSpec:
    return BundleSpec(f"Custom({description})", evaluator, psi or _identity_psi, direction,
                      admissible or _full, ped_descriptor, description)


def bundle_eval(B: BundleSpec, Z: PiecewiseLinear, theta: float) -> float:
    Q = B.admissible(Z)
    if not Q.contains(theta):
        raise InadmissibleParameter(f"θ={theta!r} outside admissible set {Q.describe()}")
    return B.evaluator(Z, theta)


def psi_value(B: BundleSpec, Z: PiecewiseLinear, x: float) -> float:
    return B.psi(Z, x)


# θ-sets and comparisons --------------------------------------------------------


def _image(B: BundleSpec, Z: PiecewiseLinear, x0: float, x1: float, c0: bool, c1: bool) -> Interval:
    p0, p1 = B.psi(Z, x0), B.psi(Z, x1)
    if B.direction_for(Z) == "increasing":
        return Interval(p0, p1, c0 and math.isfinite(p0), c1 and math.isfinite(p1))
    return Interval(p1, p0, c1 and math.isfinite(p1), c0 and math.isfinite(p0))


def _common_direction(B: BundleSpec, Z: PiecewiseLinear, Y: PiecewiseLinear) -> Direction:
    dz, dy = B.direction_for(Z), B.direction_for(Y)
    if dz != dy:
        raise MixedPsiDirections(f"ψ directions differ: {dz} vs {dy}")
    return dz


def theta_set(B: BundleSpec, Z: PiecewiseLinear, Y: PiecewiseLinear, x0: float, x1: float,
              closed_left: bool = True, grid: int = DEFAULT_GRID) -> tuple[list[float], str]:
    """Grid on ``ψ_Z(I) ∪ ψ_Y(I)`` intersected with ``Q_Z ∩ Q_Y`` for ``I = [x0, x1]``."""
    _common_direction(B, Z, Y)
    Q = B.admissible(Z).intersect(B.admissible(Y))
    parts = [_image(B, F, x0, x1, closed_left, True).intersect(Q) for F in (Z, Y)]
    parts = [p for p in parts if not p.empty]
    if len(parts) == 2 and parts[0].overlaps(parts[1]):
        parts = [parts[0].hull(parts[1])]
    thetas = sorted({t for p in parts for t in p.grid(grid) if math.isfinite(t)})
    return thetas, " ∪ ".join(p.describe() for p in parts) or "∅"


@dataclass(frozen=True)
class BundleComparison:
    relation: str
    theta_set: str
    grid_used: int
    witnesses: tuple[tuple[float, float, float], ...] = ()
    grid_based: bool = True


def _gaps(B: BundleSpec, Z: PiecewiseLinear, Y: PiecewiseLinear,
          thetas: Sequence[float]) -> list[tuple[float, float, float]]:
    return [(t, B.evaluator(Z, t), B.evaluator(Y, t)) for t in thetas]


def _tol(mz: float, my: float, eps: float) -> float:
    return eps * max(1.0, abs(mz), abs(my))


def _strict_status(rows: Sequence[tuple[float, float, float]], eps: float) -> tuple[str, tuple]:
    """``less`` if every row has ``m(Y) - m(Z) > tol``; otherwise the first offending row."""
    near = None
    for t, mz, my in rows:
        g = my - mz
        tol = _tol(mz, my, eps)
        if g > tol:
            continue
        if g < -tol or g == 0.0:
            return "not_less", ((t, mz, my),)
        near = near or (t, mz, my)
    if near is not None:
        return "undetermined", (near,)
    return "less", ()


def bundle_less_a(B: BundleSpec, Z: PiecewiseLinear, Y: PiecewiseLinear, a: float,
                  grid: int = DEFAULT_GRID, eps: float = EPS) -> BundleComparison:
    """Is ``m(Z) <_a m(Y)``, i.e. strictly smaller on ``ψ_Z([0,a]) ∪ ψ_Y([0,a])``?"""
    thetas, desc = theta_set(B, Z, Y, 0.0, a, True, grid)
    status, wit = _strict_status(_gaps(B, Z, Y, thetas), eps)
    rel = "less_a" if status == "less" else status
    return BundleComparison(rel, desc, len(thetas), wit)


def bundle_less_ab(B: BundleSpec, Z: PiecewiseLinear, Y: PiecewiseLinear, a: float, b: float,
                   grid: int = DEFAULT_GRID, eps: float = EPS) -> BundleComparison:
    """Equal on the image of ``[0,a]`` and strictly smaller on the image of ``]a,b]``."""
    T = min(Z.T, Y.T)
    if not 0 <= a < b <= T:
        raise BadInterval(f"need 0 <= a < b <= T, got a={a!r}, b={b!r}")
    eq_thetas, eq_desc = theta_set(B, Z, Y, 0.0, a, True, grid)
    for t, mz, my in _gaps(B, Z, Y, eq_thetas):
        if abs(my - mz) > _tol(mz, my, eps):
            return BundleComparison("not_less", eq_desc, len(eq_thetas), ((t, mz, my),))
    st_thetas, st_desc = theta_set(B, Z, Y, a, b, False, grid)
    status, wit = _strict_status(_gaps(B, Z, Y, st_thetas), eps)
    rel = "less_ab" if status == "less" else status
    return BundleComparison(rel, f"= on {eq_desc}; < on {st_desc}",
                            len(eq_thetas) + len(st_thetas), wit)


# sheaf axioms --------------------------------------------------------------------


def _safe_eval(B: BundleSpec, Z: PiecewiseLinear, t: float) -> float | None:
    try:
        return B.evaluator(Z, t)
    except (Undefined, OutOfDomain, InadmissibleParameter):
        return None


def _pointwise_geq(Y: PiecewiseLinear, Z: PiecewiseLinear) -> bool:
    if Y.T != Z.T:
        return False
    xs = merged_abscissae(Y, Z)
    return bool(np.all(Y.values(xs) >= Z.values(xs)))


def check_bundle_axioms(B: BundleSpec, family: Sequence[PiecewiseLinear], grid: int = 65,
                        eps: float = EPS) -> list[AxiomVerdict]:
    """AX.1 to AX.4 on a finite family (grid-based for the θ quantifiers)."""
    if not family:
        raise ValueError("family must be nonempty")
    out: list[AxiomVerdict] = []

    # AX.1
    counts = {"checked": 0, "violated": 0, "undetermined": 0}
    wits: list[dict[str, Any]] = []
    for T in sorted({F.T for F in family}):
        O = zero(T)
        for t in B.admissible(O).grid(grid):
            if not math.isfinite(t):
                continue
            v = _safe_eval(B, O, t)
            counts["checked"] += 1
            if v is None:
                counts["undetermined"] += 1
            elif abs(v) > eps:
                counts["violated"] += 1
                wits.append({"theta": t, "value": v, "Z": knots_of(O)})
                break
    out.append(combine(AxiomId.AX1, counts, wits[:3], grid_based=True))

    pairs = [(Z, Y) for i, Z in enumerate(family) for j, Y in enumerate(family) if i != j and Z.T == Y.T]

    # AX.2
    counts = {"checked": 0, "violated": 0, "undetermined": 0}
    wits = []
    for Z, Y in pairs:
        if not _pointwise_geq(Y, Z) or Y.same_as(Z):
            continue
        counts["checked"] += 1
        Q = B.admissible(Z).intersect(B.admissible(Y))
        for t in Q.grid(grid):
            mz, my = _safe_eval(B, Z, t), _safe_eval(B, Y, t)
            if mz is None or my is None:
                continue
            if my < mz - _tol(mz, my, eps):
                counts["violated"] += 1
                wits.append({"theta": t, "m_Z": mz, "m_Y": my, "Z": knots_of(Z), "Y": knots_of(Y)})
                break
    out.append(combine(AxiomId.AX2, counts, wits[:3], grid_based=True))

    # AX.3
    counts = {"checked": 0, "violated": 0, "undetermined": 0}
    wits = []
    for Z, Y in pairs:
        ps = prefix_structure(Z, Y, eps)
        if ps.start != "below":
            continue
        for frac in (0.25, 0.5, 0.75):
            a = ps.b * frac
            if not 0 < a < Z.T:
                continue
            counts["checked"] += 1
            cmp = bundle_less_a(B, Z, Y, a, grid, eps)
            if cmp.relation == "not_less":
                counts["violated"] += 1
                t, mz, my = cmp.witnesses[0]
                wits.append({"a": a, "theta": t, "m_Z": mz, "m_Y": my,
                             "Z": knots_of(Z), "Y": knots_of(Y)})
                break
            if cmp.relation == "undetermined":
                counts["undetermined"] += 1
    notes = [] if counts["checked"] else ["no pair in the family is strictly ordered on an initial window"]
    out.append(combine(AxiomId.AX3, counts, wits[:3], notes, grid_based=True))

    # AX.4
    counts = {"checked": 0, "violated": 0, "undetermined": 0}
    wits = []
    for Z, Y in pairs:
        ps = prefix_structure(Z, Y, eps)
        if ps.start != "equal" or ps.a <= 0:
            continue
        counts["checked"] += 1
        a = ps.a
        bad = None
        for k in range(1, 9):
            x = a * k / 8
            pz, py = B.psi(Z, x), B.psi(Y, x)
            if abs(pz - py) > _tol(pz, py, 1e-9):
                bad = {"x": x, "psi_Z": pz, "psi_Y": py}
                break
        if bad is None:
            thetas, _ = theta_set(B, Z, Y, 0.0, a, True, grid)
            for t in thetas:
                mz, my = _safe_eval(B, Z, t), _safe_eval(B, Y, t)
                if mz is None or my is None:
                    continue
                if abs(mz - my) > _tol(mz, my, 1e-9):
                    bad = {"theta": t, "m_Z": mz, "m_Y": my}
                    break
        if bad is not None:
            counts["violated"] += 1
            wits.append({**bad, "a": a, "Z": knots_of(Z), "Y": knots_of(Y)})
    out.append(combine(AxiomId.AX4, counts, wits[:3], grid_based=True))
    return out


# radix example ----------------------------------------------------------------------


def radix_value_exact(digits: Sequence[int], base_c: int, theta: int) -> Fraction:
    if base_c < 1:
        raise DigitOutOfRange("base parameter c must be at least 1")
    for d in digits:
        if d != int(d) or not 0 <= d <= base_c:
            raise DigitOutOfRange(f"digit {d!r} outside 0..{base_c}")
    if not 1 <= theta <= len(digits) or theta != int(theta):
        raise BadIndex(f"index {theta!r} outside 1..{len(digits)}")
    return sum((Fraction(int(d), (base_c + 1) ** j) for j, d in enumerate(digits[: int(theta)])),
               Fraction(0))


def radix_measure(digits: Sequence[int], base_c: int, theta: int) -> float:
    """``Σ_{j<=θ} a_j / (c+1)^(j-1)``."""
    return float(radix_value_exact(digits, base_c, theta))
