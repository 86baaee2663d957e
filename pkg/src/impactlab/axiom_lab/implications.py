"""Implication matrix between the seven bundle properties over a battery of configurations."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

from ..bundles import (BundleSpec, average_bundle, custom_bundle, g_bundle, h_bundle, percentile_bundle,
                       total_bundle)
from ..generators import linear_family, random_dominated_pairs
from ..profile import PiecewiseLinear, evaluate, pl_from_points, scale
from ..verdicts import AxiomId, AxiomVerdict
from .fixtures import f7_pair, f8_functions, f9_functions, fixture_bundle
from .properties import BUNDLE_PROPERTIES, check_bundle_property

__all__ = ["ARROWS", "NON_IMPLICATIONS", "BatteryConfig", "ImplicationMatrix", "default_battery",
           "implication_matrix"]

PROPS = tuple(p.value for p in BUNDLE_PROPERTIES)

ARROWS: tuple[tuple[str, str], ...] = (
    ("PED", "W2"), ("W2", "CES"), ("CES", "W1"), ("W2", "WL"), ("WL", "W1"),
    ("GIB", "IB"), ("PED", "GIB"), ("GIB", "WL"),
)

# (antecedent, consequent) -> name of the configuration exhibiting the failure
NON_IMPLICATIONS: dict[tuple[str, str], str] = {
    ("W1", "WL"): "F8_four",
    ("CES", "WL"): "F8_pair",
    ("CES", "W2"): "F9",
    ("W2", "GIB"): "F7",
    ("WL", "GIB"): "F7",
    ("IB", "GIB"): "F7",
    ("W2", "PED"): "F7",
    ("GIB", "PED"): "average_random",
    ("WL", "CES"): "through_point",
    ("W1", "CES"): "through_point",
    ("WL", "W2"): "through_point",
    ("IB", "W1"): "common_start",
    ("W1", "IB"): "through_centre",
}


@dataclass(frozen=True)
class BatteryConfig:
    name: str
    bundle: BundleSpec
    family: tuple[PiecewiseLinear, ...]
    description: str = ""


def _closure(arrows: Sequence[tuple[str, str]]) -> set[tuple[str, str]]:
    out = set(arrows)
    changed = True
    while changed:
        changed = False
        for a, b in list(out):
            for c, d in list(out):
                if b == c and a != d and (a, d) not in out:
                    out.add((a, d))
                    changed = True
    return out


def default_battery(seed: int = 0) -> list[BatteryConfig]:
    lin = tuple(linear_family(10.0, (2, 4, 6, 8, 10)))
    pairs = random_dominated_pairs(seed, 4, T=5.0, min_value=6.0, max_value=20.0)
    random_family = tuple(f for p in pairs for f in p)
    z7, y7 = f7_pair()
    z8, y8 = f8_functions()
    through_point = tuple(pl_from_points([(0, 2 + s), (4, 2 - 3 * s)]) for s in (0.1, 0.3, 0.5))
    common_start = (pl_from_points([(0, 10), (10, 0)]), pl_from_points([(0, 10), (10, 5)]),
                    pl_from_points([(0, 10), (5, 2), (10, 0)]))
    centre = tuple(pl_from_points([(0, 5 + 5 * s), (10, 5 - 5 * s)]) for s in (0.2, 0.5, 0.9))
    return [
        BatteryConfig("h_linear", h_bundle(), lin, "generalized h-indices on lines"),
        BatteryConfig("g_linear", g_bundle(), lin, "generalized g-indices on lines"),
        BatteryConfig("average_random", average_bundle(), random_family,
                      "truncated averages on seeded dominated pairs with values above T"),
        BatteryConfig("total_linear", total_bundle(), lin, "truncated totals on lines"),
        BatteryConfig("percentile_linear", percentile_bundle(), lin, "values Z(θ) on lines"),
        BatteryConfig("F7", fixture_bundle(), (z7, y7), "X(θ)+X(T) on the pair of fixture F7"),
        BatteryConfig("F8_four", fixture_bundle(), (z8, y8, scale(z8, 0.5), scale(y8, 0.5)),
                      "X(θ)+X(T) on the pair of fixture F8 and their halves"),
        BatteryConfig("F8_pair", fixture_bundle(), (z8, y8), "X(θ)+X(T) on the pair of fixture F8"),
        BatteryConfig("F9", average_bundle(), f9_functions(), "truncated averages on the pair of fixture F9"),
        BatteryConfig("through_point", custom_bundle("Z(1)", lambda Z, t: evaluate(Z, 1.0)), through_point,
                      "lines through (1, 2) on [0, 4] with the constant bundle Z(1)"),
        BatteryConfig("common_start", custom_bundle("Z(0)", lambda Z, t: Z.ys[0]), common_start,
                      "functions with Z(0) = 10 and the constant bundle Z(0)"),
        BatteryConfig("through_centre",
                      custom_bundle("1 unless zero", lambda Z, t: 0.0 if Z.is_zero() else 1.0), centre,
                      "lines through (5, 5) on [0, 10] with a constant nonzero bundle"),
    ]


@dataclass
class ImplicationMatrix:
    verdicts: dict[str, dict[str, AxiomVerdict]]
    cells: dict[str, dict[str, dict[str, Any]]]
    failures: list[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict[str, Any]:
        return {
            "properties": list(PROPS),
            "configs": {c: {p: v.outcome.value for p, v in row.items()} for c, row in self.verdicts.items()},
            "cells": self.cells,
            "failures": list(self.failures),
            "consistent": self.consistent,
        }


def implication_matrix(configs: Sequence[BatteryConfig] | None = None, grid: int = 129) -> ImplicationMatrix:
    """Evaluate every property on every configuration and audit the claimed (non-)implications.

    Vacuous verdicts count as true.  Undetermined verdicts are neither true nor
    false, so they can neither refute an arrow nor exhibit a non-implication.
    """
    configs = list(configs) if configs is not None else default_battery()
    verdicts = {c.name: {p: check_bundle_property(c.bundle, p, list(c.family), grid) for p in PROPS}
                for c in configs}
    truth = {c: {p: v.holds for p, v in row.items()} for c, row in verdicts.items()}
    implied = _closure(ARROWS)
    cells: dict[str, dict[str, dict[str, Any]]] = {}
    failures: list[str] = []
    for p in PROPS:
        cells[p] = {}
        for q in PROPS:
            if p == q:
                continue
            exhibits = sorted(c for c in truth if truth[c][p] is True and truth[c][q] is False)
            claim = "implies" if (p, q) in implied else "not_implies" if (p, q) in NON_IMPLICATIONS else None
            cell: dict[str, Any] = {"claim": claim, "direct": (p, q) in ARROWS, "exhibited_by": exhibits}
            if claim == "implies" and exhibits:
                failures.append(f"{p} => {q} contradicted by {', '.join(exhibits)}")
            if claim == "not_implies":
                designated = NON_IMPLICATIONS[(p, q)]
                cell["designated"] = designated
                if designated not in exhibits:
                    failures.append(f"{p} =/=> {q} not exhibited by {designated}")
            cells[p][q] = cell
    return ImplicationMatrix(verdicts, cells, failures)
