"""Outcome records shared by the bundle checks and the axiom lab."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from .profile import PiecewiseLinear


class AxiomId(str, Enum):
    I = "I"
    II = "II"
    III_1 = "III_1"
    III_2 = "III_2"
    III = "III"
    III_prime = "III_prime"
    IV = "IV"
    ax1 = "ax1"
    ax2 = "ax2"
    ax3 = "ax3"
    ax4 = "ax4"
    AX1 = "AX1"
    AX2 = "AX2"
    AX3 = "AX3"
    AX4 = "AX4"
    CES = "CES"
    PED = "PED"
    W1 = "W1"
    W2 = "W2"
    WL = "WL"
    IB = "IB"
    GIB = "GIB"


class Outcome(str, Enum):
    HOLDS = "holds_on_family"
    VACUOUS = "vacuous"
    VIOLATED = "violated"
    UNDETERMINED = "undetermined"

    @property
    def truthy(self) -> bool | None:
        """``True`` for holds/vacuous, ``False`` for violated, ``None`` otherwise."""
        if self in (Outcome.HOLDS, Outcome.VACUOUS):
            return True
        if self is Outcome.VIOLATED:
            return False
        return None


def knots_of(f: PiecewiseLinear) -> list[list[float]]:
    return [[x, y] for x, y in zip(f.xs, f.ys)]


def from_knots(points: list[list[float]]) -> PiecewiseLinear:
    return PiecewiseLinear(tuple(p[0] for p in points), tuple(p[1] for p in points))


@dataclass
class AxiomVerdict:
    """Result of checking one axiom or property on a finite family.

    Witnesses are plain dictionaries; functions inside them are stored as knot
    lists under keys ``Z``/``Y`` so that a violation can be replayed exactly.
    """

    axiom: AxiomId
    outcome: Outcome
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    grid_based: bool = False
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def holds(self) -> bool | None:
        return self.outcome.truthy

    def to_dict(self) -> dict[str, Any]:
        return {
            "axiom": self.axiom.value,
            "outcome": self.outcome.value,
            "grid_based": self.grid_based,
            "witnesses": self.witnesses,
            "notes": list(self.notes),
            "details": self.details,
        }


def combine(axiom: AxiomId, counts: dict[str, int], witnesses: list[dict[str, Any]],
            notes: list[str] | None = None, grid_based: bool = False) -> AxiomVerdict:
    """Outcome from tallies of ``checked`` antecedents, ``violated`` and ``undetermined`` cases."""
    if counts.get("violated", 0):
        outcome = Outcome.VIOLATED
    elif counts.get("undetermined", 0):
        outcome = Outcome.UNDETERMINED
    elif counts.get("checked", 0) == 0:
        outcome = Outcome.VACUOUS
    else:
        outcome = Outcome.HOLDS
    return AxiomVerdict(axiom, outcome, witnesses, list(notes or []), grid_based, dict(counts))
