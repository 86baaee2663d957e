"""Re-evaluate stored witnesses to confirm a violation reproduces exactly."""

from __future__ import annotations

from collections.abc import Callable
from typing import Any

from ..bundles import BundleSpec
from ..measures import MeasureKind
from ..verdicts import AxiomVerdict, from_knots
from .search import as_evaluator

__all__ = ["replay_verdict", "replay_witness"]


def replay_witness(witness: dict[str, Any],
                   target: MeasureKind | Callable[..., float] | BundleSpec) -> bool:
    """True when every stored value in ``witness`` is reproduced bit for bit.

    Measure witnesses store ``m_Z``/``m_Y``; bundle witnesses also carry ``theta``.
    """
    checked = False
    for fkey, vkey in (("Z", "m_Z"), ("Y", "m_Y")):
        if fkey not in witness or vkey not in witness or witness[vkey] is None:
            continue
        f = from_knots(witness[fkey])
        if isinstance(target, BundleSpec):
            value = target.evaluator(f, witness["theta"])
        else:
            value = as_evaluator(target)[0](f)
        if value != witness[vkey]:
            return False
        checked = True
    return checked


def replay_verdict(verdict: AxiomVerdict, target: MeasureKind | Callable[..., float] | BundleSpec) -> bool:
    """All replayable witnesses of ``verdict`` reproduce (vacuously true without witnesses)."""
    return all(replay_witness(w, target) for w in verdict.witnesses
               if "m_Z" in w and "Z" in w and "Y" in w)
