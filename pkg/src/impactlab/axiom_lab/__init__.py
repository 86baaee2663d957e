"""Axiom and property checkers, adversarial witnesses and the fixture battery."""

from .checks import check_measure_axiom, check_strong_axioms, strong_order
from .fixtures import FixtureId, FixtureResult, run_all, run_fixture
from .implications import ImplicationMatrix, default_battery, implication_matrix
from .properties import check_bundle_property
from .replay import replay_verdict, replay_witness
from .search import localization_report, probe_requirement
from .witnesses import flatten_below, lift_above, plateau_lift, shift_down_clamped

__all__ = [
    "FixtureId",
    "FixtureResult",
    "ImplicationMatrix",
    "check_bundle_property",
    "check_measure_axiom",
    "check_strong_axioms",
    "default_battery",
    "flatten_below",
    "implication_matrix",
    "lift_above",
    "localization_report",
    "plateau_lift",
    "probe_requirement",
    "replay_verdict",
    "replay_witness",
    "run_all",
    "run_fixture",
    "shift_down_clamped",
    "strong_order",
]
