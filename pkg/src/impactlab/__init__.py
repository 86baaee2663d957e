"""Impact measures, dominance orders and axiom checks for rank-frequency functions."""

__version__ = "0.1.0"

from .bundles import (BundleSpec, Interval, average_bundle, bundle_less_a, bundle_less_ab, check_bundle_axioms,
                      custom_bundle, g_bundle, h_bundle, kosmulski_bundle, percentile_bundle, radix_measure,
                      total_bundle)
from .dataset import Dataset, emit_curves, ingest, write_dataset
from .dominance import (Relation, classify, compare_everywhere, construct_intermediate, dominates_lorenz,
                        dominates_nn, prefix_structure, transitions)
from .global_measures import GlobalMeasureKind, check_global_monotone, evaluate_global
from .measures import (MeasureKind, evaluate_discrete, evaluate_measure, g_measure, h_measure, localization,
                       parse_measure)
from .profile import (DiscreteProfile, PiecewiseLinear, constant, from_counts, linear, pl_from_points,
                      to_continuous)
from .report import ReportDocument, report
from .verdicts import AxiomId, AxiomVerdict, Outcome

__all__ = [
    "AxiomId", "AxiomVerdict", "BundleSpec", "Dataset", "DiscreteProfile", "GlobalMeasureKind", "Interval",
    "MeasureKind", "Outcome", "PiecewiseLinear", "Relation", "ReportDocument", "__version__",
    "average_bundle", "bundle_less_a", "bundle_less_ab", "check_bundle_axioms", "check_global_monotone",
    "classify", "compare_everywhere", "constant", "construct_intermediate", "custom_bundle", "dominates_lorenz",
    "dominates_nn", "emit_curves", "evaluate_discrete", "evaluate_global", "evaluate_measure", "from_counts",
    "g_bundle", "g_measure", "h_bundle", "h_measure", "ingest", "kosmulski_bundle", "linear", "localization", "parse_measure",
    "percentile_bundle", "pl_from_points", "prefix_structure", "radix_measure", "report", "to_continuous",
    "total_bundle", "transitions", "write_dataset",
]
