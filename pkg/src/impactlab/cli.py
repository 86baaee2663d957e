"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 internal invariant failure.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from . import __version__
from .axiom_lab import check_measure_axiom, check_strong_axioms, implication_matrix, run_all
from .axiom_lab.implications import default_battery
from .dataset import CURVES, Dataset, emit_curves, ingest
from .dominance import dominates_lorenz, dominates_nn, transitions
from .errors import ImpactError, InvalidFunction, ParseError, EmptyDataset
from .generators import make_rng, random_pl
from .global_measures import GLOBAL_TAGS, GlobalMeasureKind, evaluate_global
from .measures import parse_measure
from .profile import EPS
from .report import dumps, report
from .verdicts import AxiomId

__all__ = ["main"]

DEFAULT_MEASURES = "h:1,g:1,r:1,a,mu:3,total:3,pct:0.3"
INPUT_ERRORS = (ParseError, EmptyDataset, InvalidFunction, FileNotFoundError, IsADirectoryError,
                UnicodeDecodeError)


class InputError(Exception):
    """Bad command-line input (exit code 1)."""


def _measures(spec: str) -> list:
    try:
        return [parse_measure(tok) for tok in spec.split(",") if tok.strip()]
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _load(args: argparse.Namespace) -> Dataset:
    return ingest(args.path, args.format)


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _entity(ds: Dataset, e: str) -> Any:
    if e not in ds.entities:
        raise InputError(f"unknown entity {e!r}")
    return ds.continuous()[e]


# subcommands ------------------------------------------------------------------------------


def cmd_validate(args: argparse.Namespace) -> int:
    ds = _load(args)
    doc = {"entities": {e: {"sources": len(ds.entities[e]), "items": sum(ds.entities[e].counts)} for e in ds.ids}}
    _write(dumps(doc), args.out)
    return 0


def cmd_measures(args: argparse.Namespace) -> int:
    ds = _load(args)
    rep = report(ds, _measures(args.measures), args.embedding, args.epsilon, args.pad_zeros, args.jobs)
    if args.out and args.out.endswith(".csv"):
        _write(rep.values_csv(), args.out)
    else:
        _write(dumps({"values": rep.to_dict()["values"], "warnings": [w for w in rep.warnings if "undefined" in w]}),
               args.out)
    return 0


def cmd_order(args: argparse.Namespace) -> int:
    ds = _load(args)
    rep = report(ds, _measures(args.measures), args.embedding, args.epsilon, args.pad_zeros, args.jobs)
    _write(rep.to_json(), args.out)
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    ds = _load(args)
    Z, Y = _entity(ds, args.first), _entity(ds, args.second)
    if Z.T != Y.T:
        raise InputError(f"{args.first} and {args.second} have different numbers of sources")
    nn = dominates_nn(Z, Y, args.epsilon)
    doc: dict[str, Any] = {"first": args.first, "second": args.second, "nn_relation": nn.relation.value,
                           "min_gap": nn.min_gap, "max_gap": nn.max_gap}
    try:
        doc["lorenz_relation"] = dominates_lorenz(Z, Y, args.epsilon).relation.value
    except ImpactError as exc:
        doc["lorenz_relation"] = None
        doc["lorenz_note"] = str(exc)
    tr = transitions(Z, Y, args.epsilon)
    doc["transitions"] = [list(t) for t in tr.transitions]
    _write(dumps(doc), args.out)
    return 0


def cmd_lorenz(args: argparse.Namespace) -> int:
    ds = _load(args)
    text = emit_curves(ds, args.curve, args.points)
    _write(text, args.out)
    return 0


def cmd_global(args: argparse.Namespace) -> int:
    ds = _load(args)
    kinds = [GlobalMeasureKind(t, 2.0 if t == "PowerIntegral" else None) for t in GLOBAL_TAGS]
    values: dict[str, dict[str, float | None]] = {}
    warnings = []
    for e, Z in ds.continuous().items():
        row: dict[str, float | None] = {}
        for k in kinds:
            try:
                row[k.label] = evaluate_global(k, Z)
            except ImpactError as exc:
                row[k.label] = None
                warnings.append(f"{e}: {k.label} undefined ({exc})")
        values[e] = row
    _write(dumps({"values": values, "warnings": warnings}), args.out)
    return 0


def cmd_axioms(args: argparse.Namespace) -> int:
    if args.path:
        family = list(_load(args).continuous().values())
    else:
        rng = make_rng(args.seed)
        family = [random_pl(rng, T=10.0) for _ in range(args.family_size)]
    try:
        axioms = [AxiomId(a) for a in args.axioms.split(",")]
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out: dict[str, Any] = {"seed": args.seed, "family_size": len(family), "verdicts": {}}
    for m in _measures(args.measures):
        rows = {}
        strong = None
        for ax in axioms:
            if ax.value.startswith("ax"):
                strong = strong or {v.axiom: v for v in check_strong_axioms(m, family)}
                rows[ax.value] = strong[ax].to_dict()
            else:
                try:
                    rows[ax.value] = check_measure_axiom(m, ax, family, args.budget, args.seed).to_dict()
                except ImpactError as exc:
                    rows[ax.value] = {"error": str(exc)}
        out["verdicts"][m.label] = rows
    _write(dumps(out), args.out)
    return 0


def cmd_paper_suite(args: argparse.Namespace) -> int:
    results = run_all()
    matrix = implication_matrix(default_battery(args.seed), args.theta_grid)
    doc = {"fixtures": {r.fixture.value: r.to_dict() for r in results}, "implication_matrix": matrix.to_dict(),
           "all_passed": all(r.passed for r in results) and matrix.consistent}
    _write(dumps(doc), args.out)
    return 0 if doc["all_passed"] else 2


# parser ------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), help="input format (default: from extension)")
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--epsilon", type=float, default=EPS, help="relative comparison tolerance")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--theta-grid", type=int, default=129, help="grid size for θ quantifiers")
    common.add_argument("--jobs", type=int, default=1, help="worker threads for pairwise comparisons")

    data = argparse.ArgumentParser(add_help=False, parents=[common])
    data.add_argument("path", help="dataset file (CSV entity,value or JSON)")

    rep = argparse.ArgumentParser(add_help=False)
    rep.add_argument("--measures", default=DEFAULT_MEASURES, help="comma list such as h:1,g:1,a,mu:3")
    rep.add_argument("--embedding", choices=("discrete", "continuous"), default="discrete")
    rep.add_argument("--pad-zeros", action="store_true", help="pad shorter profiles with zero-count sources")

    parser = argparse.ArgumentParser(prog="impactlab", description="Impact measures and dominance orders.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[data], help="check a dataset").set_defaults(func=cmd_validate)
    sub.add_parser("measures", parents=[data, rep], help="measure values per entity").set_defaults(func=cmd_measures)
    sub.add_parser("order", parents=[data, rep], help="full report with dominance matrix and Hasse diagram"
                   ).set_defaults(func=cmd_order)
    p = sub.add_parser("compare", parents=[data], help="compare two entities")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_compare)
    p = sub.add_parser("lorenz", parents=[data], help="emit curves as CSV")
    p.add_argument("--curve", choices=CURVES, default="nn_lorenz")
    p.add_argument("--points", type=int, default=10)
    p.set_defaults(func=cmd_lorenz)
    sub.add_parser("global", parents=[data], help="global impact measures").set_defaults(func=cmd_global)
    p = sub.add_parser("axioms", parents=[common], help="check requirements on a dataset or a seeded family")
    p.add_argument("path", nargs="?")
    p.add_argument("--measures", default="h:1")
    p.add_argument("--axioms", default="I,II,III,IV")
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--family-size", type=int, default=4)
    p.set_defaults(func=cmd_axioms)
    sub.add_parser("paper-suite", parents=[common], help="run the fixture battery and implication matrix"
                   ).set_defaults(func=cmd_paper_suite)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, *INPUT_ERRORS) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ImpactError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
