"""Dataset reports: per-entity measures, pairwise dominance and its Hasse diagram."""

from __future__ import annotations

import json
import math
from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Literal

from .dataset import Dataset
from .dominance import Relation, dominates_nn
from .errors import ImpactError
from .measures import MeasureKind, evaluate_discrete, evaluate_measure
from .profile import EPS, DiscreteProfile, PiecewiseLinear, to_continuous

__all__ = ["ReportDocument", "dumps", "hasse_edges", "report", "round_sig", "transitive_closure"]

Embedding = Literal["discrete", "continuous"]


def round_sig(x: Any, digits: int = 12) -> Any:
    """Round floats (recursively) to ``digits`` significant digits for stable output."""
    if isinstance(x, float):
        return float(f"{x:.{digits}g}") if math.isfinite(x) else None
    if isinstance(x, dict):
        return {k: round_sig(v, digits) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [round_sig(v, digits) for v in x]
    return x


def dumps(doc: Any) -> str:
    return json.dumps(round_sig(doc), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def hasse_edges(less: Iterable[tuple[str, str]]) -> list[tuple[str, str]]:
    """Transitive reduction of a strict order given by its pairs ``(a, b)`` meaning ``a < b``."""
    rel = set(less)
    nodes = {a for a, _ in rel} | {b for _, b in rel}
    covers = [(a, b) for a, b in rel
              if not any((a, c) in rel and (c, b) in rel for c in nodes if c not in (a, b))]
    return sorted(covers)


def transitive_closure(edges: Iterable[tuple[str, str]]) -> set[tuple[str, str]]:
    out = set(edges)
    while True:
        extra = {(a, d) for a, b in out for c, d in out if b == c and a != d} - out
        if not extra:
            return out
        out |= extra


@dataclass
class ReportDocument:
    entities: list[str]
    measures: list[str]
    embedding: str
    values: dict[str, dict[str, float | None]]
    matrix: dict[str, dict[str, str | None]]
    hasse: list[tuple[str, str]]
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "embedding": self.embedding,
            "entities": self.entities,
            "measures": self.measures,
            "values": self.values,
            "matrix": self.matrix,
            "hasse": [list(e) for e in self.hasse],
            "warnings": self.warnings,
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())

    def values_csv(self) -> str:
        lines = [",".join(["entity", *self.measures])]
        for e in self.entities:
            row = self.values[e]
            lines.append(",".join([e, *("" if row[m] is None else f"{row[m]:.12g}" for m in self.measures)]))
        return "\n".join(lines) + "\n"


def _padded(p: DiscreteProfile, length: int) -> PiecewiseLinear:
    return to_continuous(DiscreteProfile(p.counts + (0.0,) * (length - len(p))))


def report(ds: Dataset, measures: Sequence[MeasureKind], embedding: Embedding = "discrete",
           eps: float = EPS, pad_zeros: bool = False, jobs: int = 1) -> ReportDocument:
    if not measures:
        raise ValueError("at least one measure is required")
    ids = ds.ids
    labels = [m.label for m in measures]
    warnings: list[str] = []
    values: dict[str, dict[str, float | None]] = {}
    for e in ids:
        p = ds.entities[e]
        row: dict[str, float | None] = {}
        for m in measures:
            try:
                row[m.label] = (evaluate_discrete(m, p) if embedding == "discrete"
                                else evaluate_measure(m, to_continuous(p)))
            except ImpactError as exc:
                row[m.label] = None
                warnings.append(f"{e}: {m.label} undefined ({exc})")
        values[e] = row

    longest = max(len(ds.entities[e]) for e in ids)
    curves = {e: _padded(ds.entities[e], longest) if pad_zeros else to_continuous(ds.entities[e]) for e in ids}
    pairs = [(a, b) for i, a in enumerate(ids) for b in ids[i + 1:]]

    def compare(pair: tuple[str, str]) -> Relation | None:
        a, b = pair
        if curves[a].T != curves[b].T:
            return None
        return dominates_nn(curves[a], curves[b], eps).relation

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rels = list(pool.map(compare, pairs))
    else:
        rels = [compare(p) for p in pairs]

    matrix: dict[str, dict[str, str | None]] = {e: {} for e in ids} if len(ids) > 1 else {}
    less: list[tuple[str, str]] = []
    for (a, b), rel in zip(pairs, rels):
        if rel is None:
            matrix[a][b] = matrix[b][a] = None
            warnings.append(f"{a} vs {b}: different numbers of sources, not compared")
            continue
        matrix[a][b], matrix[b][a] = rel.value, rel.flipped().value
        if rel is Relation.UNDETERMINED:
            warnings.append(f"{a} vs {b}: comparison undetermined within tolerance")
        elif rel in (Relation.LESS_NEQ, Relation.LESS):
            less.append((a, b))
        elif rel in (Relation.GREATER_NEQ, Relation.GREATER):
            less.append((b, a))
    return ReportDocument(ids, labels, embedding, values, matrix, hasse_edges(less), warnings)
