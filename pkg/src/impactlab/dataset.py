"""Multi-entity datasets: ingestion from long-format CSV or JSON, and curve export."""

from __future__ import annotations

import csv
import io
import json
import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Literal

from .dominance import lorenz_points
from .errors import EmptyDataset, NegativeValue, ParseError
from .profile import DiscreteProfile, PiecewiseLinear, from_counts, to_continuous

__all__ = ["CURVES", "Dataset", "curve_rows", "emit_curves", "format_number", "ingest", "parse_csv",
           "parse_json", "write_dataset"]

CURVES = ("lorenz", "nn_lorenz", "strong_impact")
Format = Literal["csv", "json"]


@dataclass(frozen=True)
class Dataset:
    entities: dict[str, DiscreteProfile]
    source: str | None = None
    ingested_at: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if not self.entities:
            raise EmptyDataset("dataset has no entities")
        if any(not e for e in self.entities):
            raise ParseError("entity ids must be nonempty")

    @property
    def ids(self) -> list[str]:
        return sorted(self.entities)

    def continuous(self) -> dict[str, PiecewiseLinear]:
        return {e: to_continuous(self.entities[e]) for e in self.ids}


def _value(token: str, line: int) -> float:
    try:
        v = float(token)
    except ValueError:
        raise ParseError(f"not a number: {token!r}", line) from None
    if not math.isfinite(v):
        raise ParseError(f"non-finite value {token!r}", line)
    return v


def _build(values: Mapping[str, list[float]], source: str | None) -> Dataset:
    if not values:
        raise EmptyDataset("dataset has no rows")
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return Dataset({e: from_counts(v) for e, v in values.items()}, source, stamp)


def parse_csv(text: str, source: str | None = None) -> Dataset:
    """Rows ``entity,value``; an optional ``entity,value`` header and blank lines are skipped."""
    values: dict[str, list[float]] = {}
    for line, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != 2:
            raise ParseError(f"expected 2 fields, got {len(row)}", line)
        entity, token = row[0].strip(), row[1].strip()
        if line == 1 and (entity, token) == ("entity", "value"):
            continue
        if not entity:
            raise ParseError("empty entity id", line)
        v = _value(token, line)
        if v < 0:
            raise NegativeValue(f"entity {entity!r}, line {line}: negative value {v!r}")
        values.setdefault(entity, []).append(v)
    return _build(values, source)


def parse_json(text: str, source: str | None = None) -> Dataset:
    """``{"entities": {"id": [values, ...]}}``."""
    try:
        doc = json.loads(text) if text.strip() else None
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    if doc is None:
        raise EmptyDataset("empty file")
    if not isinstance(doc, dict) or not isinstance(doc.get("entities"), dict):
        raise ParseError('expected an object with an "entities" mapping')
    values: dict[str, list[float]] = {}
    for entity, raw in doc["entities"].items():
        if not entity:
            raise ParseError("empty entity id")
        if not isinstance(raw, list) or not raw:
            raise ParseError(f"entity {entity!r}: expected a nonempty list of values")
        vals = []
        for v in raw:
            if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
                raise ParseError(f"entity {entity!r}: not a number: {v!r}")
            if v < 0:
                raise NegativeValue(f"entity {entity!r}: negative value {v!r}")
            vals.append(float(v))
        values[entity] = vals
    return _build(values, source)


def ingest(path: str | Path, fmt: Format | None = None) -> Dataset:
    p = Path(path)
    fmt = fmt or ("json" if p.suffix.lower() == ".json" else "csv")
    text = p.read_text(encoding="utf-8")
    if not text.strip():
        raise EmptyDataset(f"{p} is empty")
    return parse_json(text, str(p)) if fmt == "json" else parse_csv(text, str(p))


def format_number(x: float) -> str:
    """Shortest exact text for ``x``: integers without a decimal point."""
    return str(int(x)) if float(x).is_integer() and abs(x) < 2 ** 53 else repr(float(x))


def write_dataset(ds: Dataset, fmt: Format = "csv") -> str:
    """Serialize so that parsing the text reproduces ``ds.entities`` exactly."""
    if fmt == "json":
        doc = {"entities": {e: [float(v) for v in ds.entities[e].counts] for e in ds.ids}}
        return json.dumps(doc, indent=2) + "\n"
    lines = ["entity,value"]
    lines += [f"{e},{format_number(v)}" for e in ds.ids for v in ds.entities[e].counts]
    return "\n".join(lines) + "\n"


def curve_rows(Z: PiecewiseLinear, which: str, n: int) -> list[tuple[float, float]]:
    """``n + 1`` equispaced points of the selected curve of ``Z``."""
    if n < 2:
        raise ValueError("need n >= 2")
    if which == "lorenz":
        return lorenz_points(Z, n)
    T = Z.T
    xs = [T * k / n for k in range(n + 1)]
    xs[-1] = T
    if which == "nn_lorenz":
        return [(x, Z.integral.eval(x)) for x in xs]
    if which == "strong_impact":
        return [(x, Z.ys[0] if x == 0 else Z.integral.eval(x) / x) for x in xs]
    raise ValueError(f"unknown curve {which!r}; expected one of {CURVES}")


def emit_curves(curves: Dataset | Mapping[str, PiecewiseLinear], which: str, n: int,
                out_path: str | Path | None = None) -> str:
    """CSV with header ``entity,x,y``; written to ``out_path`` when given."""
    funcs = curves.continuous() if isinstance(curves, Dataset) else dict(curves)
    lines = ["entity,x,y"]
    for e in sorted(funcs):
        lines += [f"{e},{x:.12g},{y:.12g}" for x, y in curve_rows(funcs[e], which, n)]
    text = "\n".join(lines) + "\n"
    if out_path is not None:
        Path(out_path).write_text(text, encoding="utf-8")
    return text
