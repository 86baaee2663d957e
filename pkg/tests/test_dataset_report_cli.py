from __future__ import annotations

import json
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from impactlab.cli import main
from impactlab.dataset import curve_rows, emit_curves, format_number, ingest, parse_csv, parse_json, write_dataset
from impactlab.errors import EmptyDataset, NegativeValue, ParseError
from impactlab.measures import MeasureKind
from impactlab.profile import linear
from impactlab.report import hasse_edges, report, round_sig, transitive_closure

from . import oracles

SAMPLE = "src/impactlab/data/sample.csv"

entity_ids = st.text("abcdefgh_", min_size=1, max_size=6)
counts = st.lists(st.one_of(st.integers(0, 10**6).map(float), st.floats(0, 1e6, allow_nan=False)),
                  min_size=1, max_size=6)


# dataset ----------------------------------------------------------------------------


@given(st.dictionaries(entity_ids, counts, min_size=1, max_size=4), st.sampled_from(["csv", "json"]))
def test_write_parse_round_trip(raw, fmt):
    ds = parse_json(json.dumps({"entities": raw}))
    text = write_dataset(ds, fmt)
    back = parse_csv(text) if fmt == "csv" else parse_json(text)
    assert back.entities == ds.entities
    assert write_dataset(back, fmt) == text


def test_csv_parsing_details():
    ds = parse_csv("entity,value\n\nx,3\nx,5\ny,0\n")
    assert ds.ids == ["x", "y"] and ds.entities["x"].counts == (5, 3)
    assert parse_csv("x,1\n").entities["x"].counts == (1,)
    with pytest.raises(ParseError) as err:
        parse_csv("x,1\ny,abc\n")
    assert err.value.line == 2
    with pytest.raises(ParseError):
        parse_csv("x,1,2\n")
    with pytest.raises(ParseError):
        parse_csv("x,inf\n")
    with pytest.raises(NegativeValue, match="entity 'y', line 2"):
        parse_csv("x,1\ny,-1\n")
    with pytest.raises(EmptyDataset):
        parse_csv("entity,value\n")


def test_json_parsing_errors():
    with pytest.raises(ParseError):
        parse_json("{")
    with pytest.raises(ParseError):
        parse_json('{"entities": {"x": []}}')
    with pytest.raises(ParseError):
        parse_json('{"entities": {"x": [true]}}')
    with pytest.raises(EmptyDataset):
        parse_json("  ")


def test_format_number():
    assert format_number(3.0) == "3" and format_number(0.1) == "0.1" and format_number(1e300) == "1e+300"


def test_curve_rows_against_oracle():
    Z = linear(4, 6)
    nn = curve_rows(Z, "nn_lorenz", 4)
    assert [x for x, _ in nn] == [0, 1, 2, 3, 4]
    assert [y for _, y in nn] == pytest.approx([oracles.integral_at(Z, x) for x in range(5)])
    si = curve_rows(Z, "strong_impact", 4)
    assert si[0] == (0, 6) and si[2][1] == pytest.approx(oracles.integral_at(Z, 2) / 2)
    with pytest.raises(ValueError):
        curve_rows(Z, "nope", 4)
    text = emit_curves({"z": Z}, "lorenz", 2)
    assert text.splitlines() == ["entity,x,y", "z,0,0", "z,0.5,0.75", "z,1,1"]


# report -----------------------------------------------------------------------------


def test_hasse_and_closure():
    less = {("a", "b"), ("b", "c"), ("a", "c"), ("d", "c")}
    edges = hasse_edges(less)
    assert edges == [("a", "b"), ("b", "c"), ("d", "c")]
    assert transitive_closure(edges) == less


def test_round_sig():
    assert round_sig({"x": [1 / 3, 2.0], "y": float("inf")}) == {"x": [0.333333333333, 2.0], "y": None}


def test_report_sample_structure():
    ds = ingest(SAMPLE)
    rep = report(ds, [MeasureKind.h(), MeasureKind.total(3)])
    assert rep.matrix["alpha"]["gamma"] == "LessNeq" and rep.matrix["gamma"]["alpha"] == "GreaterNeq"
    assert rep.matrix["alpha"]["kappa"] is None  # four sources against two
    assert ("alpha", "gamma") in rep.hasse and ("lambda", "kappa") in rep.hasse
    assert rep.values["kappa"]["TruncatedTotal(3)"] is None
    assert any("different numbers of sources" in w for w in rep.warnings)
    # the Hasse diagram's closure reproduces every strict relation in the matrix
    closure = transitive_closure(rep.hasse)
    for a, row in rep.matrix.items():
        for b, rel in row.items():
            assert ((a, b) in closure) == (rel == "LessNeq")
    assert report(ds, [MeasureKind.h()], jobs=4).to_json() == report(ds, [MeasureKind.h()]).to_json()


def test_report_pad_zeros_compares_everything():
    ds = ingest(SAMPLE)
    rep = report(ds, [MeasureKind.h()], pad_zeros=True)
    assert all(v is not None for row in rep.matrix.values() for v in row.values())


def test_report_single_entity():
    rep = report(parse_csv("x,1\nx,2\n"), [MeasureKind.h()])
    assert rep.matrix == {} and rep.hasse == []


# cli --------------------------------------------------------------------------------


def test_cli_commands(tmp_path, capsys):
    assert main(["validate", SAMPLE]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["entities"]["alpha"] == {"sources": 4, "items": 35}

    assert main(["compare", SAMPLE, "alpha", "gamma"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["nn_relation"] == "LessNeq"

    out = tmp_path / "m.csv"
    assert main(["measures", SAMPLE, "--measures", "h:1,mean", "--out", str(out)]) == 0
    assert out.read_text().splitlines()[0] == "entity,H(1),Mean"

    assert main(["global", SAMPLE]) == 0
    assert "GiniArea" in json.loads(capsys.readouterr().out)["values"]["alpha"]

    assert main(["axioms", "--measures", "h:1", "--axioms", "I,II,ax1", "--budget", "200"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert set(doc["verdicts"]["H(1)"]) == {"I", "II", "ax1"}


@pytest.mark.parametrize(
    ("argv", "code"),
    [
        (["validate", "missing.csv"], 1),
        (["order", SAMPLE, "--measures", "zz"], 1),
        (["compare", SAMPLE, "alpha", "nobody"], 1),
        (["compare", SAMPLE, "alpha", "kappa"], 1),
        (["axioms", "--axioms", "XYZ"], 1),
    ],
)
def test_cli_input_errors(argv, code, capsys):
    assert main(argv) == code
    assert capsys.readouterr().err.startswith("error:")


def test_cli_bad_file_content(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("x,-3\n")
    assert main(["validate", str(bad)]) == 1
    assert "negative" in capsys.readouterr().err


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "impactlab", "--version"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "0.1.0"
