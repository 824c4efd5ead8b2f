import json

import pytest

from measure_lattice import ExtNonneg, Measure, SignedMeasure, is_measure
from measure_lattice.expressions import ParseError, SemanticError
from measure_lattice.workspace import (
    dump_workspace,
    format_table,
    load_table,
    load_workspace,
    parse_table,
    parse_workspace,
)

from conftest import FIXTURES


def test_load_fixtures():
    ws = load_workspace(FIXTURES / "example1.json")
    assert ws.space.atom_names == ("a", "b")
    assert ws.measures["mu"] == Measure(ws.space, [1, 0])
    fam = load_workspace(FIXTURES / "family.json")
    assert fam.signed["t"] == SignedMeasure(fam.space, ["inf", -1])


def test_list_entry_form():
    doc = {"atoms": ["a", "b"], "measures": [{"name": "mu", "weights": {"a": "1/2", "b": "inf"}}]}
    ws = parse_workspace(json.dumps(doc))
    assert ws.measures["mu"].weights == (ExtNonneg("1/2"), ExtNonneg.inf())


def test_round_trip_bit_exact():
    text = (FIXTURES / "family.json").read_text()
    ws = parse_workspace(text)
    again = parse_workspace(dump_workspace(ws))
    assert dump_workspace(again) == dump_workspace(ws)
    assert again.measures == ws.measures and again.signed == ws.signed


@pytest.mark.parametrize(
    "doc,err",
    [
        ({"atoms": ["a", "b"], "measures": {"mu": {"a": "1"}}}, SemanticError),
        ({"atoms": ["a"], "measures": {"mu": {"a": "1", "z": "0"}}}, SemanticError),
        ({"atoms": ["a", "a"]}, SemanticError),
        ({"atoms": ["empty"]}, SemanticError),
        ({"atoms": ["a b"]}, SemanticError),
        ({"atoms": ["a"], "measures": {"mu": {"a": 1}}}, ParseError),
        ({"atoms": ["a"], "measures": {"mu": {"a": "-1"}}}, ParseError),
        ({"atoms": ["a"], "measures": {"mu": {"a": "0.5"}}}, ParseError),
        ({"atoms": ["a"], "measures": {"x": {"a": "1"}}, "signed": {"x": {"a": "1"}}}, SemanticError),
        ({"atoms": ["a"], "extra": 1}, SemanticError),
        ({"measures": {}}, SemanticError),
    ],
)
def test_workspace_errors(doc, err):
    with pytest.raises(err):
        parse_workspace(json.dumps(doc))


def test_invalid_json_position():
    with pytest.raises(ParseError) as exc:
        parse_workspace('{"atoms": [\n  "a",,\n]}', "w.json")
    assert exc.value.line == 2
    assert str(exc.value).startswith("w.json:2:")


def test_tables():
    ws = load_workspace(FIXTURES / "example1.json")
    t = load_table(FIXTURES / "example1_min_table.json", ws.space)
    assert is_measure(t).describe() == "0 + 0 != 1"
    assert parse_table(format_table(t), ws.space) == t
    bare = parse_table('{"empty": "0", "a": "1", "b": "0", "all": "1"}', ws.space)
    assert is_measure(bare)


@pytest.mark.parametrize(
    "text,err",
    [
        ('{"empty": "0", "a": "1", "b": "0"}', SemanticError),
        ('{"empty": "0", "a": "1", "b": "0", "a|b": "1", "all": "1"}', SemanticError),
        ('{"empty": "0", "a": "1", "b": "0", "a|q": "1"}', SemanticError),
        ('{"empty": "0", "a": "1", "b": "0", "a|": "1"}', ParseError),
        ('{"empty": "0", "a": "1", "b": "0", "a|b": "x"}', ParseError),
    ],
)
def test_table_errors(text, err):
    ws = load_workspace(FIXTURES / "example1.json")
    with pytest.raises(err):
        parse_table(text, ws.space)
