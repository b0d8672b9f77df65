import io
import json

import pytest

from lspace import catalog
from lspace.cli import parse_box, run
from lspace.errors import SchemaError
from lspace.hfunction import solve_link
from lspace.io import dump_link_input, link_to_dict, parse_link_input, table_to_ascii, table_to_csv


def _run(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


@pytest.mark.parametrize("name", ["unknot", "whitehead", "hopf_pos", "l7n1", "unlink2"])
def test_link_json_round_trip(name):
    link = catalog.get(name).input
    text = dump_link_input(link)
    again = parse_link_input(text)
    assert link_to_dict(again) == link_to_dict(link)
    assert dump_link_input(again) == text


def test_sublinks_round_trip():
    obj = link_to_dict(catalog.get("whitehead").input)
    obj["sublinks"] = [{"components": [0], "alexander": {"terms": [{"exp2": [0], "coeff": 1}]}}]
    link = parse_link_input(json.dumps(obj))
    assert (0,) in link.sublinks
    assert link_to_dict(link)["sublinks"][0]["components"] == [0]


@pytest.mark.parametrize(
    "payload",
    [
        "not json",
        "[]",
        '{"name": "x", "n": 2}',
        '{"name": "x", "n": 1, "alexander": {"terms": [{"exp2": [1], "coeff": 1}]}}',
        '{"name": "x", "n": 2, "linking": [[0, 0], [0, 0]], "alexander": {"terms": [{"exp2": [0, 0], "coeff": 1}]}}',
        '{"name": "x", "n": 2, "linking": [[0, 1], [0, 0]], "alexander": {"terms": []}}',
    ],
)
def test_bad_inputs_raise_schema_error(payload):
    with pytest.raises(SchemaError):
        parse_link_input(payload)


def test_ascii_grid_matches_printed_layout():
    e = catalog.get("whitehead")
    text = table_to_ascii(solve_link(e.input, e.box))
    rows = [line.split("|")[1].split() for line in text.splitlines()[:5]]
    assert [[int(v) for v in r] for r in rows] == catalog.WHITEHEAD_GRID
    assert text.splitlines()[0].split("|")[0].strip() == "2"


def test_csv_header_and_length():
    e = catalog.get("hopf_pos")
    text = table_to_csv(solve_link(e.input))
    lines = text.splitlines()
    assert lines[0] == "s1_doubled,s2_doubled,H"
    assert len(lines) == 1 + 25


def test_parse_box():
    assert parse_box("-4,-4:4,4").hi.doubled == (4, 4)
    with pytest.raises(SchemaError):
        parse_box("1,2")


def test_cli_classify_l7n1():
    code, out = _run("classify", "catalog:l7n1")
    d = json.loads(out)
    assert code == 0
    assert d["kind"] == "TypeB" and d["special"] and d["corner"] == [1, 2]
    assert (d["tau"], d["g3"], d["s_top"]) == (3, 2, 3)


def test_cli_classify_whitehead():
    d = json.loads(_run("classify", "catalog:whitehead")[1])
    assert d["kind"] == "TypeA" and d["fibered_and_sqp"] == "no" and d["fibered"] == "yes"


def test_cli_outputs_are_deterministic():
    assert _run("hfl", "catalog:whitehead") == _run("hfl", "catalog:whitehead")


def test_cli_qp():
    code, out = _run("qp", "catalog:two_bridge:1")
    assert code == 0
    d = json.loads(out)
    assert d["obstructed"] and d["reason"] == "self-linking bound"


def test_cli_catalog_list_and_export(tmp_path):
    code, out = _run("catalog")
    assert code == 0 and "whitehead" in out.split()
    code, out = _run("catalog", "whitehead")
    path = tmp_path / "w.json"
    path.write_text(out)
    code, grid = _run("hfunc", str(path), "--box=-4,-4:4,4", "--format", "ascii")
    assert code == 0
    assert grid == table_to_ascii(solve_link(catalog.get("whitehead").input, catalog.get("whitehead").box))


def test_cli_oracle_check():
    code, out = _run("oracle-check", "catalog:unlink2")
    assert code == 0 and json.loads(out)["mismatches"] == []


def test_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert _run("classify", str(bad))[0] == 2
    assert _run("classify", str(tmp_path / "missing.json"))[0] == 2
    assert _run("hfunc", "catalog:whitehead", "--sign", "minus")[0] == 3
    assert _run("hfunc", "catalog:whitehead", "--box=-4,-4:0,0")[0] == 4
    assert _run("hfl", "catalog:trefoil")[0] == 2
    assert "lspace:" in capsys.readouterr().err


def test_cli_l7n1_with_supplied_linking(tmp_path):
    path = tmp_path / "l7n1.json"
    path.write_text(dump_link_input(catalog.l7n1_with_external_data()))
    d = json.loads(_run("classify", str(path))[1])
    assert d["eq1_checked"] and d["special"] and d["component_genera"] == [0, 1]
    assert json.loads(_run("classify", "catalog:l7n1")[1])["eq1_checked"] is False
