"""Tests for the command line interface."""

import json

import pytest

from pipedreams import BumplessPipeDream, Permutation, PipeDream
from pipedreams.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_json(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def test_schubert_json(capsys):
    code, out, err = run(capsys, "schubert", "213")
    assert code == 0
    data = json.loads(out)
    assert data["display"] == "x1"
    assert data["polynomial"]["terms"] == [
        {"exponents": [1], "coefficient": 1}
    ]


def test_schubert_pretty(capsys):
    code, out, _ = run(capsys, "schubert", "132", "--pretty")
    assert code == 0
    assert out.strip() == "x1 + x2"


def test_schubert_rejects_bad_perm(capsys):
    code, _, err = run(capsys, "schubert", "1,1,2")
    assert code == 2
    assert "error" in err


def test_unknown_subcommand(capsys):
    assert run(capsys, "frobnicate")[0] == 2


def test_enum_pd(capsys):
    code, out, _ = run(capsys, "enum", "321", "--model", "pd")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 1
    assert data["diagrams"][0]["crosses"] == [[1, 2], [1, 1], [2, 1]]


def test_enum_bpd(capsys):
    code, out, _ = run(capsys, "enum", "321", "--model", "bpd")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 1
    assert data["diagrams"][0]["tiles"] == [
        list("..r"),
        list(".r+"),
        list("r++"),
    ]


def test_enum_requires_model(capsys):
    assert run(capsys, "enum", "321")[0] == 2


def test_phi_forward_and_inverse(tmp_path, capsys):
    rothe = BumplessPipeDream.rothe(Permutation((2, 1)))
    path = write_json(tmp_path, "b.json", rothe.to_json())
    code, out, _ = run(capsys, "phi", path)
    assert code == 0
    data = json.loads(out)
    assert data["sequence"] == {"a": [1], "r": [1]}
    assert data["pipe_dream"]["crosses"] == [[1, 1]]

    back = write_json(tmp_path, "d.json", data["pipe_dream"])
    code, out, _ = run(capsys, "phi", back, "--inverse")
    assert code == 0
    assert json.loads(out) == rothe.to_json()


def test_phi_direction_mismatch(tmp_path, capsys):
    pd = write_json(tmp_path, "d.json", PipeDream([(1, 1)]).to_json())
    assert run(capsys, "phi", pd)[0] == 2


def test_pop_bpd(tmp_path, capsys):
    rothe = BumplessPipeDream.rothe(Permutation((2, 1)))
    path = write_json(tmp_path, "b.json", rothe.to_json())
    code, out, _ = run(capsys, "pop", path)
    assert code == 0
    data = json.loads(out)
    assert (data["a"], data["r"]) == (1, 1)
    assert data["result"]["tiles"] == [["r"]]
    assert data["footprints"] == []


def test_pop_pd(tmp_path, capsys):
    path = write_json(tmp_path, "d.json", PipeDream([(1, 1)]).to_json())
    code, out, _ = run(capsys, "pop", path)
    data = json.loads(out)
    assert code == 0
    assert (data["a"], data["r"]) == (1, 1)
    assert data["result"]["crosses"] == []


def test_insert_roundtrip(tmp_path, capsys):
    ident = write_json(
        tmp_path, "i.json", BumplessPipeDream.identity(1).to_json()
    )
    code, out, _ = run(capsys, "insert", ident, "--a", "1", "--r", "1")
    assert code == 0
    data = json.loads(out)
    assert data["result"]["tiles"] == [list(".r"), list("r+")]

    rothe = write_json(tmp_path, "r.json", data["result"])
    code, out, _ = run(capsys, "insert", rothe, "--a", "1", "--r", "1")
    assert code == 0
    assert json.loads(out)["result"] is None


def test_monk_x_pd(tmp_path, capsys):
    path = write_json(tmp_path, "d.json", PipeDream([]).to_json())
    code, out, _ = run(capsys, "monk", "x", path, "--alpha", "2")
    assert code == 0
    data = json.loads(out)
    assert data["result"]["crosses"] == [[2, 1]]
    assert data["l"] == 3
    assert data["complete_footprints"] == [[2, 1]]


def test_monk_m_bpd(tmp_path, capsys):
    rothe = BumplessPipeDream.rothe(Permutation((2, 1)))
    path = write_json(tmp_path, "b.json", rothe.to_json())
    code, out, _ = run(capsys, "monk", "m", path, "--s", "1", "--beta", "2")
    assert code == 0
    data = json.loads(out)
    assert data["result"]["tiles"] == [
        list(".r-"),
        list("rjr"),
        list("|r+"),
    ]
    assert data["l"] == 3


def test_monk_x_requires_alpha(tmp_path, capsys):
    path = write_json(tmp_path, "d.json", PipeDream([]).to_json())
    assert run(capsys, "monk", "x", path)[0] == 2


def test_verify_small_group(capsys):
    code, out, _ = run(capsys, "verify", "--group", "2", "--seed", "11")
    assert code == 0
    data = json.loads(out)
    assert data["group"] == 2
    assert all(entry["passed"] for entry in data["results"].values())


def test_verify_honors_group_cap(capsys, monkeypatch):
    monkeypatch.setenv("SCHUBERT_MAX_N", "3")
    code, _, err = run(capsys, "verify", "--group", "4")
    assert code == 2
    assert "SCHUBERT_MAX_N" in err
    code, out, _ = run(capsys, "verify", "--group", "3", "--check", "poly")
    assert code == 0
    assert json.loads(out)["check"] == "poly"


def test_verify_rejects_bad_cap(capsys, monkeypatch):
    monkeypatch.setenv("SCHUBERT_MAX_N", "many")
    assert run(capsys, "verify", "--group", "2")[0] == 2


def test_render_plain_and_pretty(tmp_path, capsys):
    d = PipeDream([(1, 1), (1, 2), (2, 1)])
    path = write_json(tmp_path, "d.json", d.to_json())
    code, out, _ = run(capsys, "render", path)
    assert code == 0
    assert out == "++.\n+.\n.\n"
    code, out, _ = run(capsys, "render", path, "--pretty")
    assert out == "┼┼·\n┼·\n·\n"


def test_render_bpd(tmp_path, capsys):
    rothe = BumplessPipeDream.rothe(Permutation((2, 1)))
    path = write_json(tmp_path, "b.json", rothe.to_json())
    code, out, _ = run(capsys, "render", path)
    assert code == 0
    assert out == ".r\nr+\n"


def test_malformed_json_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert run(capsys, "render", str(path))[0] == 2


def test_unknown_model(tmp_path, capsys):
    path = write_json(tmp_path, "x.json", {"model": "mystery"})
    assert run(capsys, "pop", path)[0] == 2


def test_missing_file(capsys):
    assert run(capsys, "pop", "/nonexistent/diagram.json")[0] == 2
