import io
import json

import pytest

from resnum.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_graph6_file(tmp_path, capsys):
    f = tmp_path / "g.g6"
    f.write_text("C~\nCh\n")
    code, out, _ = run(capsys, "compute", "--input", str(f))
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    first = json.loads(lines[0])
    assert (first["n"], first["res"], first["omega"]) == (4, 3, 4)
    second = json.loads(lines[1])
    assert second["girth"] is None and second["is_tree"] is True


def test_compute_stdin_with_dims(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("Dhc\n"))
    code, out, _ = run(capsys, "compute", "--input", "-", "--dim", "--updim")
    assert code == 0
    rep = json.loads(out)
    assert (rep["res"], rep["dim"], rep["updim"]) == (2, 2, 2)


def test_compute_edgelist(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("n 4\n0 1\n1 2\n2 3\n")
    code, out, _ = run(capsys, "compute", "--input", str(f), "--format", "edgelist")
    assert code == 0
    assert json.loads(out)["res"] == 2


def test_json_keys_sorted(tmp_path, capsys):
    f = tmp_path / "g.g6"
    f.write_text("C~\n")
    _, out, _ = run(capsys, "compute", "--input", str(f))
    keys = list(json.loads(out).keys())
    assert keys == sorted(keys)


def test_classify(tmp_path, capsys):
    f = tmp_path / "g.g6"
    f.write_text("C~\n")
    code, out, _ = run(capsys, "classify", "--input", str(f))
    assert code == 0
    rep = json.loads(out)
    assert rep == {"catalog_member": "C~", "category": "CatalogGirth3", "res": 3}


def test_verify_filtered(tmp_path, capsys):
    f = tmp_path / "g.g6"
    f.write_text("C~\n")
    code, out, _ = run(capsys, "verify", "--input", str(f), "--prop", "CliqueUB")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 1
    assert rows[0]["prop_id"] == "CliqueUB"
    assert rows[0]["equality"] is True


def test_verify_all_props(tmp_path, capsys):
    f = tmp_path / "g.g6"
    f.write_text("Dhc\n")
    code, out, _ = run(capsys, "verify", "--input", str(f))
    rows = json.loads(out)
    assert code == 0
    assert {r["prop_id"] for r in rows} == {
        "DiamTree", "Girth", "CliqueUB", "OrderBounds",
        "OrderTree", "MaxDeg", "MaxDegTree", "Chain",
    }


def test_gen_and_enum(capsys):
    code, out, _ = run(capsys, "gen", "--family", "complete", "--params", "4")
    assert (code, out.strip()) == (0, "C~")
    code, out, _ = run(capsys, "enum", "--n", "4")
    assert code == 0
    assert len(out.strip().splitlines()) == 6


def test_enum_trees(capsys):
    code, out, _ = run(capsys, "enum", "--n", "7", "--trees")
    assert code == 0
    assert len(out.strip().splitlines()) == 11


def test_catalog_command(capsys):
    code, out, _ = run(capsys, "catalog", "--res", "3")
    assert code == 0
    rep = json.loads(out)
    assert rep["members"] == 17
    assert (rep["girth3"], rep["girth5"]) == (13, 4)
    assert rep["girth5_orders"] == [6, 7, 8, 10]
    assert rep["fixture_match"] is True
    assert rep["clique_equals_res"]["derived_size"] == 12


def test_catalog_against_explicit_fixture(tmp_path, capsys):
    good = tmp_path / "good.g6"
    from resnum.catalog import load_default_catalog, render_fixture

    good.write_text(render_fixture(load_default_catalog()))
    code, out, _ = run(capsys, "catalog", "--res", "3", "--fixture", str(good))
    assert code == 0 and json.loads(out)["fixture_match"] is True


def test_catalog_with_wrong_res(capsys):
    code, _, err = run(capsys, "catalog", "--res", "4")
    assert code == 2
    assert "res = 3" in err


def test_exit_code_input_error(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("not graph6 \x01\n"))
    code, _, err = run(capsys, "compute", "--input", "-")
    assert code == 2 and "input error" in err

    code, _, err = run(capsys, "compute", "--input", "/no/such/file")
    assert code == 2


def test_exit_code_disconnected(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("n 2\n")
    code, _, err = run(capsys, "compute", "--input", str(f), "--format", "edgelist")
    assert code == 2


def test_exit_code_cap(capsys):
    code, _, err = run(capsys, "enum", "--n", "20")
    assert code == 3 and "cap" in err.lower()


def test_gen_rejects_bad_params(capsys):
    code, _, err = run(capsys, "gen", "--family", "cycle", "--params", "x")
    assert code == 2
    code, _, err = run(capsys, "gen", "--family", "cycle", "--params", "2")
    assert code == 2


def test_unknown_family_rejected_by_argparse(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen", "--family", "nonesuch", "--params", "1"])
    assert exc.value.code == 2
