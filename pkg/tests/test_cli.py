import csv
import io
import json

import pytest

from bchcodes.cli import main
from bchcodes.verify import ROW_COLUMNS, Report, render_csv, render_json, render_text


def run(capsys, *argv):
    rc = main(list(argv))
    return rc, capsys.readouterr().out


def test_code_command_examples(capsys):
    rc, out = run(capsys, "code", "-q", "3", "-m", "2", "--lambda", "1", "--l0", "1", "--l1", "0",
                  "--format", "json")
    d = json.loads(out)
    assert rc == 0
    assert (d["n"], d["k_generator"], d["k_counting"], d["d_lower"], d["d_upper"]) == (8, 3, 3, 5, 5)
    assert d["griesmer_meets"] is True
    rc, out = run(capsys, "code", "-q", "2", "-m", "4", "--l0", "0", "--l1", "2", "--format", "json")
    d = json.loads(out)
    assert (d["n"], d["k_generator"], d["d_upper"], d["generator"]) == (15, 11, 3, "x^4 + x + 1")
    rc, out = run(capsys, "code", "-q", "3", "-m", "2", "--l0", "0", "--l1", "0")
    assert rc == 0 and "k_generator     1" in out and "d_upper         8" in out


def test_usage_errors_exit_2(capsys):
    assert main(["code", "-q", "6", "-m", "2", "--l0", "0", "--l1", "0"]) == 2
    assert main(["code", "-q", "3", "-m", "2", "--l0", "5", "--l1", "0"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["table", "4"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["code", "-q", "3"])
    assert exc.value.code == 2


def test_io_error_exit_3(capsys, tmp_path):
    assert main(["mindist", "-q", "2", "-m", "3", "--l0", "0", "--l1", "1",
                 "--out", str(tmp_path / "missing" / "x.json")]) == 3


def test_mindist_strategies(capsys):
    rc, out = run(capsys, "mindist", "-q", "3", "-m", "4", "--l0", "1", "--l1", "1", "--format", "json")
    d = json.loads(out)
    assert (d["d_lower"], d["d_upper"], d["d_method"]) == (17, 17, "rm_witness")
    rc, out = run(capsys, "mindist", "-q", "3", "-m", "4", "--l0", "1", "--l1", "1",
                  "--strategy", "bound_only", "--format", "json")
    assert json.loads(out)["d_method"] == "bch_bound_only" and rc == 0


def test_table_json_schema_and_determinism(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["table", "1", "--format", "json", "--out", str(a)]) == 0
    assert main(["table", "1", "--format", "json", "--out", str(b)]) == 0
    da, db = json.loads(a.read_text()), json.loads(b.read_text())
    da.pop("elapsed_ms"), db.pop("elapsed_ms")
    assert da == db
    first = da["rows"][0]
    assert first["params"] == {"q": 3, "m": 2, "lambda": 1, "l0": 1, "l1": 0}
    assert (first["n"], first["k_computed"], first["delta"]) == (8, 3, 5)
    for key in ("k_expected", "d_lower", "d_upper", "d_method", "griesmer_meets", "optimality_note"):
        assert key in first
    assert {r["d_status"] for r in da["rows"]} == {"exact_match"}
    assert set(da) == {"version", "config", "rows", "grid"}


def test_table_csv_header(capsys):
    rc, out = run(capsys, "table", "2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rc == 0 and rows[0] == ROW_COLUMNS and len(rows) == 34
    status = {r[ROW_COLUMNS.index("d_status")] for r in rows[1:]}
    assert status == {"exact_match", "lower_bound_only"}


def test_grid_single_point(capsys):
    rc, out = run(capsys, "grid", "--q-set", "3", "--m-range", "4-4", "--format", "json")
    d = json.loads(out)
    pts = [g for g in d["grid"] if g["params"]["lambda"] == 2]
    assert rc == 0 and len(pts) == 3
    assert all(not g["violations"] for g in d["grid"])
    degenerate = [g for g in d["grid"] if g["params"]["l0"] == g["params"]["l1"] == 0]
    assert degenerate and all(g["k_generator"] == 1 for g in degenerate)


def test_grid_text_and_csv(capsys):
    rc, out = run(capsys, "grid", "--q-set", "2,3", "--m-range", "2-3")
    assert rc == 0 and "0 with violations" in out
    rc, out = run(capsys, "grid", "--q-set", "2", "--m-range", "3", "--format", "csv")
    assert out.splitlines()[0].startswith("q,m,lambda,l0,l1,n,k_generator")


def test_empty_report_renders():
    rep = Report(config={})
    assert json.loads(render_json(rep))["rows"] == []
    assert render_csv(rep).strip() == ",".join(ROW_COLUMNS)
    assert "all checks pass" in render_text(rep)


def test_mismatch_sets_exit_code(monkeypatch, capsys):
    import bchcodes.cli as cli
    from bchcodes.tables import TableRow

    bad = (TableRow(cli.TABLES[1][0].params, 8, 4, 5, "Optimal"),)
    monkeypatch.setitem(cli.TABLES, 1, bad)
    assert main(["table", "1"]) == 1
    assert "MISMATCH" in capsys.readouterr().out
