import csv
import io
import json
import subprocess
import sys

import pytest

from wreathdistort.cli import main

FIG1 = "t^2 a^3 t a^-2 t a t^-7 a^2 t"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_zz_len(capsys):
    assert run(capsys, "zz", "len", FIG1) == (0, "20\n", "")


def test_geodesic_round_trip(capsys):
    _, g, _ = run(capsys, "zz", "geodesic", "a t a T T a^-3 t^4")
    _, n1, _ = run(capsys, "zz", "len", "a t a T T a^-3 t^4")
    _, n2, _ = run(capsys, "zz", "len", g.strip())
    assert n1 == n2


def test_zz_nf_and_mult(capsys):
    assert run(capsys, "zz", "nf", FIG1)[1] == "a_2^3 a_3^-2 a_4 a_-3^2 t^-2\n"
    code, out, _ = run(capsys, "zz", "mult", "a t", "T A", "--format", "json")
    assert json.loads(out) == {"counters": {}, "cursor": 0}


def test_bg_table_csv_and_json_agree(capsys):
    _, text, _ = run(capsys, "bg", "table", "--max-n", "3")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [(r["n"], r["len_G_witness"], r["len_H"]) for r in rows] == [
        ("0", "1", "1"), ("1", "3", "4"), ("2", "5", "8"), ("3", "7", "14")]
    _, js, _ = run(capsys, "bg", "table", "--max-n", "3", "--format", "json")
    assert [{k: str(v) for k, v in r.items()} for r in json.loads(js)] == rows


def test_embed_report_formats_agree(capsys):
    _, text, _ = run(capsys, "embed", "report", "--max-len", "1", "--radius", "6")
    _, js, _ = run(capsys, "embed", "report", "--max-len", "1", "--radius", "6", "--format", "json")
    rows = list(csv.DictReader(io.StringIO(text)))
    recs = json.loads(js)
    assert [r["element"] for r in rows] == [r["element"] for r in recs]
    assert list(rows[0]) == list(recs[0])


def test_f_commands(capsys):
    assert run(capsys, "f", "carets", "x1")[1] == "3\n"
    assert run(capsys, "f", "len", "x1 x2 x1^-2", "--radius", "7")[1] == "6\n"
    assert run(capsys, "f", "len", "x1 x2 x1^-2", "--radius", "3")[1] == ">3\n"
    code, out, _ = run(capsys, "f", "mult", "x0", "x0^-1", "--format", "json")
    assert json.loads(out)["normal_form"] == ""
    assert run(capsys, "f", "weight", "x1 x2 x1^-2")[1] == "6\n"


def test_embed_phi(capsys):
    _, out, _ = run(capsys, "embed", "phi", "a", "--format", "json")
    rec = json.loads(out)
    assert rec["image"] == "x1 x2 x1^-2" and rec["carets"] == 4


def test_bg_commands(capsys):
    assert run(capsys, "bg", "conj-s", "a", "2")[1] == "a_0 a_1^2 a_2\n"
    assert run(capsys, "bg", "eval", "t s T S")[1] == "(0, 0, 0)\n"


def test_oracle_verify(capsys):
    code, out, _ = run(capsys, "oracle", "verify", "zz", "--radius", "5")
    assert code == 0 and out.startswith("OK: formula = BFS on ") and out.strip().endswith(" elements")


def test_oracle_ball_and_distance(capsys):
    _, out, _ = run(capsys, "oracle", "ball", "f", "--radius", "2")
    assert "# sphere 2: 12" in out
    assert run(capsys, "oracle", "distance", "bg", "S a s", "--radius", "4")[1] == "3\n"


@pytest.mark.parametrize("argv", [["zz", "len", "b"], ["bg", "conj-s", "a", "-1"], ["oracle", "verify", "bg"]])
def test_domain_errors_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and err.startswith("error: ")


def test_limit_is_a_domain_error(capsys):
    code, out, err = run(capsys, "oracle", "ball", "f", "--radius", "6", "--limit", "100")
    assert code == 1 and "# sphere 3: 36" in out


@pytest.mark.parametrize("argv", [[], ["zz"], ["zz", "len"], ["bg", "table", "--format", "xml"], ["nope"]])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "wreathdistort", "zz", "len", FIG1], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "20\n"
