import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from tracequery.cli import main

SCHEMA = json.loads(resources.files("tracequery").joinpath("report.schema.json").read_text())

EX4_Q1 = "string: a a a a a a\nwindow: 10\nconstraints: 1+3:7..7, 2+3:6..6, 5+1:0..0\n"
EX3 = ("string: ?x1 {a,b} ?x1 ?x2 c ?x3 {a,b} ?x1\nwindow: 25\n"
       "gaps: 0:1, 2:inf, 3:inf, 0:5, 0:5, 1:5, 1:2\n")
EX3_TRACE = "c a b b c a b a c a b a c b c b b a c\n"


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def run_json(argv, capsys):
    code, out, _ = run(argv + ["--json"], capsys)
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    return code, report


def test_match_witness(files, capsys):
    qf, tf = files("q", EX3), files("t", EX3_TRACE)
    code, out, _ = run(["match", qf, tf, "--witness"], capsys)
    assert code == 0 and out.strip() == "match 1 2 5 9 13 14 16 19"
    code, report = run_json(["match", qf, tf], capsys)
    assert report["witness"]["embedding"] == [1, 2, 5, 9, 13, 14, 16, 19]
    assert report["witness"]["assignment"] == {"?x1": "c", "?x2": "c", "?x3": "b"}


def test_match_negative_exit(files, capsys):
    code, out, _ = run(["match", files("q", "string: a b\nwindow: 2\n"), files("t", "a b\nb a\n")], capsys)
    assert code == 1 and out.split() == ["match", "no-match"]


def test_sat_and_minlen(files, capsys):
    qf = files("q1", EX4_Q1)
    code, report = run_json(["sat", qf], capsys)
    assert code == 1 and report["verdict"] == "unsatisfiable"
    code, out, _ = run(["minlen", qf, "--ignore-window"], capsys)
    assert code == 0 and out.strip() == "11"
    code, report = run_json(["minlen", qf], capsys)
    assert code == 1 and report["min_length"] is None


def test_mintrace(files, capsys):
    qf = files("q1", EX4_Q1)
    code, out, _ = run(["mintrace", qf, "--filler", "b", "--varfill", "a", "--ignore-window",
                        "--align", "right"], capsys)
    assert code == 0 and out.strip() == "a b a b b b b a a a a"
    code, report = run_json(["mintrace", qf, "--filler", "b", "--varfill", "a", "--ignore-window"], capsys)
    assert report["trace"] == "a b a a b b b b a a a"


def test_contains_and_equiv(files, capsys):
    a = files("a", "string: a {b,c} {b,c}\nwindow: 3\ngaps: 0:0, 0:0\n")
    b = files("b", "string: {a,b} {b,c} {b,c}\nwindow: 3\ngaps: 0:0, 0:0\n")
    code, report = run_json(["contains", a, b, "--alphabet", "a,b,c"], capsys)
    assert code == 0 and report["verdict"] == "contained"
    code, report = run_json(["contains", b, a, "--alphabet", "a,b,c"], capsys)
    assert code == 1 and report["verdict"] == "not-contained"
    code, report = run_json(["equiv", a, a], capsys)
    assert code == 0 and report["verdict"] == "equivalent"


def test_contains_small_alphabet(files, capsys):
    a, b = files("a", "string: a b c\n"), files("b", "string: ?x ?y ?z\n")
    code, _, err = run(["contains", a, b, "--alphabet", "a,b"], capsys)
    assert code == 2 and "alphabet below sufficiency bound" in err
    code, out, _ = run(["contains", a, b, "--alphabet", "a,b", "--force"], capsys)
    assert code == 0 and out.strip() == "contained"


def test_support_and_delta(files, capsys):
    tf = files("t", "a b b\na c c\n")
    code, report = run_json(["support", files("q", "string: a ?x\n"), tf], capsys)
    assert report["support"] == {"fraction": "1/1", "value": 1.0}
    code, report = run_json(["delta", tf, "--supp", "1", "--k", "2"], capsys)
    assert report["layers"] == {"1": ["{a}"], "2": ["{a,b}", "{a,c}", "{b,c}"]}


def test_discover_two_traces(files, capsys):
    tf = files("t", "a b b\na c c\n")
    argv = ["discover", tf, "--supp", "1", "--len", "3", "--window", "3", "--gaps", "0:0, 0:0", "--k", "2"]
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out.strip() == "string: a {b,c} {b,c}\nwindow: 3\ngaps: 0:0, 0:0"
    code, report = run_json(argv + ["--order", "seed:4"], capsys)
    assert report["verdict"] == "descriptive-query"


def test_discover_no_query(files, capsys):
    tf = files("t", "a b\na\n")
    code, report = run_json(["discover", tf, "--supp", "1", "--len", "2", "--window", "2", "--k", "1"], capsys)
    assert code == 1 and report["verdict"] == "no-descriptive-query"
    assert report["support"]["fraction"] == "1/2"


def test_discover_gap_arity(files, capsys):
    tf = files("t", "a b\n")
    code, _, err = run(["discover", tf, "--supp", "1", "--len", "3", "--window", "3",
                        "--gaps", "0:0", "--k", "1"], capsys)
    assert code == 2 and "--gaps" in err


def test_parse_error_exit(files, capsys):
    code, _, err = run(["sat", files("q", "string: a {b\n")], capsys)
    assert code == 2 and "error" in err
    code, _, err = run(["sat", "/nonexistent/query"], capsys)
    assert code == 2 and "cannot read" in err


def test_stdin_and_module_entry(files):
    qf = files("q", "string: a b\nwindow: 2\n")
    proc = subprocess.run([sys.executable, "-m", "tracequery", "match", qf, "-"],
                          input="a b\n", capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "match"
