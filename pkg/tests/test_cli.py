import json
import subprocess
import sys

import pytest

from collatz_strands.cli import fmt_int, main, parse_natural, run
from collatz_strands.schemas import BY_COMMAND

jsonschema = pytest.importorskip("jsonschema")


def test_trace_five():
    code, out = run(["trace", "5"])
    assert code == 0
    assert out == "(1, k=4)\nm=1\n"


def test_trace_budget_exit_code():
    code, out = run(["trace", "27", "--max-steps", "5"])
    assert code == 3
    assert out.splitlines()[0] == "(41, k=1)"
    assert len(out.splitlines()) == 6


def test_trace_zero():
    code, out = run(["trace", "0"])
    assert code == 0 and out.endswith("m=1\n")


def test_trace_hex_input():
    assert run(["trace", "0x1B"]) == run(["trace", "27"])


@pytest.mark.parametrize("bad", ["-5", "abc", "1.5", "0x", "12a"])
def test_malformed_number_exit_2(bad):
    code, _ = run(["trace", "--", bad])
    assert code == 2


def test_usage_error_exit_1():
    assert run(["trace"])[0] == 1
    assert run(["nonsense"])[0] == 1
    assert run(["table", "--rows", "x"])[0] == 1


def test_coords():
    assert run(["coords", "43"]) == (0, "(2, 5)\n")
    assert run(["coords", "111"]) == (0, "(4, 3)\n")
    assert run(["coords", "42"])[0] == 2


def test_table_csv():
    code, out = run(["table", "--rows", "2", "--cols", "6", "--format", "csv"])
    assert code == 0
    assert out == "1,5,9,13,17,21\n3,11,19,27,35,43\n"


def test_table_out_of_cap():
    assert run(["table", "--rows", "65", "--cols", "2"])[0] == 2
    assert run(["table", "--rows", "2", "--cols", str(2**20 + 1)])[0] == 2


def test_diagram_ascii_worked_trajectory():
    code, out = run(["diagram", "--rows", "9", "--cols", "43", "--trajectory", "3,4"])
    assert code == 0
    lines = out.splitlines()
    grid = {int(line.split()[0]): line[2:] for line in lines[:9]}
    for i, j in [(5, 0), (4, 1), (3, 4), (2, 13), (1, 40)]:
        assert grid[i][2 * j] == "*"
    assert lines[-1] == "trajectory: (5, 0) (4, 1) (3, 4) (2, 13) (1, 40)"


def test_diagram_marks_rational_crossings():
    code, out = run(["diagram", "--rows", "4", "--cols", "10", "--trajectory", "2,2"])
    assert code == 0
    row3 = [line for line in out.splitlines() if line.startswith("3 ")][0]
    assert row3[2:].index("x") == 1  # between column 0 and 1 (column 1/3)
    assert "(3, 1/3)" in out


def test_diagram_svg_is_exact_and_wellformed():
    import xml.etree.ElementTree as ET

    code, out = run(["diagram", "--rows", "4", "--cols", "10", "--trajectory", "2,2", "--format", "svg"])
    assert code == 0
    root = ET.fromstring(out)
    ns = "{http://www.w3.org/2000/svg}"
    assert len(root.find(ns + "g").findall(ns + "circle")) == 40
    marks = root.findall(f"{ns}g[@class='crossings']/{ns}circle")
    assert [(m.get("data-row"), m.get("data-col"), m.get("class")) for m in marks] == [
        ("3", "1/3", "between-dots"), ("2", "2", "on-dot"), ("1", "7", "on-dot"),
    ]
    unit = 3**4
    assert marks[0].get("cx") == str(unit // 3 + unit // 2)


def test_diagram_output_is_deterministic():
    a = run(["diagram", "--rows", "6", "--cols", "20", "--trajectory", "4,7", "--format", "svg"])
    b = run(["diagram", "--rows", "6", "--cols", "20", "--trajectory", "4,7", "--format", "svg"])
    assert a == b


def test_reduce():
    code, out = run(["reduce", "5"])
    assert code == 0 and out == "J_0=1\nJ_1=0\nhalt: zero\n"
    code, out = run(["reduce", "111", "--rounds", "3"])
    assert code == 3 and out.endswith("halt: budget\n")


def test_classify_single():
    assert run(["classify", "40"]) == (0, "Lesser: j=30 < D=40\n")
    assert run(["classify", "6"]) == (0, "Greater: j=2 > D=5/3\n")
    assert run(["classify", "0"])[0] == 2
    assert run(["classify"])[0] == 2


def test_classify_range_csv():
    code, out = run(["classify", "--range", "1..2000", "--format", "csv"])
    assert code == 0
    rows = out.splitlines()
    assert rows[0] == "J,i,j,D,class"
    assert len(rows) == 2001
    assert not any(r.endswith(",On") for r in rows)
    assert "6,2,2,5/3,Greater" in rows


def test_search_cli_and_resume(tmp_path):
    ck = str(tmp_path / "ck.json")
    full = run(["search", "appendix", "--a-max", "32", "--b-max", "32", "--no-timing"])
    assert full[0] == 0
    doc = json.loads(full[1])
    assert [(s["a"], s["b"], s["c"], s["well_formed"]) for s in doc["solutions"]] == [(1, 1, 13, False)]
    part = run(["search", "appendix", "--a-max", "32", "--b-max", "32", "--checkpoint", ck,
                "--stop-after", "100", "--no-timing"])
    assert part[0] == 3
    assert run(["search", "appendix", "--a-max", "31", "--b-max", "32", "--resume", ck])[0] == 2
    assert run(["search", "unified", "--i-max", "32", "--k-max", "32", "--resume", ck])[0] == 2
    resumed = run(["search", "appendix", "--a-max", "32", "--b-max", "32", "--resume", ck, "--no-timing"])
    assert resumed == full


def test_search_cli_errors(tmp_path):
    assert run(["search", "appendix", "--a-max", "0", "--b-max", "3"])[0] == 2
    assert run(["search", "appendix", "--a-max", "3"])[0] == 2
    assert run(["search", "appendix", "--a-max", "3", "--b-max", "3", "--resume", str(tmp_path / "x")])[0] == 2


def test_search_workers_env(monkeypatch):
    monkeypatch.setenv("COLLATZ_STRANDS_WORKERS", "2")
    a = run(["search", "unified", "--i-max", "64", "--k-max", "64", "--no-timing"])
    monkeypatch.setenv("COLLATZ_STRANDS_WORKERS", "1")
    b = run(["search", "unified", "--i-max", "64", "--k-max", "64", "--no-timing"])
    assert a == b and a[0] == 0


def test_verify_named_suite():
    code, out = run(["verify", "--suite", "lemma-3.7", "--bound", "1000"])
    assert code == 0 and out.startswith("PASS [strand-valuation]")
    assert run(["verify", "--suite", "strand-valuation", "--bound", "50"])[0] == 0
    assert run(["verify", "--suite", "nope"])[0] == 2


def test_verify_reports_violation(monkeypatch):
    from collatz_strands import core

    monkeypatch.setattr(core, "collatz_step", lambda n: core.StepResult(3, 0))
    code, out = run(["verify", "--suite", "mod3-exclusion", "--bound", "10"])
    assert code == 4 and out.startswith("FAIL")


@pytest.mark.parametrize("argv", [
    ["trace", "27", "--format", "json"],
    ["trace", "27", "--max-steps", "3", "--format", "json"],
    ["coords", "111", "--format", "json"],
    ["table", "--rows", "3", "--cols", "4", "--format", "json"],
    ["reduce", "27", "--format", "json"],
    ["classify", "6", "--format", "json"],
    ["classify", "--range", "1..50", "--format", "json"],
    ["search", "appendix", "--a-max", "8", "--b-max", "8"],
    ["search", "unified", "--i-max", "8", "--k-max", "8", "--stop-after", "20"],
    ["verify", "--suite", "row-one", "--bound", "100", "--format", "json"],
])
def test_json_outputs_match_schema(argv):
    code, out = run(argv)
    assert code in (0, 3)
    doc = json.loads(out)
    jsonschema.validate(doc, BY_COMMAND[argv[0]])
    assert json.loads(json.dumps(doc)) == doc


def test_fmt_int_elides_long_values_in_text_only():
    n = 10**50 + 7
    assert fmt_int(n) == "100000000000...000000000007 (51 digits)"
    assert fmt_int(n, "json") == str(n)
    assert fmt_int(10**39) == str(10**39)


def test_trace_json_never_elides():
    n = 2**200 - 1
    code, out = run(["trace", str(n), "--format", "json"])
    assert code == 0
    assert json.loads(out)["n"] == n


def test_parse_natural():
    assert parse_natural("0x10") == 16
    assert parse_natural("007") == 7


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "collatz_strands.cli", "coords", "43"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "(2, 5)\n"


def test_main_returns_code():
    import io

    buf = io.StringIO()
    assert main(["coords", "7"], buf) == 0 and buf.getvalue() == "(3, 0)\n"
