import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from twobridge.cli import main
from twobridge.golden import bundled_table_path


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def fr(obj):
    return Fraction(obj["num"], obj["den"])


def test_info_text():
    code, text = run("info", "K(11,4)")
    assert code == 0
    assert "t^4 - 3*t^3 + 3*t^2 - 3*t + 1" in text
    assert "lambda'         15" in text
    assert "deg_M = 30, deg_L = 5" in text


def test_info_json_double_twist():
    code, text = run("info", "J(2,-2)", "--json")
    data = json.loads(text)
    assert code == 0 and data["knot"] == {"alpha": 5, "beta": 2}
    assert data["alexander"] == [1, -3, 1] and data["fibered"]
    assert data["exceptional_slopes"] == ["-4/1", "4/1"]


@pytest.mark.parametrize("spec", ["K(4,1)", "K(9,3)", "J(3,3)", "nonsense"])
def test_bad_knot_exit_1(spec, capsys):
    assert run("info", spec)[0] == 1
    assert "error" in capsys.readouterr().err


def test_surfaces_formats():
    code, text = run("surfaces", "K(3,1)")
    assert code == 0 and text.startswith("K(3,1): 2 surfaces")
    data = json.loads(run("surfaces", "K(27,10)", "--json")[1])
    recs = data["surfaces"]
    assert [r["slope"] for r in recs] == [-4, 0, 0, 6, 6, 12]
    assert sorted((r["slope"], fr(r["weight"])) for r in recs) == sorted(
        [(0, 1), (0, 1), (-4, 3), (6, 1), (6, 4), (12, 3)])
    assert len(json.loads(run("surfaces", "K(11,4)", "--json")[1])["surfaces"]) == 4
    csv_text = run("surfaces", "K(3,1)", "--csv")[1]
    assert csv_text.splitlines() == ["expansion,slope,weight,seifert", '"[-2,2]",0,0,1', "[3],6,1,0"]


def test_seminorm_display():
    _, text = run("seminorm", "K(27,10)", "1/2")
    assert text.splitlines() == ["||p/q||_T = 3|p + 4q| + 2|p| + 5|p - 6q| + 3|p - 12q|", "||1/2||_T = 153"]


def test_casson_examples(capsys):
    code, text = run("casson", "K(3,1)", "1/1", "--json")
    assert code == 0 and fr(json.loads(text)["casson"]["value"]) == 2
    code, text = run("casson", "K(5,2)", "4/1")
    assert code == 3 and text == ""
    assert "inapplicable" in capsys.readouterr().err
    code, text = run("casson", "K(5,2)", "4/1", "--force", "--json")
    assert code == 0 and json.loads(text)["casson"]["admissibility"]["is_strict_boundary_slope"] == "yes"
    code, text = run("casson", "K(27,10)", "1/2")
    assert code == 0 and "lambda         70" in text


def test_negative_slope_argument():
    code, text = run("casson", "K(3,1)", "-5/1", "--json")
    data = json.loads(text)
    assert code == 0 and data["slope"] == {"p": -5, "q": 1}
    assert fr(data["casson"]["value"]) == 5


@pytest.mark.parametrize("slope", ["2/0", "1/x", "0/0"])
def test_bad_slope_exit_1(slope):
    assert run("casson", "K(3,1)", slope)[0] == 1


def test_exceptional():
    assert run("exceptional", "J(2,-2)")[1] == "{-4, 4}\n"
    assert json.loads(run("exceptional", "K(13,3)", "--json")[1])["exceptional_slopes"] == [8]


def test_verify_table_bundled():
    code, text = run("verify-table")
    lines = text.splitlines()
    assert len(lines) == 27
    assert sum(ln.startswith("PASS") for ln in lines) == 24
    assert [ln.split()[1] for ln in lines if ln.startswith("FAIL")] == ["8_8", "8_9"]
    assert "KNOWN-MISMATCH deg_M: table 38 vs computed 30" in next(ln for ln in lines if " 7_4 " in ln)
    assert code == 2


def test_verify_table_good_subset(tmp_path):
    rows = [ln for ln in bundled_table_path().read_text().splitlines()
            if ln.startswith(("3_1", "4_1", "7_4", "8_11"))]
    path = tmp_path / "ok.tsv"
    path.write_text("\n".join(rows) + "\n")
    code, text = run("verify-table", str(path), "--json")
    data = json.loads(text)
    assert code == 0 and data["summary"] == {"rows": 4, "fail": 0, "known_mismatch": 1}


def test_verify_table_tampered(tmp_path):
    path = tmp_path / "bad.tsv"
    path.write_text("3_1\t3\t1\t0:0;6:4\t6\t1\t\t\n")
    code, text = run("verify-table", str(path), "--format", "tsv")
    assert code == 2 and text.startswith("FAIL 3_1")


def test_verify_table_empty_and_missing(tmp_path):
    empty = tmp_path / "empty.tsv"
    empty.write_text("")
    assert run("verify-table", str(empty))[0] == 1
    assert run("verify-table", str(tmp_path / "missing.tsv"))[0] == 1


def test_discover(tmp_path):
    path = tmp_path / "two.tsv"
    path.write_text("6_2\t\t\t0:0;2:2;-4:2;8:6\t30\t5\t\t\n")
    code, text = run("verify-table", str(path), "--discover", "--max-alpha", "15", "--json")
    data = json.loads(text)
    assert code == 0
    assert data["discover"][0]["unique"]["alpha"] == 11


def test_json_has_no_floats():
    def walk(x):
        assert not isinstance(x, float)
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)

    for argv in (("info", "K(27,10)"), ("surfaces", "K(15,11)"), ("casson", "K(27,10)", "1/2"),
                 ("seminorm", "K(5,2)", "3/2"), ("verify-table",)):
        walk(json.loads(run(*argv, "--json")[1]))


def test_json_round_trip_reverifies():
    from twobridge.knots import TwoBridgeKnot
    from twobridge.seminorm import build_table

    data = json.loads(run("info", "K(23,9)", "--json")[1])
    k = TwoBridgeKnot(**data["knot"])
    terms = tuple((t["slope"], t["doubled_weight"]) for t in data["seminorm_terms"])
    assert build_table(k).terms == terms


def test_deterministic():
    for argv in (("info", "K(29,12)", "--json"), ("surfaces", "K(27,10)"), ("verify-table",)):
        assert run(*argv) == run(*argv)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "twobridge", "casson", "K(27,10)", "1/2", "--json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["casson"]["value"] == {"num": 70, "den": 1}
    proc = subprocess.run([sys.executable, "-m", "twobridge", "info", "K(4,1)"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 1
