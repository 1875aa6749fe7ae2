import csv
import io
import json

import pytest

from quatcodes.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, _ = run("--format", "json", *argv)
    return code, json.loads(out)


def test_tables_one_golden():
    code, env = run_json("tables", "I")
    assert code == 0
    assert env["discrepancies"] == []
    res = env["results"]
    assert (res["row_count"], res["matching_rows"], res["verdict"]) == (24, 24, "Perfect")
    assert res["rows"][8]["error"] == "(0,0,1,0,0,0)"
    assert res["rows"][8]["computed_syndrome"] == "1,1"


def test_tables_two_needs_allow_flag():
    code, env = run_json("tables", "II")
    assert code == 1
    assert len(env["discrepancies"]) == 1
    d = env["discrepancies"][0]
    assert (d["paper_value"], d["computed_value"]) == ("1+e3", "-1+e3")
    code, _ = run_json("--allow-discrepancies", "tables", "II")
    assert code == 0


def test_tables_three_csv():
    code, out, _ = run("--format", "csv", "tables", "III")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 16
    assert all(r["match"] == "yes" for r in rows)
    assert rows[8]["computed_syndrome"] == "half[1,1,1,1]"


def test_decode_output():
    code, env = run_json("decode", "ex2", "--received", "1;0;0")
    assert code == 0
    assert env["results"]["corrected"] == "0;0;0"
    assert env["results"]["error"] == "(1,0,0)"


def test_decode_uncorrectable_exits_one():
    # the one ex3 class outside every weight-1 sphere
    code, out, err = run("--format", "json", "decode", "ex3", "--received", "half[-3,-3,-3,-3];0")
    assert code == 1
    assert json.loads(out)["results"]["status"] == "uncorrectable"
    assert "uncorrectable" in err


@pytest.mark.parametrize("name,verdict", [("ex1", "Perfect"), ("ex2", "Perfect")])
def test_check_perfect_gaussian_lipschitz(name, verdict):
    code, env = run_json("check-perfect", name)
    assert code == 0
    assert env["results"]["min_distance"] == 3
    assert env["results"]["rows"][0]["verdict"] == verdict


def test_check_perfect_hurwitz_reports_both_sides():
    code, env = run_json("check-perfect", "ex3")
    assert code == 1
    rows = {r["mode"]: r for r in env["results"]["rows"]}
    assert rows["oracle"]["coset_count"] == 18
    assert rows["paper"]["coset_count"] == 17
    assert rows["paper"]["verdict"] == "Perfect"
    assert env["discrepancies"]
    code, env = run_json("--paper-mode", "check-perfect", "ex3")
    assert code == 0 and env["discrepancies"] == []


def test_ring_info_json():
    code, env = run_json("ring-info", "H:1+1e1+1e2", "--allow-discrepancies")
    res = env["results"]
    assert code == 0
    assert (res["cardinality"], res["published_cardinality"]) == (18, 17)
    assert res["spectra"] == {"lipschitz": [1, 8, 8, 1], "hurwitz": [1, 10, 7]}
    assert "added no new class" in res["certificate"]


def test_search_jsonl_default_under_group():
    code, out, _ = run("bounds", "search", "--case", "mannheim-t1", "--p-max", "50", "--n-max", "1000")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    hits = {(h["n"], h["k"]): h["p"] for h in lines[:-1]}
    assert hits[(549, 546)] == 13
    assert lines[-1]["command"] == "search"
    assert "rows" not in lines[-1]["results"]


def test_diff_mannheim_two():
    code, env = run_json("bounds", "diff", "--case", "mannheim-t2", "--ring", "G:3+2i", "--n-max", "4")
    assert code == 1
    assert [r["defect"] for r in env["results"]["rows"]] == [4, 8, 12, 16]
    assert len(env["discrepancies"]) == 4
    code, _ = run_json("--allow-discrepancies", "diff", "--case", "mannheim-t2", "--ring", "G:3+2i",
                       "--n-max", "4")
    assert code == 0


def test_sphere_formula_and_oracle():
    code, env = run_json("sphere", "--ring", "L:2+1e1", "--metric", "lipschitz", "--n", "3", "--t", "2",
                         "--formula", "lipschitz-t2-p5")
    assert code == 0
    assert env["results"]["oracle"] == env["results"]["formula_value"] == 265
    assert env["results"]["by_weight"] == [1, 24, 240]


def test_output_is_deterministic():
    first = run("--format", "json", "ring-info", "L:2+1e1")[1]
    assert run("--format", "json", "ring-info", "L:2+1e1")[1] == first


def test_global_flags_either_side():
    before = run("--format", "json", "--allow-discrepancies", "tables", "II")
    after = run("tables", "II", "--format", "json", "--allow-discrepancies")
    assert before[0] == after[0] == 0
    assert json.loads(before[1])["results"] == json.loads(after[1])["results"]


def test_group_aliases_match_top_level():
    assert run("codes", "decode", "ex1", "--received", "0;0;0;0;0;1", "--format", "json")[1] == \
        run("decode", "ex1", "--received", "0;0;0;0;0;1", "--format", "json")[1]


@pytest.mark.parametrize("argv", [
    ("ring-info", "G:2+2i"),
    ("decode", "ex2", "--received", "1;0"),
    ("decode", "ex2", "--received", "1;q;0"),
    ("check-perfect", "/nonexistent/file.pcm"),
])
def test_input_errors_exit_two(argv):
    code, out, err = run(*argv)
    assert code == 2
    assert err.strip()


def test_text_format_lists_discrepancies():
    code, out, _ = run("--allow-discrepancies", "tables", "II")
    assert code == 0
    assert "discrepancies: 1" in out
    code, out, _ = run("tables", "I")
    assert "discrepancies: none" in out


def test_csv_discrepancies_go_to_stderr():
    code, out, err = run("--format", "csv", "--allow-discrepancies", "tables", "II")
    assert code == 0
    assert "(0,e3,0)" in err
    assert len(list(csv.DictReader(io.StringIO(out)))) == 24


def test_cases_listing():
    code, env = run_json("cases")
    assert code == 0
    ids = [r["id"] for r in env["results"]["rows"]]
    assert "hurwitz-t2" in ids and "mannheim-t1" in ids
