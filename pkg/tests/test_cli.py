import csv
import io
import json
import subprocess
import sys

import pytest

from lislc.cli import INJECT_LIMITS, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def csv_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_seq_hook_binomial(capsys):
    code, out, _ = run(capsys, "seq", "--stat", "inv", "--family", "hook", "--n", "6")
    assert code == 0
    rows = csv_rows(out)
    assert out.splitlines()[0] == "n,k,value"
    assert [r["value"] for r in rows] == ["1", "5", "10", "10", "5", "1"]
    assert rows[3] == {"n": "6", "k": "4", "value": "10"}


@pytest.mark.parametrize("n, expected", [("3", ["1", "4", "1"]), ("1", ["1"])])
def test_seq_small(capsys, n, expected):
    code, out, _ = run(capsys, "seq", "--stat", "ell", "--n", n)
    assert code == 0
    assert [r["value"] for r in csv_rows(out)] == expected


def test_seq_big_integers_are_strings(capsys):
    code, out, _ = run(capsys, "seq", "--n", "25", "--format", "json", "--jobs", "1")
    data = json.loads(out)
    assert code == 0
    assert all(isinstance(r["value"], str) for r in data["rows"])
    assert sum(int(r["value"]) for r in data["rows"]) == 15511210043330985984000000


def test_json_and_csv_carry_the_same_payload(capsys):
    _, text_csv, _ = run(capsys, "seq", "--stat", "inv", "--n", "1..9")
    _, text_json, _ = run(capsys, "seq", "--stat", "inv", "--n", "1..9", "--format", "json")
    from_csv = [{k: str(v) for k, v in r.items()} for r in csv_rows(text_csv)]
    from_json = [{k: str(v) for k, v in r.items()} for r in json.loads(text_json)["rows"]]
    assert from_csv == from_json


def test_seq_odd_n_for_even_family_is_usage_error(capsys):
    code, _, err = run(capsys, "seq", "--family", "ecol", "--n", "7")
    assert code == 2 and "error" in err


def test_even_family_range_skips_odd_n(capsys):
    code, out, _ = run(capsys, "seq", "--family", "dhook", "--n", "1..6")
    assert code == 0
    assert {r["n"] for r in csv_rows(out)} == {"2", "4", "6"}


def test_bad_range_and_family_exit_two():
    for argv in (["seq", "--n", "5..2"], ["seq", "--n", "x"], ["seq", "--family", "nope", "--n", "3"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


def test_skew_merged_limit_is_usage_error(capsys):
    code, _, err = run(capsys, "seq", "--family", "skm", "--n", "12")
    assert code == 2 and "limit" in err


def test_check_logconcave_passes(capsys):
    code, out, _ = run(capsys, "check", "logconcave", "--stat", "ell", "--n", "1..20")
    assert code == 0
    assert {r["verdict"] for r in csv_rows(out)} == {"pass"}


def test_check_infinite_failure_witness(capsys):
    code, out, _ = run(capsys, "check", "infinite", "--stat", "inv", "--n", "4")
    assert code == 1
    (row,) = csv_rows(out)
    assert row["verdict"] == "fail"
    assert row["detail"] == "FailedAt(iteration=2, index=3)"


def test_check_infinite_certified(capsys):
    code, out, _ = run(capsys, "check", "infinite", "--n", "1..15")
    assert code == 0
    assert all(r["detail"].startswith("Certified") for r in csv_rows(out))


def test_check_qlogconvex_failure(capsys):
    code, out, _ = run(capsys, "check", "qlogconvex", "--stat", "inv", "--n", "3..5")
    assert code == 1
    (row,) = csv_rows(out)
    assert row["n"] == "4" and row["verdict"] == "fail" and "(3,4,5)" in row["detail"]


def test_check_qlogconvex_needs_three_n(capsys):
    code, _, _ = run(capsys, "check", "qlogconvex", "--n", "3..4")
    assert code == 2


def test_check_realrooted(capsys):
    code, out, _ = run(capsys, "check", "realrooted", "--n", "11..12")
    assert code == 1
    rows = csv_rows(out)
    assert [r["verdict"] for r in rows] == ["pass", "fail"]


def test_inject_hook_clean(capsys):
    code, out, _ = run(capsys, "inject", "--family", "hook", "--n", "8")
    assert code == 0
    rows = csv_rows(out)
    assert len(rows) == 8 and all(r["verdict"] == "pass" for r in rows)
    assert sum(int(r["domain"]) for r in rows) > 0


def test_inject_tworow_clean(capsys):
    code, out, _ = run(capsys, "inject", "--family", "2row", "--n", "10")
    assert code == 0
    assert all(r["collisions"] == r["violations"] == "0" for r in csv_rows(out))


def test_inject_vacuous(capsys):
    code, out, _ = run(capsys, "inject", "--family", "hook", "--n", "2")
    assert code == 0
    assert all(r["domain"] == "0" for r in csv_rows(out))


def test_inject_lift(capsys):
    code, out, _ = run(capsys, "inject", "--lift", "--n", "5", "--format", "json")
    assert code == 0
    assert json.loads(out)["lift"] is True


@pytest.mark.parametrize("argv, kind", [(["--family", "hook"], "hook"), (["--lift"], "lift")])
def test_inject_limit(capsys, argv, kind):
    code, _, err = run(capsys, "inject", *argv, "--n", str(INJECT_LIMITS[kind] + 1))
    assert code == 2 and str(INJECT_LIMITS[kind]) in err


def test_tw_summary_and_table(capsys, tmp_path):
    path = tmp_path / "tw.csv"
    code, out, _ = run(capsys, "tw", "--out", str(path))
    assert code == 0
    summary = json.loads(out)
    assert abs(summary["mean"] + 1.77) <= 0.01
    assert abs(summary["variance"] - 0.81) <= 0.01
    assert summary["max_residual"] <= 1e-8
    assert summary["concave_on_nonnegative"] is True
    assert path.read_text().splitlines()[0] == "x,u,du,h,w,F,f,logdd"


def test_tw_truncation_exit_three(capsys):
    code, _, err = run(capsys, "tw", "--x-min", "-30", "--tol", "1e-6")
    assert code == 3 and "truncated" in err


def test_tw_rejects_nonpositive_tol():
    with pytest.raises(SystemExit) as exc:
        main(["tw", "--tol", "0"])
    assert exc.value.code == 2


def test_unwritable_output_is_internal_error(capsys, tmp_path):
    code, _, err = run(capsys, "seq", "--n", "3", "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 3


def test_out_file_matches_stdout(capsys, tmp_path):
    path = tmp_path / "o.csv"
    _, out, _ = run(capsys, "seq", "--n", "1..6")
    run(capsys, "seq", "--n", "1..6", "--out", str(path))
    assert path.read_text() == out


def test_output_is_deterministic_under_parallelism(capsys):
    _, a, _ = run(capsys, "seq", "--n", "22..23", "--jobs", "1")
    _, b, _ = run(capsys, "seq", "--n", "22..23", "--jobs", "3")
    assert a == b


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "lislc", "seq", "--n", "3"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert res.stdout.splitlines()[1:] == ["3,1,1", "3,2,4", "3,3,1"]
