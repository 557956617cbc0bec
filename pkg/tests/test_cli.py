import json

import pytest

from baermult.cli import EXIT_FAILED, EXIT_OK, EXIT_REFUSED, EXIT_USAGE, PRINT_CAP, main
from baermult.groups import parse_group


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("w, n, expected", [("2", "4", "6"), ("5", "1", "0")])
def test_witt(capsys, w, n, expected):
    code, out, _ = run(capsys, "witt", "-w", w, "-n", n)
    assert code == EXIT_OK and out.strip() == expected


def test_witt_usage_error(capsys):
    code, _, err = run(capsys, "witt", "-w", "0", "-n", "3")
    assert code == EXIT_USAGE
    assert "must be >= 1" in err


def test_multiplier_abelian(capsys):
    code, out, _ = run(capsys, "multiplier", "-g", "Z_4 + Z_2", "-c", "1")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "Z_2, order 2^1, Thm 2.7"


def test_multiplier_product(capsys):
    code, out, _ = run(capsys, "multiplier", "-g", "Z_9 *2* Z_3", "-c", "2")
    assert code == EXIT_OK
    assert out.startswith("Z_3^(5), order 3^5, Thm 2.13")
    assert "f_2=5" in out


def test_multiplier_boundary_reports_agreement(capsys):
    code, out, _ = run(capsys, "multiplier", "-g", "Z_5 *2* Z_5", "-c", "2")
    assert code == EXIT_OK
    assert "Thm 2.15(ii)" in out and "2.15(i)" in out


def test_multiplier_hypothesis_violation(capsys):
    code, out, _ = run(capsys, "multiplier", "-g", "Z_2 *2* Z_2", "-c", "2")
    assert code == EXIT_REFUSED
    assert "gcd(2,r_1)=1" in out


def test_multiplier_parse_error(capsys):
    code, _, err = run(capsys, "multiplier", "-g", "Z_9 *2 Z_3", "-c", "2")
    assert code == EXIT_USAGE
    assert "position 4" in err


def test_multiplier_invalid_group(capsys):
    code, _, err = run(capsys, "multiplier", "-g", "Z_2 *2* Z_4", "-c", "2")
    assert code == EXIT_USAGE and "divide" in err


def test_multiplier_bad_row(capsys):
    code, _, _ = run(capsys, "multiplier", "-g", "Z_4", "-c", "2,x")
    assert code == EXIT_USAGE


def test_multiplier_record_round_trips(capsys):
    code, out, _ = run(capsys, "--format", "record", "multiplier", "-g", "Z *2* Z *1* Z_3", "-c", "2")
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["structure_text"] == "Z^(5) + Z_3^(6)"
    assert rec["theorem"] == "2.16"
    assert parse_group(rec["group"]) == parse_group("Z *2* Z *1* Z_3")


def test_format_after_subcommand(capsys):
    a = run(capsys, "--format", "record", "multiplier", "-g", "Z_9 *2* Z_3", "-c", "2,1")
    b = run(capsys, "multiplier", "--format", "record", "-g", "Z_9 *2* Z_3", "-c", "2,1")
    assert a == b
    assert json.loads(a[1])["row"] == [2, 1]


def test_refusal_record(capsys):
    code, out, _ = run(capsys, "--format", "record", "multiplier", "-g", "Z_2 *2* Z_2", "-c", "2")
    assert code == EXIT_REFUSED
    assert "refused" in json.loads(out)


def test_hall(capsys):
    code, out, _ = run(capsys, "hall", "-n", "2", "-w", "3")
    assert code == EXIT_OK
    assert out.splitlines() == ["[[x2,x1],x1]", "[[x2,x1],x2]", "count 2"]
    code, out, _ = run(capsys, "hall", "-n", "3", "-w", "2", "--contains", "3")
    assert out.splitlines()[-1] == "count 2"
    code, out, _ = run(capsys, "hall", "-n", "0", "-w", "2")
    assert code == EXIT_OK and out.splitlines() == ["count 0"]


def test_hall_truncates(capsys):
    code, out, _ = run(capsys, "hall", "-n", "4", "-w", "5")
    lines = out.splitlines()
    assert lines[-1] == "count 204"
    assert len(lines) == PRINT_CAP + 2
    assert "4 more not shown" in lines[-2]


def test_hall_refused_over_cap(capsys, monkeypatch):
    monkeypatch.setenv("BAERMULT_MAX_WEIGHT", "3")
    code, _, err = run(capsys, "hall", "-n", "2", "-w", "4")
    assert code == EXIT_REFUSED and "refused" in err


def test_hall_bad_contains(capsys):
    code, _, _ = run(capsys, "hall", "-n", "2", "-w", "2", "--contains", "3")
    assert code == EXIT_USAGE


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "-p", "2", "-m", "3", "-c", "1")
    assert code == EXIT_OK
    assert "maximizer (1, 1, 1)" in out
    assert sum(1 for line in out.splitlines() if line.startswith("(")) == 3


def test_classify_failure_exit(capsys):
    code, out, _ = run(capsys, "classify", "-p", "3", "-m", "2", "-c", "1,1")
    assert code == EXIT_FAILED and "CLAIM FAILS" in out


def test_classify_refused(capsys):
    code, _, _ = run(capsys, "classify", "-p", "2", "-m", "3", "-c", "2", "-n", "2")
    assert code == EXIT_REFUSED


def test_verify_counterexample(capsys):
    code, out, _ = run(capsys, "verify", "counterexample", "-c", "1")
    assert code == EXIT_OK and out.strip() == "i=3: 9 ≥ 6"
    code, out, _ = run(capsys, "verify", "counterexample", "-c", "1", "--bound", "2")
    assert code == EXIT_FAILED


def test_verify_bounds(capsys):
    code, out, _ = run(capsys, "verify", "bounds", "-p", "3", "-m", "5", "-c", "1")
    assert code == EXIT_OK
    assert out.strip().endswith("all pass")


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "equality", "-m", "6", "-c", "2"),
        ("verify", "monotonicity", "-c", "2,1", "-n", "2", "-m", "4"),
        ("verify", "extremal", "-p", "5", "-c", "2", "-n", "2", "-m", "4"),
    ],
)
def test_verify_suites_pass(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == EXIT_OK


def test_verify_record_output(capsys):
    code, out, _ = run(capsys, "--format", "record", "verify", "bounds", "-p", "2", "-m", "3")
    lines = [json.loads(x) for x in out.splitlines()]
    assert lines[-1]["ok"] is True
    assert lines[-1]["caps"] == {"max_m": 3}
    assert all(x["status"] == "pass" for x in lines[:-1])


def test_verify_out_of_hypothesis(capsys):
    code, out, _ = run(capsys, "verify", "extremal", "-p", "2", "-c", "2", "-n", "2", "-m", "2")
    assert code == EXIT_OK
    assert "out_of_hypothesis 2" in out


def test_record_output_is_stable(capsys):
    argv = ("--format", "record", "classify", "-p", "3", "-m", "4", "-c", "2")
    assert run(capsys, *argv) == run(capsys, *argv)
