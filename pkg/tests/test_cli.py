import csv
import io
import json

import pytest

from franelcheck.cli import main
from franelcheck.suite import run_check


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_franel(capsys):
    code, out, _ = run_cli(capsys, "compute", "--seq", "franel", "--n", "6")
    assert code == 0
    assert out == "1 2 10 56 346 2252 15184\n"


def test_compute_other_sequences(capsys):
    code, out, _ = run_cli(capsys, "compute", "--seq", "apery", "--n", "2")
    assert (code, out) == (0, "1 5 73\n")
    code, out, _ = run_cli(capsys, "compute", "--seq", "fpoly", "--n", "2", "--x", "2")
    assert (code, out) == (0, "1 4 32\n")
    code, out, _ = run_cli(capsys, "compute", "--seq", "genfranel", "--n", "3", "--r", "2")
    assert (code, out) == (0, "1 2 6 20\n")
    code, _, err = run_cli(capsys, "compute", "--seq", "fpoly", "--n", "2")
    assert code == 2 and "--x" in err


def test_compute_json_format(capsys):
    code, out, _ = run_cli(capsys, "compute", "--seq", "franel", "--n", "2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"seq": "franel", "values": ["1", "2", "10"]}


def test_verify_single_check_matches_run_check(capsys):
    code, out, _ = run_cli(capsys, "verify", "--id", "C15", "--primes", "5..5", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    want = run_check("C15", 5)[0]
    assert rows == [
        {
            "check_id": "C15",
            "class": "theorem",
            "prime": 5,
            "modulus_exponent": 2,
            "params": {},
            "lhs": str(want.lhs),
            "rhs": str(want.rhs),
            "pass": True,
        }
    ]


def test_verify_text_and_exit_code(capsys):
    code, out, _ = run_cli(capsys, "verify", "--primes", "5..13")
    assert code == 0
    assert "C15" in out and "0 fail" in out


def test_verify_csv_schema(capsys):
    code, out, _ = run_cli(capsys, "verify", "--id", "WOL", "--primes", "5..7", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert set(rows[0]) == {
        "check_id", "class", "prime", "modulus_exponent", "params", "lhs", "rhs", "pass",
    }
    assert len(rows) == 6  # 3 parts x 2 primes
    assert {json.loads(r["params"])["part"] for r in rows} == {"H1", "H2", "CB"}


def test_verify_bad_ranges(capsys):
    code, _, err = run_cli(capsys, "verify", "--primes", "4..4")
    assert code == 2 and "no primes" in err
    code, _, err = run_cli(capsys, "verify", "--primes", "nope")
    assert code == 2
    code, _, err = run_cli(capsys, "verify", "--primes", "5..7", "--id", "NOPE")
    assert code == 2


def test_verify_out_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "verify", "--id", "C15", "--primes", "5..13", "--format", "json", "--out", str(path)
    )
    assert code == 0 and out == ""
    assert len(json.loads(path.read_text())) == 4


def test_verify_unwritable_out(capsys):
    code, _, err = run_cli(
        capsys, "verify", "--id", "C15", "--primes", "5..5", "--out", "/nonexistent/dir/x.json"
    )
    assert code == 2 and "error" in err


def test_eval_congruence_statement(capsys):
    code, out, _ = run_cli(
        capsys, "eval",
        "sum(k=0..p-1,(-1)^k*f(k)) ≡ jacobi(p,3) (mod p^2)",
        "--primes", "5..19",
    )
    assert code == 0
    assert "6/6 pass" in out


def test_eval_false_statement_exit_code(capsys):
    code, out, _ = run_cli(
        capsys, "eval", "sum(k=0..p-1,(-1)^k*f(k)) =mod= 1 (mod p^2)", "--primes", "5..23"
    )
    assert code == 1
    assert "FAIL" in out


def test_eval_bare_expression(capsys):
    code, out, _ = run_cli(
        capsys, "eval", "f(4)", "--primes", "5..5", "--mod-exp", "3"
    )
    assert code == 0
    assert out == "p=5: 96\n"


def test_eval_parse_error_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "eval", "sum(k=0..p, f(k)", "--primes", "5..7")
    assert code == 2
    assert "expected" in err


def test_eval_error_rows(capsys):
    code, out, _ = run_cli(capsys, "eval", "1/p", "--primes", "5..7")
    assert code == 1
    assert "ERROR" in out


def test_identities_command(capsys):
    code, out, _ = run_cli(capsys, "identities")
    assert code == 0
    assert out.count("PASS") == 8


def test_scan_ar_command(capsys):
    code, out, _ = run_cli(capsys, "scan-ar", "--r", "1", "--primes", "5..97")
    assert code == 0
    assert "a_1 = -1 (odd)" in out
    code, out, _ = run_cli(capsys, "scan-ar", "--r", "2", "--primes", "5..97", "--format", "json")
    assert code == 0
    assert json.loads(out)["value"] == 5


def test_check_3adic_command(capsys):
    code, out, _ = run_cli(capsys, "check-3adic", "--n", "243")
    assert code == 0
    assert "no violations" in out


def test_cornacchia_command(capsys):
    code, out, _ = run_cli(capsys, "cornacchia", "--primes", "5..13")
    assert code == 0
    assert "7 = 2^2 + 3*1^2" in out
    assert "5: no representation" in out
    code, out, _ = run_cli(capsys, "cornacchia", "--primes", "5..13", "--format", "json")
    rows = json.loads(out)
    assert rows[1] == {"prime": 7, "x": 2, "y": 1}


def test_workers_flag_validated(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "--primes", "5..7", "--workers", "0"])


def test_worker_reports_identical(tmp_path, capsys):
    paths = []
    for w in (1, 4):
        path = tmp_path / f"w{w}.json"
        code, _, _ = run_cli(
            capsys, "verify", "--primes", "5..31", "--format", "json",
            "--workers", str(w), "--out", str(path),
        )
        assert code == 0
        paths.append(path.read_bytes())
    assert paths[0] == paths[1]
