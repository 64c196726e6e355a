"""Command-line interface: documented invocations byte-for-byte, exit codes
as a pure function of outcomes, rational round-trips, angle normalisation,
and report delivery to files.
"""

import csv
import io
import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from dcsums.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# sum subcommand
# ---------------------------------------------------------------------------


def test_sum_dc_example(capsys):
    code, out, err = run_cli(capsys, "sum", "dc", "--order", "2", "--h", "1", "--k", "3")
    assert (code, out, err) == (0, "4/27\n", "")


def test_sum_dedekind_example(capsys):
    code, out, _ = run_cli(capsys, "sum", "dedekind", "--h", "1", "--k", "3")
    assert (code, out) == (0, "1/18\n")


def test_sum_apostol_hand_value(capsys):
    code, out, _ = run_cli(capsys, "sum", "apostol", "--order", "3", "--h", "1", "--k", "3")
    assert (code, out) == (0, "-1/81\n")


def test_sum_s5_and_y(capsys):
    code, out, _ = run_cli(capsys, "sum", "s5", "--h", "3", "--k", "7")
    assert (code, out) == (0, "1/7\n")
    code, out, _ = run_cli(capsys, "sum", "y", "--h", "1", "--k", "5")
    assert (code, out) == (0, "8/1\n")


def test_sum_rationals_always_reparse(capsys):
    for args in (["dc", "--order", "1", "--h", "1", "--k", "5"],
                 ["dedekind", "--h", "3", "--k", "8"],
                 ["apostol", "--order", "2", "--h", "1", "--k", "7"]):
        code, out, _ = run_cli(capsys, "sum", *args)
        assert code == 0
        assert F(out.strip()) is not None
        assert "/" in out  # denominators are always printed, even for integers


def test_sum_domain_error_exit_two(capsys):
    code, out, err = run_cli(capsys, "sum", "dc", "--order", "1", "--h", "2", "--k", "4")
    assert code == 2
    assert out == ""
    assert err == "error: h and k must be coprime\n"


def test_sum_missing_order_exit_two(capsys):
    code, _, err = run_cli(capsys, "sum", "dc", "--h", "1", "--k", "3")
    assert code == 2
    assert "--order is required" in err


# ---------------------------------------------------------------------------
# eval subcommand
# ---------------------------------------------------------------------------


def test_eval_lambda_example(capsys):
    code, out, _ = run_cli(capsys, "eval", "lambda", "--s", "2", "--prec", "128")
    assert code == 0
    assert out.startswith("1.2337005501361698")  # pi^2/8
    assert "± <" in out


def test_eval_exact_zero_renders_plainly(capsys):
    code, out, _ = run_cli(capsys, "eval", "clausen", "--n", "2", "--angle", "0")
    assert (code, out) == (0, "0 ± 0\n")


def test_eval_angle_normalisation(capsys):
    _, out1, _ = run_cli(capsys, "eval", "clausen", "--n", "2", "--angle", "2", "6")
    _, out2, _ = run_cli(capsys, "eval", "clausen", "--n", "2", "--angle", "1", "3")
    assert out1 == out2
    assert out1.startswith("1.014941606409653625")  # max of the order-2 kernel


def test_eval_dc_representation_matches_sum(capsys):
    _, out, _ = run_cli(capsys, "eval", "dc-tan", "--order", "1", "--h", "1", "--k", "3")
    value = F(out.split("±")[0].strip())
    assert abs(value - F(4, 27)) < F(1, 10**30)


def test_eval_hurwitz_zeta(capsys):
    code, out, _ = run_cli(capsys, "eval", "hurwitz-zeta", "--s", "2", "--a", "1")
    assert code == 0
    assert out.startswith("1.644934066848226436")  # zeta(2)


def test_eval_unknown_function(capsys):
    code, _, err = run_cli(capsys, "eval", "zeta", "--s", "2")
    assert code == 2
    assert err.startswith("error: unknown function 'zeta'; available:")


def test_eval_missing_parameter(capsys):
    code, _, err = run_cli(capsys, "eval", "clausen", "--angle", "1", "3")
    assert code == 2
    assert "--n is required for this function" in err


def test_eval_precision_floor_is_a_diagnostic(capsys):
    code, _, err = run_cli(capsys, "eval", "dc-tan", "--order", "1", "--h", "1", "--k", "3", "--prec", "16")
    assert code == 2
    assert "precision must be at least 32 bits" in err


# ---------------------------------------------------------------------------
# verify subcommand
# ---------------------------------------------------------------------------


def test_verify_errata_exits_zero_and_all_rows_fail_as_printed(capsys):
    code, out, _ = run_cli(capsys, "verify", "errata", "--k-max", "5", "--y-max", "1", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows and all(r["verdict"] == "fail-as-printed" for r in rows)


def test_verify_exact_small_grid(capsys):
    code, out, _ = run_cli(capsys, "verify", "exact", "--k-max", "6", "--format", "plain")
    assert code == 0
    assert "[exact-pass]" in out
    assert "fail" not in out


def test_verify_all_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "all", "--k-max", "3", "--y-max", "1", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    suites_seen = {r["identity_id"] for r in rows}
    assert "dedekind-reciprocity" in suites_seen
    assert "odd-order-constant-claim" in suites_seen


def test_verify_out_file_and_silence(tmp_path, capsys):
    target = tmp_path / "report.csv"
    code, out, _ = run_cli(
        capsys, "verify", "errata", "--k-max", "3", "--y-max", "1", "--format", "csv", "--out", str(target)
    )
    assert code == 0
    assert out == ""  # the report goes to the file, nothing else is printed
    text = target.read_text()
    assert text.splitlines()[0].startswith("identity_id,")
    # byte-identical on a second run
    target2 = tmp_path / "report2.csv"
    run_cli(capsys, "verify", "errata", "--k-max", "3", "--y-max", "1", "--format", "csv", "--out", str(target2))
    assert target2.read_bytes() == target.read_bytes()


def test_verify_unwritable_out_exit_two(tmp_path, capsys):
    code, _, err = run_cli(
        capsys, "verify", "errata", "--k-max", "3", "--y-max", "1",
        "--out", str(tmp_path / "no" / "dir" / "x.csv"),
    )
    assert code == 2
    assert err.startswith("error:")


def test_verify_rejects_unknown_suite(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "bogus"])
    assert info.value.code == 2
    capsys.readouterr()


# ---------------------------------------------------------------------------
# table subcommand
# ---------------------------------------------------------------------------


def test_table_rows_reparse_and_balance(capsys):
    code, out, _ = run_cli(capsys, "table", "--k-max", "8", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows
    for row in rows:
        h, k = int(row["h"]), int(row["k"])
        s_hk, lhs, rhs = F(row["s_hk"]), F(row["lhs"]), F(row["rhs"])
        assert F(row["residual"]) == 0
        assert lhs == rhs
        assert lhs == s_hk + F(row["s_kh"])
        assert 1 <= h < k <= 8


# ---------------------------------------------------------------------------
# module execution path
# ---------------------------------------------------------------------------


def test_module_entry_point_runs():
    out = subprocess.run(
        [sys.executable, "-m", "dcsums", "sum", "dedekind", "--h", "1", "--k", "3"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout == "1/18\n"
