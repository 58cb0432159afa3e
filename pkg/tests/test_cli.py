import json
import subprocess
import sys

import pytest

from pellcirc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_det_json_exact_record(capsys):
    code, out, _ = run_cli(capsys, "det", "--seq", "pell", "--n", "3", "--method", "closed")
    assert code == 0
    assert out == '{"seq":"pell","n":3,"method":"closed","det":"104"}\n'


def test_det_plain(capsys):
    code, out, _ = run_cli(
        capsys, "det", "--seq", "pell-lucas", "--n", "4", "--method", "closed", "--format", "plain"
    )
    assert code == 0
    assert out == "-1247232\n"


def test_det_csv(capsys):
    code, out, _ = run_cli(
        capsys, "det", "--seq", "pell", "--n", "4", "--method", "oracle", "--format", "csv"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "seq,n,method,det,elapsed_ns"
    assert lines[1] == "pell,4,oracle,-18560,"


def test_det_eigen(capsys):
    code, out, _ = run_cli(
        capsys, "det", "--seq", "pell", "--n", "3", "--method", "eigen", "--format", "plain"
    )
    assert code == 0
    assert float(out.strip()) == pytest.approx(104, rel=1e-9)
    assert "e" not in out.lower()


def test_det_eigen_overflow_is_clean_error(capsys):
    code, _, err = run_cli(
        capsys, "det", "--seq", "pell", "--n", "900", "--method", "eigen"
    )
    assert code == 2
    assert "double precision" in err


def test_det_closed_requires_order_3(capsys):
    code, _, err = run_cli(capsys, "det", "--seq", "pell", "--n", "2", "--method", "closed")
    assert code == 2
    assert "must be >= 3" in err


def test_det_oracle_allows_small_orders(capsys):
    code, out, _ = run_cli(
        capsys, "det", "--seq", "pell", "--n", "1", "--method", "oracle", "--format", "plain"
    )
    assert code == 0
    assert out == "1\n"


def test_det_json_round_trips(capsys):
    _, out, _ = run_cli(capsys, "det", "--seq", "pell-lucas", "--n", "7")
    record = json.loads(out)
    assert json.dumps(record, separators=(",", ":")) + "\n" == out


@pytest.mark.parametrize("n", [3, 5, 9, 14])
@pytest.mark.parametrize("seq", ["pell", "pell-lucas"])
def test_det_closed_and_oracle_strings_identical(capsys, seq, n):
    _, closed, _ = run_cli(capsys, "det", "--seq", seq, "--n", str(n), "--format", "plain")
    _, oracle, _ = run_cli(
        capsys, "det", "--seq", seq, "--n", str(n), "--method", "oracle", "--format", "plain"
    )
    assert closed == oracle


def test_inv_json_closed(capsys):
    code, out, _ = run_cli(capsys, "inv", "--seq", "pell", "--n", "3")
    assert code == 0
    record = json.loads(out)
    assert record["inverse_first_row"] == ["-9/104", "23/104", "-1/104"]
    assert list(record) == ["seq", "n", "method", "inverse_first_row"]


def test_inv_json_pell_lucas(capsys):
    _, out, _ = run_cli(capsys, "inv", "--seq", "pell-lucas", "--n", "3")
    assert json.loads(out)["inverse_first_row"] == ["-5/154", "23/308", "1/308"]


def test_inv_methods_agree(capsys):
    for seq in ("pell", "pell-lucas"):
        _, closed, _ = run_cli(capsys, "inv", "--seq", seq, "--n", "6", "--format", "plain")
        _, oracle, _ = run_cli(
            capsys, "inv", "--seq", seq, "--n", "6", "--method", "oracle", "--format", "plain"
        )
        assert closed == oracle


def test_inv_requires_order_3(capsys):
    code, _, err = run_cli(capsys, "inv", "--seq", "pell", "--n", "2")
    assert code == 2
    assert err


def test_verify_small_passes_with_skips(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n-max", "3", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["overall"] == "pass"
    assert len(report["checks"]) >= 10
    skipped = [c for c in report["checks"] if "not applicable" in c["detail"]]
    assert skipped, "n_max=3 should skip the band-pattern checks"
    assert all(c["status"] == "pass" for c in report["checks"])


def test_verify_plain_format(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n-max", "4")
    assert code == 0
    assert out.strip().endswith("overall: pass")
    assert out.count("PASS") >= 10


def test_verify_rejects_small_n_max(capsys):
    code, _, err = run_cli(capsys, "verify", "--n-max", "2")
    assert code == 2
    assert "--n-max" in err


def test_bench_csv(capsys):
    code, out, _ = run_cli(capsys, "bench", "--n", "4,6", "--reps", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "seq,n,method,det,elapsed_ns"
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) == 8  # 2 orders x 2 sequences x 2 methods
    by_key = {(r[0], r[1], r[2]): r for r in rows}
    for seq in ("pell", "pell-lucas"):
        for n in ("4", "6"):
            assert by_key[(seq, n, "closed")][3] == by_key[(seq, n, "oracle")][3]
            assert int(by_key[(seq, n, "closed")][4]) >= 0


def test_bench_oracle_cutoff_skips(capsys):
    code, out, _ = run_cli(
        capsys, "bench", "--n", "12", "--reps", "1", "--oracle-cutoff", "8"
    )
    assert code == 0
    lines = out.splitlines()
    oracle_rows = [line for line in lines if ",oracle," in line]
    assert oracle_rows == ["pell,12,oracle,,skipped", "pell-lucas,12,oracle,,skipped"]


def test_bench_json_records(capsys):
    code, out, _ = run_cli(
        capsys, "bench", "--n", "5", "--reps", "1", "--oracle-cutoff", "3", "--format", "json"
    )
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 4
    closed = [r for r in records if r["method"] == "closed"]
    skipped = [r for r in records if r.get("skipped")]
    assert all("det" in r and "elapsed_ns" in r for r in closed)
    assert len(skipped) == 2


def test_bench_empty_list(capsys):
    code, out, _ = run_cli(capsys, "bench", "--n", "", "--reps", "1")
    assert code == 0
    assert out == ""


def test_bench_rejects_bad_values(capsys):
    code, _, err = run_cli(capsys, "bench", "--n", "4,x")
    assert code == 2 and "comma-separated" in err
    code, _, err = run_cli(capsys, "bench", "--n", "4", "--reps", "0")
    assert code == 2 and "--reps" in err
    code, _, err = run_cli(capsys, "bench", "--n", "2")
    assert code == 2


def test_n_cap_flag_and_env(capsys, monkeypatch):
    code, _, err = run_cli(capsys, "det", "--seq", "pell", "--n", "40", "--n-cap", "30")
    assert code == 2 and "exceeds the cap" in err

    monkeypatch.setenv("PELLCIRC_N_CAP", "20")
    code, _, err = run_cli(capsys, "det", "--seq", "pell", "--n", "25")
    assert code == 2 and "exceeds the cap" in err

    # explicit flag wins over the environment
    code, out, _ = run_cli(
        capsys, "det", "--seq", "pell", "--n", "25", "--n-cap", "30", "--format", "plain"
    )
    assert code == 0 and out.strip()

    monkeypatch.setenv("PELLCIRC_N_CAP", "banana")
    code, _, err = run_cli(capsys, "det", "--seq", "pell", "--n", "5")
    assert code == 2 and "PELLCIRC_N_CAP" in err


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as excinfo:
        main(["det", "--seq", "fibonacci", "--n", "3"])
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit) as excinfo:
        main(["frobnicate"])
    assert excinfo.value.code == 2


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "pellcirc", "det", "--seq", "pell", "--n", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == '{"seq":"pell","n":3,"method":"closed","det":"104"}\n'
