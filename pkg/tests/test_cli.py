import json

import pytest

from denumerant import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_table(capsys):
    code, out, _ = run(capsys, "count", "--coeffs", "3,5", "--n", "8")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split() == ["coeffs", "n", "value", "method"]
    assert lines[1].split() == ["3,5", "8", "1", "recursion"]


def test_count_methods(capsys):
    code, out, _ = run(
        capsys, "count", "--coeffs", "3,5", "--n", "8", "--method", "oracle",
        "--format", "json",
    )
    assert code == 0
    row = json.loads(out)
    assert row == {"coeffs": [3, 5], "n": 8, "value": 1, "method": "oracle"}
    code, out, _ = run(
        capsys, "count", "--coeffs", "3,5", "--n", "7", "--method", "popoviciu",
        "--format", "json",
    )
    assert json.loads(out)["value"] == 0


def test_count_range_csv(capsys):
    code, out, _ = run(
        capsys, "count", "--coeffs", "2,3", "--n-range", "0:5", "--format", "csv"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "coeffs,n,value,method"
    values = [line.split(",")[-2] for line in lines[1:]]
    assert values == ["1", "0", "1", "1", "1", "1"]


def test_count_popoviciu_needs_pair(capsys):
    code, _, err = run(
        capsys, "count", "--coeffs", "2,3,5", "--n", "4", "--method", "popoviciu"
    )
    assert code == 3
    assert "pairs" in err


def test_count_popoviciu_needs_coprime(capsys):
    code, _, err = run(
        capsys, "count", "--coeffs", "4,6", "--n", "8", "--method", "popoviciu"
    )
    assert code == 3


def test_bounds_row(capsys):
    code, out, _ = run(
        capsys, "bounds", "--coeffs", "3,5", "--n", "8", "--format", "json"
    )
    assert code == 0
    row = json.loads(out)
    assert row["exact"] == 1
    assert row["lower_a"] == "1/15"
    assert row["lower_b"] == "1/15"
    assert row["upper_a"] == "23/15"
    assert row["applicable"] is True
    assert row["ok"] is True


def test_bounds_inequality_b(capsys):
    code, out, _ = run(
        capsys, "bounds", "--coeffs", "1,2,3", "--n", "10", "--inequality", "b",
        "--format", "json",
    )
    assert code == 0
    row = json.loads(out)
    assert row["lower_b"] == "77/6"
    assert row["exact"] == 14
    assert row["ok"] is True


def test_bounds_rejects_non_coprime(capsys):
    code, _, err = run(capsys, "bounds", "--coeffs", "4,6", "--n", "7")
    assert code == 3
    assert "gcd" in err


def test_bounds_auto_reduce(capsys):
    code, out, _ = run(
        capsys, "bounds", "--coeffs", "4,6", "--n-range", "6:7", "--auto-reduce",
        "--format", "json",
    )
    assert code == 0
    first, second = [json.loads(line) for line in out.strip().splitlines()]
    assert first["exact"] == 1 and first["ok"] is True
    assert second["exact"] == 0
    assert second["lower_a"] is None and second["upper_a"] is None
    assert second["applicable"] is False and second["ok"] is True


def test_frobenius_json(capsys):
    code, out, _ = run(capsys, "frobenius", "--coeffs", "4,6,9", "--format", "json")
    assert code == 0
    row = json.loads(out)
    assert row["g"] == 11
    assert row["brauer_upper"] == 11
    assert row["root_lower_1"] is None
    assert row["root_lower_2"] is None


def test_frobenius_non_coprime_exits_3(capsys):
    code, _, err = run(capsys, "frobenius", "--coeffs", "4,6")
    assert code == 3


def test_bf_value(capsys):
    code, out, _ = run(
        capsys, "bf", "--coeffs", "2,3", "-m", "2", "-l", "2", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["value"] == "3/2"


def test_bf_index_error_exits_3(capsys):
    code, _, err = run(capsys, "bf", "--coeffs", "2,3", "-m", "3", "-l", "1")
    assert code == 3


def test_dhat_row(capsys):
    code, out, _ = run(capsys, "dhat", "--coeffs", "2,3", "--n", "6", "--format", "json")
    assert code == 0
    row = json.loads(out)
    assert row["exact"] == 7
    assert row["lower"] == "49/12"
    assert row["middle"] == "35/6"
    assert row["upper"] == "361/48"
    assert row["ok"] is True


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["count", "--coeffs", "3,x", "--n", "4"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        cli.main(["count", "--coeffs", "3,5"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        cli.main([])
    assert exc.value.code == 2
    capsys.readouterr()


def test_negative_target_exits_2(capsys):
    code, _, err = run(capsys, "count", "--coeffs", "2,3", "--n", "-4")
    assert code == 2
    assert "error" in err


def test_out_file(tmp_path, capsys):
    path = tmp_path / "rows.csv"
    code, out, _ = run(
        capsys, "count", "--coeffs", "2,3", "--n", "6", "--format", "csv",
        "--out", str(path),
    )
    assert code == 0
    assert out == ""
    assert path.read_text().splitlines()[1] == "\"2,3\",6,2,recursion"


def test_verify_json_and_exit_codes(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, _, err = run(
        capsys, "verify", "--suite", "popoviciu", "--trials", "20",
        "--seed", "9", "--out", str(path),
    )
    assert code == 0
    assert "popoviciu" in err
    report = json.loads(path.read_text())
    assert report["instances"] == 20
    assert report["failures"] == []


def test_verify_repeat_is_identical_modulo_wall_time(tmp_path, capsys):
    args = [
        "verify", "--suite", "oracle-eq", "--trials", "25", "--seed", "4",
        "--k-range", "2:4",
    ]
    first = tmp_path / "one.json"
    second = tmp_path / "two.json"
    assert cli.main(args + ["--out", str(first)]) == 0
    assert cli.main(args + ["--out", str(second)]) == 0
    capsys.readouterr()
    one = json.loads(first.read_text())
    two = json.loads(second.read_text())
    one.pop("wall_time_s")
    two.pop("wall_time_s")
    assert one == two


def test_verify_failure_exit_code(monkeypatch, capsys):
    from denumerant.sweep import Failure, VerificationReport, SweepConfig

    def fake_run(cfg):
        return VerificationReport(
            suite=cfg.suite,
            config=cfg,
            instances=1,
            failures=[Failure({"coeffs": (2, 3), "n": 1}, "broken", "0", "1")],
            wall_time_s=0.0,
        )

    monkeypatch.setattr(cli, "run_verify", fake_run)
    code, out, err = run(capsys, "verify", "--suite", "oracle-eq")
    assert code == 1
    assert json.loads(out)["failures"][0]["relation"] == "broken"
