"""End-to-end tests of the command-line interface.

Exit-code contract: 0 = success / ordering certified, 1 = a verification
failure (violation witness, failed certification, series drift), 2 = bad
usage (argparse errors and invalid argument values).
"""

import math
import shutil
import subprocess

import pytest

from atanbounds import cli

SUP_R_LOWER = 0.0026695501084367875

EVAL_KEYS = ["x", "f", "g", "h", "delta_f", "delta_h", "r_f", "r_h", "env_max", "env_min"]
SWEEP_HEADER = "x,f,g,h,r_f,r_h,env_max,env_min"


def parse_eval(output: str) -> dict:
    record = {}
    for line in output.strip().splitlines():
        name, value = line.split(" = ")
        record[name.strip()] = float(value)
    return record


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------


def test_eval_prints_all_fields_in_order(capsys):
    assert cli.main(["eval", "1.0"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert [line.split(" = ")[0].strip() for line in lines] == EVAL_KEYS
    record = parse_eval("\n".join(lines))
    assert record["x"] == 1.0
    assert record["f"] <= record["g"] <= record["h"]
    assert record["r_f"] > 0.0 and record["env_max"] > record["env_min"] > 0.0


def test_eval_negative_argument_is_odd_mirror(capsys):
    assert cli.main(["eval", "2.0"]) == 0
    pos = parse_eval(capsys.readouterr().out)
    assert cli.main(["eval", "-2.0"]) == 0
    neg = parse_eval(capsys.readouterr().out)
    # the curves and their raw differences are odd, the ratios even
    for key in ("f", "g", "h", "delta_f", "delta_h"):
        assert neg[key] == -pos[key]
    for key in ("r_f", "r_h", "env_max", "env_min"):
        assert neg[key] == pos[key]


def test_eval_rejects_non_numeric():
    with pytest.raises(SystemExit) as exc:
        cli.main(["eval", "banana"])
    assert exc.value.code == 2


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------


def test_sweep_writes_csv_with_schema(tmp_path, capsys):
    out = tmp_path / "rows.csv"
    assert cli.main(["sweep", "0", "10", "5", "--out", str(out)]) == 0
    assert f"wrote 5 rows to {out}" in capsys.readouterr().out
    lines = out.read_text().splitlines()
    assert lines[0] == SWEEP_HEADER
    assert len(lines) == 6
    xs = [float(line.split(",")[0]) for line in lines[1:]]
    assert xs[0] == 0.0 and xs[-1] == 10.0
    assert xs == sorted(xs)


def test_sweep_two_points_is_exactly_the_endpoints(tmp_path):
    out = tmp_path / "two.csv"
    assert cli.main(["sweep", "0", "10", "2", "--out", str(out)]) == 0
    rows = out.read_text().splitlines()[1:]
    assert [float(r.split(",")[0]) for r in rows] == [0.0, 10.0]


def test_sweep_output_is_byte_deterministic(tmp_path):
    # options go before the -- separator, positionals after it
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    assert cli.main(["sweep", "--out", str(a), "--", "-3", "3", "41"]) == 0
    assert cli.main(["sweep", "--out", str(b), "--", "-3", "3", "41"]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_sweep_values_round_trip_and_respect_ceiling(tmp_path):
    out = tmp_path / "vals.csv"
    assert cli.main(["sweep", "0", "10", "201", "--out", str(out)]) == 0
    rows = [line.split(",") for line in out.read_text().splitlines()[1:]]
    worst_r_f = max(float(r[4]) for r in rows)
    assert 0.0 < worst_r_f < 0.0027
    for r in rows[1:]:
        assert float(r[1]) <= float(r[2]) * (1 + 2 ** -50)


def test_sweep_plot_writes_svg(tmp_path, capsys):
    out = tmp_path / "fig.csv"
    assert cli.main(["sweep", "1e-2", "1e2", "32", "--out", str(out), "--plot"]) == 0
    figure = tmp_path / "fig.svg"
    assert f"wrote figure to {figure}" in capsys.readouterr().out
    assert figure.exists()
    assert figure.read_text(errors="ignore").lstrip().startswith("<?xml")


def test_sweep_usage_errors(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["sweep", "0", "10", "5"])  # --out is required
    assert exc.value.code == 2
    # log grid cannot start at 0: rejected with exit 2, nothing written
    out = tmp_path / "never.csv"
    assert cli.main(["sweep", "0", "1", "5", "--out", str(out), "--grid", "log"]) == 2
    assert "error:" in capsys.readouterr().err
    assert not out.exists()


# ---------------------------------------------------------------------------
# certify
# ---------------------------------------------------------------------------


def test_certify_passing_range(capsys):
    assert cli.main(["certify", "0", "4", "64"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("certification report")
    assert "passed                 = yes" in out


def test_certify_negative_range_needs_separator(capsys):
    assert cli.main(["certify", "--", "-1", "1", "33"]) == 0
    assert "passed                 = yes" in capsys.readouterr().out


def test_certify_writes_report_csv(tmp_path, capsys):
    out = tmp_path / "report.csv"
    assert cli.main(["certify", "0", "2", "32", "--out", str(out)]) == 0
    assert f"wrote report CSV to {out}" in capsys.readouterr().out
    lines = out.read_text().splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("lo,hi,sample_count,grid,")


def test_certify_perturb_finds_witness(capsys):
    rc = cli.main(["certify", "0", "1", "16", "--perturb", "lower:3:-1e-2"])
    assert rc == 1
    out = capsys.readouterr().out
    assert "violation witness" in out


def test_certify_perturb_unperturbed_is_clean(capsys):
    rc = cli.main(["certify", "0", "1", "16", "--perturb", "upper:2:0"])
    assert rc == 0
    assert "no violation witness" in capsys.readouterr().out


@pytest.mark.parametrize(
    "spec",
    [
        "lower:1:1e-3",   # wrong sign for the lower triple
        "upper:1:-1e-3",  # wrong sign for the upper triple
        "lower:1",        # missing the epsilon part
        "lower:x:-1e-3",  # non-integer component
        "middle:1:-1e-3", # unknown triple
        "lower:4:-1e-3",  # component out of range
    ],
)
def test_certify_perturb_usage_errors(spec, capsys):
    assert cli.main(["certify", "0", "1", "16", "--perturb", spec]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_certify_range_usage_errors(capsys):
    assert cli.main(["certify", "5", "1", "16"]) == 2
    assert "error:" in capsys.readouterr().err
    assert cli.main(["certify", "0", "1", "16", "--oracle-digits", "10"]) == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["certify", "0", "1", "16", "--grid", "banana"])
    assert exc.value.code == 2


# ---------------------------------------------------------------------------
# maxerr
# ---------------------------------------------------------------------------


def test_maxerr_reports_the_supremum(capsys):
    assert cli.main(["maxerr", "lower", "--scan-points", "500"]) == 0
    out = capsys.readouterr().out
    record = {}
    for line in out.strip().splitlines():
        key, value = line.split("=", 1)
        record[key.strip()] = value.strip()
    assert record["kind"] == "lower"
    r_star = float(record["r_star"])
    assert abs(r_star - SUP_R_LOWER) <= 1e-6 * SUP_R_LOWER
    assert float(record["envelope_max(x_star)"]) >= r_star


def test_maxerr_rejects_unknown_kind():
    with pytest.raises(SystemExit) as exc:
        cli.main(["maxerr", "middle"])
    assert exc.value.code == 2


# ---------------------------------------------------------------------------
# series-check
# ---------------------------------------------------------------------------


def test_series_check_all_kinds(capsys):
    assert cli.main(["series-check"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 19  # 3 kinds x 6 rows + summary
    assert lines[-1].startswith("worst relative gap = ")
    assert float(lines[-1].split("=")[1]) < 1e-4


def test_series_check_single_kind(capsys):
    assert cli.main(["series-check", "upper"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 7
    assert all(line.startswith("upper") for line in lines[:-1])


# ---------------------------------------------------------------------------
# bench
# ---------------------------------------------------------------------------


def test_bench_is_reproducible(capsys):
    assert cli.main(["bench", "2000"]) == 0
    first = capsys.readouterr().out.strip().splitlines()
    assert cli.main(["bench", "2000"]) == 0
    second = capsys.readouterr().out.strip().splitlines()
    assert len(first) == 6  # two header lines + four measured rows
    names = [line.split()[0] for line in first[2:]]
    assert names == ["lower_bound", "upper_bound", "midpoint_arctan", "math.atan"]
    checksums_a = [line.split()[-1] for line in first[2:]]
    checksums_b = [line.split()[-1] for line in second[2:]]
    assert checksums_a == checksums_b
    for value in checksums_a:
        assert math.isfinite(float(value))


def test_bench_rejects_empty_run(capsys):
    assert cli.main(["bench", "0"]) == 2
    assert "error:" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# parser-level behavior
# ---------------------------------------------------------------------------


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


def test_no_arguments_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.main([])
    assert exc.value.code == 2


@pytest.mark.skipif(shutil.which("atanbounds") is None, reason="entry point not on PATH")
def test_installed_entry_point_runs():
    proc = subprocess.run(
        ["atanbounds", "eval", "1.0"], capture_output=True, text=True, timeout=60
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("x")
