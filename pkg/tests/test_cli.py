# -*- coding: utf-8 -*-

import functools

import pytest
import polars as pl

from anosov_suspension.constants import (
    ExitCode,
    TRAJECTORY_COLUMNS,
    EQUIVALENCE_COLUMNS,
    FIBER_COLUMNS,
)
from anosov_suspension.paths import (
    path_demo_config,
    path_constant_config,
    path_conjugate_config,
    path_adversarial_config,
)
from anosov_suspension.smoothing import reparam
from anosov_suspension.smoothing.quadrature import cumulative_simpson
from anosov_suspension.cli import main, build_parser, load_config
from anosov_suspension.tests import read_jsonl


def test_load_config():
    args = build_parser().parse_args(["equiv-check", "--samples", "7", "--seed", "3"])
    cfg = load_config(args)
    assert cfg.run.samples == 7
    assert cfg.run.seed == 3

    args = build_parser().parse_args(["smooth-build", "--samples", "2"])
    assert load_config(args).probe.fibers == 2

    args = build_parser().parse_args(["derivative-report", "--samples", "2", "--tolerance", "0.01"])
    cfg = load_config(args)
    assert cfg.probe.interior_samples == 2
    assert cfg.probe.section_samples == 2
    assert cfg.verification.smooth_tolerance == 0.01

    args = build_parser().parse_args(["flow-eval", "--t-stop", "2", "--height", "0.25"])
    cfg = load_config(args)
    assert cfg.flow.t_stop == 2.0
    assert cfg.flow.height == 0.25


def test_flow_eval(tmp_path):
    out = tmp_path / "trajectory.csv"
    assert main(["flow-eval", "--out", str(out)]) == ExitCode.success
    df = pl.read_csv(out)
    assert df.columns == TRAJECTORY_COLUMNS
    assert df.height == 11
    assert df["t"].to_list()[-1] == 5.0
    assert df.row(0) == (0.0, 0.5, 0.5, 0.0, 0)


def test_equiv_check(tmp_path):
    out1 = tmp_path / "run1.jsonl"
    out2 = tmp_path / "run2.jsonl"
    out3 = tmp_path / "run3.jsonl"
    argv = ["equiv-check", "--config", str(path_demo_config), "--samples", "300"]
    assert main(argv + ["--out", str(out1)]) == ExitCode.success
    assert main(argv + ["--out", str(out2)]) == ExitCode.success
    assert main(argv + ["--out", str(out3), "--workers", "2"]) == ExitCode.success
    assert out1.read_bytes() == out2.read_bytes()
    assert out1.read_bytes() == out3.read_bytes()

    records = read_jsonl(out1)
    assert len(records) == 301
    assert list(records[0]) == EQUIVALENCE_COLUMNS
    summary = records[-1]
    assert summary["record"] == "summary"
    assert summary["samples"] == 300
    assert summary["passed"] is True
    assert summary["n_mismatch"] == 0
    assert summary["max_residual"] < 1e-9

    out4 = tmp_path / "run4.jsonl"
    assert main(argv + ["--out", str(out4), "--seed", "1"]) == ExitCode.success
    assert out4.read_bytes() != out1.read_bytes()


@pytest.mark.parametrize("path", [path_constant_config, path_conjugate_config])
def test_equiv_check_bundled(tmp_path, path):
    out = tmp_path / "report.jsonl"
    argv = ["equiv-check", "--config", str(path), "--samples", "100", "--out", str(out)]
    assert main(argv) == ExitCode.success
    assert read_jsonl(out)[-1]["passed"] is True


def test_equiv_check_corrupted_time_change(tmp_path):
    out = tmp_path / "report.jsonl"
    argv = ["equiv-check", "--samples", "50", "--tau-offset", "0.25", "--out", str(out)]
    assert main(argv) == ExitCode.verification_failure
    summary = read_jsonl(out)[-1]
    assert summary["passed"] is False
    assert summary["max_residual"] > 0.1


def test_smooth_build(tmp_path):
    out = tmp_path / "fibers.csv"
    argv = ["smooth-build", "--samples", "3", "--out", str(out)]
    assert main(argv) == ExitCode.success
    df = pl.read_csv(out)
    assert df.columns == FIBER_COLUMNS
    assert df.height == 3 * 101
    assert df["fiber"].unique().sort().to_list() == [0, 1, 2]
    assert df["dphi"].min() > 0

    summary = read_jsonl(tmp_path / "fibers.csv.summary.jsonl")[0]
    assert summary["fibers"] == 3
    assert summary["shape"] == "plateau"
    assert summary["max_top_residual"] < 1e-9
    assert summary["max_bottom_residual"] == 0.0
    assert summary["passed"] is True


def test_smooth_build_adversarial(tmp_path):
    argv = ["smooth-build", "--config", str(path_adversarial_config)]
    out = tmp_path / "fibers.csv"
    assert main(argv + ["--out", str(out)]) == ExitCode.monotonicity_violation
    assert main(argv + ["--out", str(out), "--shape", "plateau"]) == ExitCode.success
    summary = read_jsonl(tmp_path / "fibers.csv.summary.jsonl")[0]
    assert summary["min_derivative"] == pytest.approx(0.1, abs=1e-12)


NARROW_CONFIG = """
[source]
matrix = 2 1 1 1
ceiling = constant
c0 = 0.05

[target]
ceiling = constant
c0 = 0.06

[smoothing]
shape = exponential

[probe]
fibers = 3
fiber_points = 51
"""


def test_smooth_build_short_fibers(tmp_path):
    config = tmp_path / "narrow.ini"
    config.write_text(NARROW_CONFIG)
    out = tmp_path / "fibers.csv"
    argv = ["smooth-build", "--config", str(config), "--out", str(out)]
    assert main(argv) == ExitCode.success
    df = pl.read_csv(out)
    assert df.height == 3 * 51
    assert df["phi"].is_finite().all()
    assert df["dphi"].min() >= 1.0
    summary = read_jsonl(tmp_path / "fibers.csv.summary.jsonl")[0]
    assert summary["shape"] == "exponential"
    assert summary["max_top_residual"] < 1e-9
    assert summary["passed"] is True


def test_numeric_failure(tmp_path, monkeypatch):
    config = tmp_path / "narrow.ini"
    config.write_text(NARROW_CONFIG)
    # no bisections allowed: the peaked kernel cannot be resolved on the node grid
    monkeypatch.setattr(
        reparam, "cumulative_simpson", functools.partial(cumulative_simpson, max_depth=0)
    )
    argv = ["smooth-build", "--config", str(config), "--out", str(tmp_path / "fibers.csv")]
    assert main(argv) == ExitCode.numeric_failure


def test_derivative_report(tmp_path):
    out = tmp_path / "derivatives.jsonl"
    argv = ["derivative-report", "--samples", "3", "--out", str(out)]
    assert main(argv) == ExitCode.success
    records = read_jsonl(out)
    assert len(records) == 3 * 2 + 3 * 2 + 1
    summary = records[-1]
    assert summary["record"] == "summary"
    assert summary["samples"] == 3
    assert summary["max_smoothed_mismatch"] < 1e-4
    assert 0 <= summary["piecewise_flagged"] <= 3
    assert summary["max_jacobian_error"] < 1e-6
    assert summary["passed"] is True


def test_config_errors(tmp_path):
    bad = tmp_path / "bad.ini"
    bad.write_text("[source]\nmatrix = 2 1 1 1\nceiling = constant\nc0 = 1.0\nfoo = 1\n")
    assert main(["equiv-check", "--config", str(bad)]) == ExitCode.config_error
    assert main(["equiv-check", "--config", str(tmp_path / "missing.ini")]) == ExitCode.config_error
    assert main(["equiv-check", "--samples", "0"]) == ExitCode.config_error
    assert main(["smooth-build", "--delta", "1.5"]) == ExitCode.config_error
    assert main(["flow-eval", "--t-step", "0"]) == ExitCode.config_error

    mismatch = tmp_path / "mismatch.ini"
    mismatch.write_text(
        path_demo_config.read_text().replace("[target]", "[target]\nmatrix = 2 1 1 1")
    )
    assert main(["equiv-check", "--config", str(mismatch)]) == ExitCode.config_error


def test_usage_error():
    with pytest.raises(SystemExit):
        main([])


if __name__ == "__main__":
    from anosov_suspension.tests import run_cov_test

    run_cov_test(__file__, "anosov_suspension.cli", preview=False)
