# -*- coding: utf-8 -*-

"""
Command line interface.

.. code-block:: bash

    anosov-suspension flow-eval --config run.ini --t-stop 5 --t-step 0.5
    anosov-suspension equiv-check --config run.ini --samples 10000 --out report.jsonl
    anosov-suspension smooth-build --config run.ini --shape plateau --out fibers.csv
    anosov-suspension derivative-report --config run.ini --out derivatives.jsonl

Exit codes: 0 success, 2 configuration error, 3 numeric failure,
4 verification failure, 5 monotonicity violation.
"""

import typing as T
import sys
import logging
import argparse
import dataclasses
from pathlib import Path

import numpy as np
import polars as pl

from ._version import __version__
from .constants import ExitCode, BumpShapeEnum, OutputFormatEnum, FIBER_COLUMNS
from .exc import (
    AnosovSuspensionError,
    ConfigError,
    MonotonicityViolation,
    NumericFailure,
)
from .utils import new_rng, df_to_ascii, fan_out
from .torus import TorusPoint, lattice_point
from .suspension import SuspensionPoint
from .equivalence import verification_frame
from .diff_probe.report import (
    run_probe_batch,
    sample_interior_points,
    sample_section_points,
)
from .config import RunConfig, validate_options
from .output import render, emit

logger = logging.getLogger(__name__)

CMD_FLOW_EVAL = "flow-eval"
CMD_EQUIV_CHECK = "equiv-check"
CMD_SMOOTH_BUILD = "smooth-build"
CMD_DERIVATIVE_REPORT = "derivative-report"


def _add_common_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--config", type=Path, help="INI run configuration (default: built-in demo)")
    parser.add_argument("--seed", type=int, help="64-bit seed of the PCG64 generator")
    parser.add_argument("--samples", type=int, help="number of random samples / fibers / probes")
    parser.add_argument("--out", help="output path, '-' for stdout")
    parser.add_argument(
        "--shape",
        choices=[e.value for e in BumpShapeEnum],
        help="bump shape of the fiber reparametrization",
    )
    parser.add_argument("--delta", type=float, help="plateau ramp parameter in (0, 1)")
    parser.add_argument("--tolerance", type=float, help="pass / fail threshold")
    parser.add_argument("--workers", type=int, help="worker threads for sample loops")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anosov-suspension",
        description="Suspension flows over hyperbolic toral automorphisms and "
        "their explicit orbit equivalences.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subparsers = parser.add_subparsers(dest="command", required=True)

    flow = subparsers.add_parser(CMD_FLOW_EVAL, help="trajectory of one point as CSV")
    _add_common_arguments(flow)
    flow.add_argument("--x1", type=float)
    flow.add_argument("--x2", type=float)
    flow.add_argument("--height", type=float)
    flow.add_argument("--t-stop", dest="t_stop", type=float)
    flow.add_argument("--t-step", dest="t_step", type=float)

    equiv = subparsers.add_parser(
        CMD_EQUIV_CHECK, help="verify the equivalence identity on random samples"
    )
    _add_common_arguments(equiv)
    # corrupts the time change on purpose; negative control for the checker
    equiv.add_argument("--tau-offset", dest="tau_offset", type=float, default=0.0, help=argparse.SUPPRESS)

    smooth = subparsers.add_parser(
        CMD_SMOOTH_BUILD, help="fiber reparametrization tables as CSV"
    )
    _add_common_arguments(smooth)

    deriv = subparsers.add_parser(
        CMD_DERIVATIVE_REPORT, help="Jacobian and seam checks as JSON lines"
    )
    _add_common_arguments(deriv)
    return parser


def load_config(args: argparse.Namespace) -> RunConfig:
    if args.config is None:
        cfg = RunConfig.demo()
    else:
        cfg = RunConfig.from_path(args.config)
    tolerance = {"tolerance": args.tolerance}
    if args.command == CMD_DERIVATIVE_REPORT:
        tolerance = {"smooth_tolerance": args.tolerance}
    cfg = cfg.with_overrides(
        seed=args.seed,
        out=args.out,
        shape=args.shape,
        delta=args.delta,
        workers=args.workers,
        **tolerance,
    )
    if args.samples is not None:
        if args.samples < 1:
            raise ConfigError("--samples", f"value {args.samples!r} out of range")
        if args.command == CMD_EQUIV_CHECK:
            cfg = cfg.with_overrides(samples=args.samples)
        elif args.command == CMD_SMOOTH_BUILD:
            cfg = dataclasses.replace(
                cfg, probe=dataclasses.replace(cfg.probe, fibers=args.samples)
            )
        elif args.command == CMD_DERIVATIVE_REPORT:
            probe = dataclasses.replace(
                cfg.probe,
                interior_samples=args.samples,
                section_samples=args.samples,
            )
            cfg = dataclasses.replace(cfg, probe=probe)
    if args.command == CMD_FLOW_EVAL:
        changes = {
            key: getattr(args, key)
            for key in ("x1", "x2", "height", "t_stop", "t_step")
            if getattr(args, key) is not None
        }
        if changes:
            flow = validate_options("flow", dataclasses.replace(cfg.flow, **changes))
            cfg = dataclasses.replace(cfg, flow=flow)
    return cfg


def print_summary(summary: T.Dict[str, T.Any]):
    rows = [{"key": key, "value": str(value)} for key, value in summary.items()]
    print(df_to_ascii(pl.DataFrame(rows)), file=sys.stderr)


# ------------------------------------------------------------------------------
# commands
# ------------------------------------------------------------------------------
def cmd_flow_eval(cfg: RunConfig) -> ExitCode:
    system = cfg.source_system()
    options = cfg.flow
    p = system.normalize(TorusPoint(options.x1, options.x2), options.height)
    df = system.trajectory(p, options.times())
    emit(render(df, OutputFormatEnum.csv), cfg.run.out)
    return ExitCode.success


def draw_equivalence_samples(
    cfg: RunConfig,
) -> T.List[T.Tuple[int, SuspensionPoint, float]]:
    """
    The full sample table, drawn up front from one generator: base point,
    fiber fraction and time fraction per row.
    """
    rng = new_rng(cfg.run.seed)
    table = rng.uniform(0.0, 1.0, size=(cfg.run.samples, 4))
    source = cfg.source_system()
    samples = list()
    for i, (x1, x2, frac, t_frac) in enumerate(table):
        x = lattice_point(x1, x2)
        p = SuspensionPoint(x, frac * source.roof(x))
        t = (2.0 * t_frac - 1.0) * cfg.run.t_range
        samples.append((i, p, float(t)))
    return samples


def cmd_equiv_check(cfg: RunConfig, tau_offset: float = 0.0) -> ExitCode:
    pair = cfg.build_pair()
    samples = draw_equivalence_samples(cfg)
    records = fan_out(
        lambda sample: pair.verification_record(*sample, tau_offset=tau_offset),
        samples,
        cfg.run.workers,
    )
    df = verification_frame(records)
    residual = df["residual"].to_numpy()
    n_mismatch = int((df["n_src"] != df["n_tgt"]).sum())
    tolerance = cfg.verification.tolerance
    max_residual = float(np.max(residual))
    summary = {
        "record": "summary",
        "samples": df.height,
        "max_residual": max_residual,
        "median_residual": float(np.median(residual)),
        "n_mismatch": n_mismatch,
        "min_slope": float(df["slope"].min()),
        "tolerance": tolerance,
        "passed": max_residual < tolerance and n_mismatch == 0,
    }
    emit(render(df, OutputFormatEnum.ndjson, trailing_records=[summary]), cfg.run.out)
    print_summary(summary)
    return ExitCode.success if summary["passed"] else ExitCode.verification_failure


def cmd_smooth_build(cfg: RunConfig) -> ExitCode:
    se = cfg.build_smoothed()
    rng = new_rng(cfg.run.seed)
    table = rng.uniform(0.0, 1.0, size=(cfg.probe.fibers, 2))
    frames = list()
    margins, bottom, top = list(), list(), list()
    for i, (x1, x2) in enumerate(table):
        x = lattice_point(x1, x2)
        rep = se.fiber(x)
        t = np.linspace(0.0, rep.c_f_x, cfg.probe.fiber_points)
        value, derivative = rep.eval_array(t)
        frames.append(
            pl.DataFrame(
                {
                    "fiber": np.full(t.size, i, dtype=np.int64),
                    "x1": np.full(t.size, x.x1),
                    "x2": np.full(t.size, x.x2),
                    "t": t,
                    "phi": value,
                    "dphi": derivative,
                }
            )
        )
        margins.append(rep.margin)
        bottom.append(abs(rep.value(rep.epsilon) - rep.epsilon))
        top.append(abs(rep.value(rep.c_f_x) - rep.c_g_hx))
    df = pl.concat(frames).select(FIBER_COLUMNS)
    summary = {
        "record": "summary",
        "fibers": len(frames),
        "shape": se.shape.value,
        "min_derivative": float(np.min(margins)),
        "max_bottom_residual": float(np.max(bottom)),
        "max_top_residual": float(np.max(top)),
        "passed": float(np.min(margins)) > 0 and float(np.max(top)) < 1e-9,
    }
    path = emit(render(df, OutputFormatEnum.csv), cfg.run.out)
    if path is not None:
        emit(
            render(pl.DataFrame([summary]), OutputFormatEnum.ndjson),
            path.with_name(path.name + ".summary.jsonl"),
        )
    print_summary(summary)
    return ExitCode.success if summary["passed"] else ExitCode.verification_failure


def cmd_derivative_report(cfg: RunConfig) -> ExitCode:
    se = cfg.build_smoothed()
    rng = new_rng(cfg.run.seed)
    interior = sample_interior_points(se, rng, cfg.probe.interior_samples)
    section = sample_section_points(rng, cfg.probe.section_samples)
    batch = run_probe_batch(
        se,
        interior,
        section,
        fd_step=cfg.probe.fd_step,
        chart_step=cfg.probe.chart_step,
        workers=cfg.run.workers,
    )
    summary = batch.summary(tolerance=cfg.verification.smooth_tolerance)
    emit(
        render(batch.frame(), OutputFormatEnum.ndjson, trailing_records=[summary]),
        cfg.run.out,
    )
    print_summary(summary)
    return ExitCode.success if summary["passed"] else ExitCode.verification_failure


def run(args: argparse.Namespace) -> ExitCode:
    cfg = load_config(args)
    if args.command == CMD_FLOW_EVAL:
        return cmd_flow_eval(cfg)
    if args.command == CMD_EQUIV_CHECK:
        return cmd_equiv_check(cfg, tau_offset=args.tau_offset)
    if args.command == CMD_SMOOTH_BUILD:
        return cmd_smooth_build(cfg)
    return cmd_derivative_report(cfg)


def main(argv: T.Optional[T.List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return int(run(args))
    except ConfigError as e:
        logger.error("config error: %s", e)
        return int(ExitCode.config_error)
    except MonotonicityViolation as e:
        logger.error("monotonicity violation: %s", e)
        return int(ExitCode.monotonicity_violation)
    except (NumericFailure, AnosovSuspensionError) as e:
        logger.error("numeric failure: %s", e)
        return int(ExitCode.numeric_failure)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
