# -*- coding: utf-8 -*-

"""
Batches of derivative probes and their tabular report.
"""

import typing as T
import logging
import dataclasses

import numpy as np
import polars as pl

from ..constants import (
    DEFAULT_FD_STEP,
    DEFAULT_CHART_STEP,
    DEFAULT_SMOOTH_TOLERANCE,
    DEFAULT_JACOBIAN_TOLERANCE,
    PIECEWISE_SEAM_THRESHOLD,
)
from ..utils import concat_report_frames, fan_out
from ..torus import TorusPoint, lattice_point
from ..suspension import SuspensionPoint
from ..smoothing.reparam import SmoothedEquivalence
from .jacobian import JacobianReport, probe_piecewise, probe_smoothed
from .chart import SectionCheck, smoothed_section_check, piecewise_section_check

logger = logging.getLogger(__name__)

INTERIOR_MARGIN = 0.1

JACOBIAN_SCHEMA = [
    ("record", pl.Utf8),
    ("map", pl.Utf8),
    ("sample", pl.Int64),
    ("x1", pl.Float64),
    ("x2", pl.Float64),
    ("s", pl.Float64),
    ("fd_step", pl.Float64),
    ("richardson_order", pl.Int64),
    ("max_abs_error", pl.Float64),
    ("determinant", pl.Float64),
    ("fd", pl.List(pl.Float64)),
    ("analytic", pl.List(pl.Float64)),
]
SECTION_SCHEMA = [
    ("record", pl.Utf8),
    ("map", pl.Utf8),
    ("sample", pl.Int64),
    ("x1", pl.Float64),
    ("x2", pl.Float64),
    ("chart_step", pl.Float64),
    ("mismatch", pl.Float64),
    ("slope_plus", pl.Float64),
    ("slope_minus", pl.Float64),
]


@dataclasses.dataclass(frozen=True, eq=False)
class ProbeBatch:
    jacobians: T.List[JacobianReport] = dataclasses.field()
    sections: T.List[SectionCheck] = dataclasses.field()

    def _mismatches(self, label: str) -> np.ndarray:
        return np.array([c.mismatch for c in self.sections if c.label == label])

    def frame(self) -> pl.DataFrame:
        jac_rows = [
            {**report.to_record(), "sample": i // 2}
            for i, report in enumerate(self.jacobians)
        ]
        sec_rows = [
            {**check.to_record(), "sample": i // 2}
            for i, check in enumerate(self.sections)
        ]
        return concat_report_frames(
            [
                pl.DataFrame(jac_rows, schema=JACOBIAN_SCHEMA),
                pl.DataFrame(sec_rows, schema=SECTION_SCHEMA),
            ]
        )

    def summary(
        self,
        tolerance: float = DEFAULT_SMOOTH_TOLERANCE,
        jacobian_tolerance: float = DEFAULT_JACOBIAN_TOLERANCE,
    ) -> T.Dict[str, T.Any]:
        """
        Max / median seam mismatch for both maps, the number of piecewise
        checks above :data:`PIECEWISE_SEAM_THRESHOLD`, the worst interior
        Jacobian error and the smallest smoothed-map determinant.

        ``passed`` requires every smoothed mismatch below ``tolerance``, every
        analytic vs FD Jacobian error below ``jacobian_tolerance`` and every
        smoothed determinant positive.
        """
        smoothed = self._mismatches("smoothed")
        piecewise = self._mismatches("piecewise")
        errors = [r.max_abs_error for r in self.jacobians if r.max_abs_error is not None]
        dets = [r.determinant for r in self.jacobians if r.label == "smoothed"]

        def stat(values, func) -> T.Optional[float]:
            return float(func(values)) if len(values) else None

        max_smoothed = stat(smoothed, np.max)
        max_error = stat(errors, np.max)
        min_det = stat(dets, np.min)
        passed = (
            (max_smoothed is None or max_smoothed < tolerance)
            and (max_error is None or max_error < jacobian_tolerance)
            and (min_det is None or min_det > 0)
        )
        return {
            "record": "summary",
            "samples": len(self.sections) // 2,
            "max_smoothed_mismatch": max_smoothed,
            "median_smoothed_mismatch": stat(smoothed, np.median),
            "max_piecewise_mismatch": stat(piecewise, np.max),
            "median_piecewise_mismatch": stat(piecewise, np.median),
            "piecewise_flagged": int(np.sum(piecewise > PIECEWISE_SEAM_THRESHOLD)),
            "max_jacobian_error": max_error,
            "jacobian_tolerance": jacobian_tolerance,
            "min_smoothed_determinant": min_det,
            "tolerance": tolerance,
            "passed": passed,
        }


def sample_interior_points(
    se: SmoothedEquivalence,
    rng: np.random.Generator,
    n: int,
) -> T.List[SuspensionPoint]:
    """
    Base points uniform on the sample lattice, heights uniform in the middle of the
    fiber so finite-difference stencils stay inside it.
    """
    table = rng.uniform(0.0, 1.0, size=(n, 3))
    points = list()
    for x1, x2, frac in table:
        x = lattice_point(x1, x2)
        c = se.pair.source.roof(x)
        s = c * (INTERIOR_MARGIN + (1.0 - 2.0 * INTERIOR_MARGIN) * frac)
        points.append(SuspensionPoint(x, s))
    return points


def sample_section_points(rng: np.random.Generator, n: int) -> T.List[TorusPoint]:
    table = rng.uniform(0.0, 1.0, size=(n, 2))
    return [lattice_point(x1, x2) for x1, x2 in table]


def run_probe_batch(
    se: SmoothedEquivalence,
    interior: T.Sequence[SuspensionPoint],
    section: T.Sequence[TorusPoint],
    fd_step: float = DEFAULT_FD_STEP,
    chart_step: float = DEFAULT_CHART_STEP,
    workers: int = 1,
) -> ProbeBatch:
    """
    For every interior point: the piecewise Jacobian cross-validation and the
    smoothed finite-difference Jacobian. For every section point: the seam
    check of both maps. Results keep the input order.
    """
    pair = se.pair

    def probe_interior(p: SuspensionPoint) -> T.List[JacobianReport]:
        return [probe_piecewise(pair, p, fd_step), probe_smoothed(se, p, fd_step)]

    def probe_section(x: TorusPoint) -> T.List[SectionCheck]:
        return [
            piecewise_section_check(pair, x, chart_step),
            smoothed_section_check(se, x, chart_step),
        ]

    jacobians = [
        r for pair_reports in fan_out(probe_interior, interior, workers) for r in pair_reports
    ]
    sections = [
        c for checks in fan_out(probe_section, section, workers) for c in checks
    ]
    logger.debug(
        "probe batch: %d interior, %d section points", len(interior), len(section)
    )
    return ProbeBatch(jacobians=jacobians, sections=sections)
