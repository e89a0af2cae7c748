# -*- coding: utf-8 -*-

import pytest
from polars.testing import assert_frame_equal

from anosov_suspension.utils import new_rng
from anosov_suspension.diff_probe.report import (
    INTERIOR_MARGIN,
    ProbeBatch,
    sample_interior_points,
    sample_section_points,
    run_probe_batch,
)
from anosov_suspension.tests.demo import BaseDemoTest


class Test(BaseDemoTest):
    batch: ProbeBatch = None

    @classmethod
    def setup_class_post_hook(cls):
        rng = new_rng(71)
        cls.batch = run_probe_batch(
            cls.smoothed,
            sample_interior_points(cls.smoothed, rng, 3),
            sample_section_points(rng, 4),
        )

    def test_sampling(self):
        rng = new_rng(72)
        for p in sample_interior_points(self.smoothed, rng, 200):
            c = self.cat.roof(p.base)
            assert INTERIOR_MARGIN * c <= p.height
            assert p.height <= (1.0 - INTERIOR_MARGIN) * c * (1.0 + 1e-12)
            assert p.base.snap() == p.base
        points = sample_section_points(rng, 20)
        assert len(points) == 20
        assert all(x.snap() == x for x in points)

    def test_batch_order(self):
        batch = self.batch
        assert [r.label for r in batch.jacobians] == ["piecewise", "smoothed"] * 3
        assert [c.label for c in batch.sections] == ["piecewise", "smoothed"] * 4

    def test_frame(self):
        df = self.batch.frame()
        assert df.height == 3 * 2 + 4 * 2
        assert df["record"].to_list() == ["jacobian"] * 6 + ["section"] * 8
        assert df["sample"].to_list() == [0, 0, 1, 1, 2, 2, 0, 0, 1, 1, 2, 2, 3, 3]
        assert df.columns[:3] == ["record", "map", "sample"]
        assert "mismatch" in df.columns
        assert "max_abs_error" in df.columns
        section = df.filter(df["record"] == "section")
        assert section["max_abs_error"].null_count() == 8

    def test_summary(self):
        summary = self.batch.summary()
        assert summary["record"] == "summary"
        assert summary["samples"] == 4
        assert summary["max_smoothed_mismatch"] < 1e-4
        assert summary["median_smoothed_mismatch"] <= summary["max_smoothed_mismatch"]
        assert summary["max_piecewise_mismatch"] > summary["max_smoothed_mismatch"]
        assert summary["max_jacobian_error"] < 1e-6
        assert summary["jacobian_tolerance"] == 1e-6
        piecewise = [c.mismatch for c in self.batch.sections if c.label == "piecewise"]
        assert summary["piecewise_flagged"] == sum(m > 1e-2 for m in piecewise)
        assert (summary["piecewise_flagged"] > 0) == (summary["max_piecewise_mismatch"] > 1e-2)
        assert summary["min_smoothed_determinant"] > 0
        assert summary["tolerance"] == 1e-4
        assert summary["passed"] is True

        assert self.batch.summary(tolerance=0.0)["passed"] is False
        assert self.batch.summary(jacobian_tolerance=0.0)["passed"] is False

    def test_empty(self):
        batch = ProbeBatch(jacobians=[], sections=[])
        summary = batch.summary()
        assert summary["samples"] == 0
        assert summary["max_smoothed_mismatch"] is None
        assert summary["piecewise_flagged"] == 0
        assert summary["passed"] is True
        assert batch.frame().height == 0

    def test_workers(self):
        rng = new_rng(73)
        interior = sample_interior_points(self.smoothed, rng, 2)
        section = sample_section_points(rng, 2)
        serial = run_probe_batch(self.smoothed, interior, section, workers=1)
        threaded = run_probe_batch(self.smoothed, interior, section, workers=4)
        assert_frame_equal(serial.frame(), threaded.frame())


if __name__ == "__main__":
    from anosov_suspension.tests import run_cov_test

    run_cov_test(__file__, "anosov_suspension.diff_probe.report", preview=False)
