# -*- coding: utf-8 -*-

import pytest
import numpy as np

from anosov_suspension.exc import OnSection
from anosov_suspension.utils import new_rng
from anosov_suspension.torus import TorusPoint
from anosov_suspension.suspension import SuspensionPoint
from anosov_suspension.diff_probe.fd import fd_jacobian
from anosov_suspension.diff_probe.jacobian import (
    analytic_jacobian_piecewise,
    probe_piecewise,
    probe_smoothed,
)
from anosov_suspension.diff_probe.report import sample_interior_points
from anosov_suspension.tests.demo import BaseDemoTest

B = np.array([[1.0, 1.0], [0.0, 1.0]])


class Test(BaseDemoTest):
    def test_on_section(self):
        with pytest.raises(OnSection):
            analytic_jacobian_piecewise(self.pair, SuspensionPoint(TorusPoint(0.3, 0.4), 0.0))

    def test_analytic_block_structure(self):
        p = SuspensionPoint(TorusPoint(0.3, 0.4), 0.5)
        jac = analytic_jacobian_piecewise(self.pair, p)
        np.testing.assert_array_equal(jac[:2, :2], B)
        np.testing.assert_array_equal(jac[:2, 2], [0.0, 0.0])
        _, ratio = self.pair.fiber_scale(p.base)
        assert jac[2, 2] == ratio

        # constant ceilings: the height row is (0, 0, c_g / c_f)
        jac = analytic_jacobian_piecewise(self.constant_pair, p)
        np.testing.assert_array_equal(
            jac, [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 2.0]]
        )

    def test_piecewise_cross_validation(self):
        points = sample_interior_points(self.smoothed, new_rng(41), 100)
        for p in points:
            report = probe_piecewise(self.pair, p)
            assert report.max_abs_error < 1e-6
            assert report.label == "piecewise"
            assert report.fd_step == 1e-5
            assert report.richardson_order == 2

    def test_step_halving(self):
        points = sample_interior_points(self.smoothed, new_rng(42), 20)
        coarse, fine = 0.0, 0.0
        for p in points:
            analytic = analytic_jacobian_piecewise(self.pair, p)
            for step in (1e-2, 5e-3):
                fd = fd_jacobian(
                    self.pair.h_hat,
                    p,
                    self.pair.source,
                    self.pair.target,
                    step=step,
                    richardson=False,
                )
                error = float(np.max(np.abs(fd - analytic)))
                if step == 1e-2:
                    coarse += error
                else:
                    fine += error
        assert coarse > 0
        assert coarse / fine >= 3.0

    def test_smoothed(self):
        points = sample_interior_points(self.smoothed, new_rng(43), 20)
        for p in points:
            report = probe_smoothed(self.smoothed, p)
            assert report.max_abs_error is None
            assert report.analytic is None
            assert report.label == "smoothed"
            np.testing.assert_allclose(report.fd[:2, :2], B, atol=1e-9)
            np.testing.assert_allclose(report.fd[:2, 2], [0.0, 0.0], atol=1e-9)
            assert report.determinant > 0

    def test_to_record(self):
        p = SuspensionPoint(TorusPoint(0.3, 0.4), 0.5)
        record = probe_piecewise(self.pair, p).to_record()
        assert record["record"] == "jacobian"
        assert record["map"] == "piecewise"
        assert (record["x1"], record["x2"], record["s"]) == (0.3, 0.4, 0.5)
        assert len(record["fd"]) == 9
        assert len(record["analytic"]) == 9
        assert record["determinant"] == pytest.approx(record["analytic"][8], rel=1e-6)

        record = probe_smoothed(self.smoothed, p).to_record()
        assert record["analytic"] is None
        assert record["max_abs_error"] is None


if __name__ == "__main__":
    from anosov_suspension.tests import run_cov_test

    run_cov_test(__file__, "anosov_suspension.diff_probe.jacobian", preview=False)
