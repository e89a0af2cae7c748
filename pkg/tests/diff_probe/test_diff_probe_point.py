# -*- coding: utf-8 -*-

import math

import pytest
import numpy as np

from anosov_suspension.utils import new_rng
from anosov_suspension.torus import TorusPoint, BaseConjugacy
from anosov_suspension.diff_probe.point import point_differentiability_probe

X = TorusPoint(0.5, 0.3)


def holder_map(x: TorusPoint) -> TorusPoint:
    """
    A homeomorphism with a square-root singularity along ``x1 = 0.5``.
    """
    d = x.x1 - 0.5
    return TorusPoint(0.5 + math.copysign(math.sqrt(abs(d)), d) / 4.0, x.x2)


def test_linear_conjugacy():
    h = BaseConjugacy.linear([[1, 1], [0, 1]])
    result = point_differentiability_probe(h.apply, X, rng=new_rng(61))
    assert not result.degenerate
    assert result.slope == pytest.approx(1.0, abs=1e-6)
    assert result.slopes.shape == (8,)
    np.testing.assert_allclose(result.slopes, 1.0, atol=1e-6)

    record = result.to_record()
    assert record["record"] == "point"
    assert record["slope"] == result.slope
    assert record["degenerate"] is False

    # default generator
    assert point_differentiability_probe(h.apply, X).slope == pytest.approx(1.0, abs=1e-6)


def test_holder_singularity():
    result = point_differentiability_probe(holder_map, X, n_directions=16, rng=new_rng(62))
    assert not result.degenerate
    assert result.slope == pytest.approx(0.5, abs=0.1)


def test_holder_map_generic_point():
    result = point_differentiability_probe(
        holder_map, TorusPoint(0.2, 0.3), n_directions=16, rng=new_rng(63)
    )
    assert not result.degenerate
    assert result.slope == pytest.approx(1.0, abs=0.05)


def test_degenerate():
    constant = lambda x: TorusPoint(0.5, 0.5)
    result = point_differentiability_probe(constant, X)
    assert result.degenerate
    assert math.isnan(result.slope)
    assert result.to_record()["slope"] is None


if __name__ == "__main__":
    from anosov_suspension.tests import run_cov_test

    run_cov_test(__file__, "anosov_suspension.diff_probe.point", preview=False)
