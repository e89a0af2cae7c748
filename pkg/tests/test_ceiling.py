# -*- coding: utf-8 -*-

import math

import pytest
import numpy as np

from anosov_suspension.exc import InvalidCeiling
from anosov_suspension.utils import new_rng
from anosov_suspension.torus import TorusPoint, HyperbolicToralMap, IntMatrix2
from anosov_suspension.ceiling import CosineTerm, CeilingFunction, birkhoff_sum

CAT = HyperbolicToralMap.cat_map()


def demo_ceiling() -> CeilingFunction:
    return CeilingFunction.trig(1.0, [(0.2, 1, 0), (0.1, 0, 1, 0.3)])


class TestCosineTerm:
    def test_text(self):
        term = CosineTerm.from_text("0.1:1:0")
        assert term == CosineTerm(amp=0.1, k1=1, k2=0, phase=0.0)
        assert CosineTerm.from_text(term.to_text()) == term
        assert CosineTerm.from_text(" 0.2 : -1 : 2 : 0.5 ").phase == 0.5

    def test_bad_text(self):
        with pytest.raises(InvalidCeiling):
            CosineTerm.from_text("0.1:1")
        with pytest.raises(InvalidCeiling):
            CosineTerm.from_text("0.1:x:0")
        with pytest.raises(InvalidCeiling):
            CosineTerm(0.1, 1.5, 0)


class TestCeilingFunction:
    def test_validation(self):
        with pytest.raises(InvalidCeiling):
            CeilingFunction.constant(0.0)
        with pytest.raises(InvalidCeiling):
            CeilingFunction.constant(-1.0)
        with pytest.raises(InvalidCeiling):
            CeilingFunction.trig(1.0, [(0.6, 1, 0), (0.5, 0, 1)])
        with pytest.raises(InvalidCeiling):
            CeilingFunction.trig(1.0, [(0.2, 1, 0)], alpha=0.9)
        with pytest.raises(InvalidCeiling):
            CeilingFunction(kind="constant", c0=1.0, terms=[CosineTerm(0.1, 1, 0)], alpha=0.9)
        c = CeilingFunction.trig(1.0, [(0.2, 1, 0)], alpha=0.5)
        assert c.alpha == 0.5
        assert c.certified_bound == pytest.approx(0.8)

    def test_eval(self):
        assert CeilingFunction.constant(1.0).eval(TorusPoint(0.3, 0.9)) == 1.0
        c = CeilingFunction.trig(1.0, [(0.1, 1, 0)])
        assert c.eval(TorusPoint(0.0, 0.0)) == pytest.approx(1.1)
        assert c.eval(TorusPoint(0.5, 0.0)) == pytest.approx(0.9)
        assert c.alpha == pytest.approx(0.9)

    def test_eval_array(self):
        c = demo_ceiling()
        table = new_rng(5).uniform(0.0, 1.0, size=(50, 2))
        values = c.eval_array(table[:, 0], table[:, 1])
        expected = [c.eval(TorusPoint(x1, x2)) for x1, x2 in table]
        np.testing.assert_allclose(values, expected, rtol=0, atol=1e-14)
        np.testing.assert_array_equal(
            CeilingFunction.constant(2.0).eval_array(np.zeros(3), np.zeros(3)),
            np.full(3, 2.0),
        )

    def test_alpha_certified_on_grid(self):
        c = demo_ceiling()
        u = np.arange(256) / 256
        x1, x2 = np.meshgrid(u, u)
        assert c.eval_array(x1, x2).min() >= c.alpha - 1e-9

    def test_gradient(self):
        np.testing.assert_array_equal(
            CeilingFunction.constant(1.0).gradient(TorusPoint(0.1, 0.2)), [0.0, 0.0]
        )
        c = CeilingFunction.trig(1.0, [(0.1, 1, 0)])
        np.testing.assert_allclose(
            c.gradient(TorusPoint(0.25, 0.0)), [-0.2 * math.pi, 0.0], atol=1e-15
        )

        c = demo_ceiling()
        step = 1e-5
        for x1, x2 in new_rng(6).uniform(0.0, 1.0, size=(100, 2)):
            x = TorusPoint(x1, x2)
            fd = np.array(
                [
                    (c.eval(x.shift(step, 0)) - c.eval(x.shift(-step, 0))) / (2 * step),
                    (c.eval(x.shift(0, step)) - c.eval(x.shift(0, -step))) / (2 * step),
                ]
            )
            grad = c.gradient(x)
            # relative to the gradient scale of the ceiling
            assert np.max(np.abs(fd - grad)) < 1e-7 * 2 * math.pi * 0.3

    def test_birkhoff_sum(self):
        x = TorusPoint(0.1, 0.2)
        assert CeilingFunction.constant(1.0).birkhoff_sum(CAT, x, 4) == 4.0
        c = demo_ceiling()
        assert c.birkhoff_sum(CAT, x, 0) == 0.0
        with pytest.raises(ValueError):
            c.birkhoff_sum(CAT, x, -1)

        # naive loop
        total, y = 0.0, x
        for _ in range(5):
            total += c.eval(y)
            y = CAT.apply(y)
        assert birkhoff_sum(c, CAT, x, 5) == pytest.approx(total, abs=1e-12)

        sums = [c.birkhoff_sum(CAT, x, n) for n in range(20)]
        assert all(b - a >= c.alpha for a, b in zip(sums[:-1], sums[1:]))

    def test_cocycle(self):
        c = demo_ceiling()
        rng = new_rng(7)
        for _ in range(30):
            x = TorusPoint(*rng.uniform(0.0, 1.0, size=2))
            n, k = (int(v) for v in rng.integers(0, 51, size=2))
            lhs = c.birkhoff_sum(CAT, x, n + k)
            rhs = c.birkhoff_sum(CAT, x, n) + c.birkhoff_sum(CAT, CAT.iterate(x, n), k)
            assert lhs == pytest.approx(rhs, abs=1e-12)

    def test_signed_birkhoff_sum(self):
        c = demo_ceiling()
        x = TorusPoint(0.3, 0.6)
        assert c.signed_birkhoff_sum(CAT, x, 3) == c.birkhoff_sum(CAT, x, 3)
        expected = -sum(c.eval(CAT.iterate(x, -i)) for i in range(1, 4))
        assert c.signed_birkhoff_sum(CAT, x, -3) == pytest.approx(expected, abs=1e-12)
        # S(n + k) = S(n) + S(k, f^n x) across the sign change
        lhs = c.signed_birkhoff_sum(CAT, x, 2)
        rhs = c.signed_birkhoff_sum(CAT, x, -3) + c.signed_birkhoff_sum(
            CAT, CAT.iterate(x, -3), 5
        )
        assert lhs == pytest.approx(rhs, abs=1e-12)

    def test_compose_affine(self):
        c = demo_ceiling()
        m = IntMatrix2.from_list([[1, -1], [0, 1]])
        shift = (0.25, 0.5)
        composed = c.compose_affine(m, shift)
        for x1, x2 in new_rng(8).uniform(0.0, 1.0, size=(50, 2)):
            y1, y2 = m.mul_vec(x1, x2)
            expected = c.eval(TorusPoint(y1 + shift[0], y2 + shift[1]))
            assert composed.eval(TorusPoint(x1, x2)) == pytest.approx(expected, abs=1e-12)
        constant = CeilingFunction.constant(1.5)
        assert constant.compose_affine(m, shift) is constant

    def test_to_text(self):
        assert CeilingFunction.constant(1.0).to_text() == {"ceiling": "constant", "c0": "1.0"}
        data = CeilingFunction.trig(1.0, [(0.2, 1, 0)], alpha=0.5).to_text()
        assert data["ceiling"] == "trig"
        assert data["terms"] == "0.2:1:0:0.0"
        assert data["alpha"] == "0.5"
        assert "alpha" not in demo_ceiling().to_text()


if __name__ == "__main__":
    from anosov_suspension.tests import run_cov_test

    run_cov_test(__file__, "anosov_suspension.ceiling", preview=False)
