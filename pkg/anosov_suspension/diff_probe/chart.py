# -*- coding: utf-8 -*-

"""
Flow-box charts across the section and the seam-matching check.

A chart anchored at a section point ``(x', 0)`` uses coordinates
``(u1, u2, tau)``:

.. code-block:: text

    chart(u, tau) = flow((x' + u, 0), tau)

``tau > 0`` is the bottom of the fiber over ``x' + u``; ``tau < 0`` is the top
of the fiber below it. An equivalence map is differentiable across the seam
at ``x'`` iff its chart Jacobians from both sides agree.
"""

import typing as T
import dataclasses

import numpy as np

from ..constants import DEFAULT_CHART_STEP, RICHARDSON_ORDER
from ..exc import StepTooLarge
from ..torus import TorusPoint, BaseConjugacy
from ..suspension import SuspensionPoint, SuspensionSystem
from ..equivalence import EquivalencePair
from ..smoothing.reparam import SmoothedEquivalence
from .fd import local_offset, richardson_extrapolate, T_SUSPENSION_MAP


@dataclasses.dataclass(frozen=True)
class SectionChart:
    system: SuspensionSystem = dataclasses.field()
    anchor: SuspensionPoint = dataclasses.field()

    @classmethod
    def at(cls, system: SuspensionSystem, x: TorusPoint) -> "SectionChart":
        return cls(system=system, anchor=SuspensionPoint(x, 0.0))

    @property
    def half_width(self) -> float:
        return self.system.alpha / 4.0

    def to_point(self, u1: float, u2: float, tau: float) -> SuspensionPoint:
        p = SuspensionPoint(self.anchor.base.shift(u1, u2), 0.0)
        return self.system.flow(p, tau)

    def to_coords(self, q: SuspensionPoint) -> np.ndarray:
        """
        ``(u1, u2, tau)`` of a point near the anchor.
        """
        return local_offset(self.system, self.anchor, q)


@dataclasses.dataclass(frozen=True, eq=False)
class SectionCheck:
    """
    Chart Jacobians of a map just above (``plus``) and just below
    (``minus``) the section point ``x``, and their largest entrywise gap.
    """

    x: TorusPoint = dataclasses.field()
    plus: np.ndarray = dataclasses.field()
    minus: np.ndarray = dataclasses.field()
    step: float = dataclasses.field()
    label: str = dataclasses.field(default="smoothed")

    @property
    def mismatch(self) -> float:
        return float(np.max(np.abs(self.plus - self.minus)))

    def to_record(self) -> T.Dict[str, T.Any]:
        return {
            "record": "section",
            "map": self.label,
            "x1": self.x.x1,
            "x2": self.x.x2,
            "chart_step": self.step,
            "mismatch": self.mismatch,
            "slope_plus": float(self.plus[2, 2]),
            "slope_minus": float(self.minus[2, 2]),
        }


def _one_sided_jacobian(
    func: T_SUSPENSION_MAP,
    src: SectionChart,
    tgt: SectionChart,
    step: float,
    side: int,
) -> np.ndarray:
    def g(u1: float, u2: float, tau: float) -> np.ndarray:
        return tgt.to_coords(func(src.to_point(u1, u2, tau)))

    g0 = g(0.0, 0.0, 0.0)
    estimates = list()
    for h in (step, 0.5 * step):
        jac = np.empty((3, 3))
        # tau column: second-order one-sided difference away from the seam
        s = side * h
        jac[:, 2] = (-3.0 * g0 + 4.0 * g(0.0, 0.0, s) - g(0.0, 0.0, 2.0 * s)) / (2.0 * s)
        # base columns: central differences on the slice tau = side * step
        tau = side * step
        for j, (d1, d2) in enumerate(((h, 0.0), (0.0, h))):
            jac[:, j] = (g(d1, d2, tau) - g(-d1, -d2, tau)) / (2.0 * h)
        estimates.append(jac)
    return richardson_extrapolate(estimates, p=RICHARDSON_ORDER)


def section_mismatch(
    func: T_SUSPENSION_MAP,
    source: SuspensionSystem,
    target: SuspensionSystem,
    h: BaseConjugacy,
    x: TorusPoint,
    step: float = DEFAULT_CHART_STEP,
    label: str = "smoothed",
) -> SectionCheck:
    """
    Compare chart Jacobians of ``func`` on both sides of the seam
    ``(x, c_f(x)) ~ (f(x), 0)``. The source chart is anchored at ``f(x)`` and
    the target chart at ``h(f(x))``.

    :raises StepTooLarge: unless ``0 < 2 * step < alpha / 4`` in both systems.
    """
    anchor = source.map.apply(x)
    src = SectionChart.at(source, anchor)
    tgt = SectionChart.at(target, h.apply(anchor))
    half_width = min(src.half_width, tgt.half_width)
    if not 0 < 2.0 * step < half_width:
        raise StepTooLarge(
            f"chart step {step!r} must satisfy 0 < 2 * step < {half_width!r}"
        )
    return SectionCheck(
        x=x,
        plus=_one_sided_jacobian(func, src, tgt, step, side=1),
        minus=_one_sided_jacobian(func, src, tgt, step, side=-1),
        step=step,
        label=label,
    )


def cross_section_check(
    se: SmoothedEquivalence,
    x: TorusPoint,
    step: float = DEFAULT_CHART_STEP,
) -> float:
    return smoothed_section_check(se, x, step).mismatch


def smoothed_section_check(
    se: SmoothedEquivalence,
    x: TorusPoint,
    step: float = DEFAULT_CHART_STEP,
) -> SectionCheck:
    pair = se.pair
    return section_mismatch(
        se.smooth_h_hat, pair.source, pair.target, pair.h, x, step, label="smoothed"
    )


def piecewise_section_check(
    pair: EquivalencePair,
    x: TorusPoint,
    step: float = DEFAULT_CHART_STEP,
) -> SectionCheck:
    """
    The same check for the fiber-scaling map; its height slopes are
    ``r(f(x))`` above the seam and ``r(x)`` below it.
    """
    return section_mismatch(
        pair.h_hat, pair.source, pair.target, pair.h, x, step, label="piecewise"
    )
