# -*- coding: utf-8 -*-

"""
The explicit orbit equivalence between two suspensions.

Given ``g∘h = h∘f``, the fiber-scaling map

.. code-block:: text

    h_hat(x, s) = (h(x), s * c_g(h(x)) / c_f(x))

sends orbits of the source flow to orbits of the target flow. The time
change ``tau`` makes ``h_hat(flow_f(p, t)) = flow_g(h_hat(p), tau(p, t))``
hold exactly.
"""

import typing as T
import logging
import dataclasses

import polars as pl

from .constants import CONJUGACY_GRID_TOLERANCE, EQUIVALENCE_COLUMNS
from .exc import ConjugacyMismatch
from .torus import TorusPoint, BaseConjugacy, conjugacy_residual
from .ceiling import CeilingFunction
from .suspension import SuspensionPoint, SuspensionSystem
from .typehint import EquivalenceRecord

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class TimeChangeRecord:
    """
    ``tau`` at ``(point, t)`` with the landing index ``n`` of the source flow
    and the slope ``d tau / dt = c_g(h(f^n x)) / c_f(f^n x)``.
    """

    point: SuspensionPoint = dataclasses.field()
    t: float = dataclasses.field()
    n: int = dataclasses.field()
    tau: float = dataclasses.field()
    slope: float = dataclasses.field()


@dataclasses.dataclass(frozen=True)
class EquivalencePair:
    """
    Two suspensions ``(f, c_f)`` and ``(g, c_g)`` with a base conjugacy ``h``.
    The identity ``g∘h = h∘f`` is checked on the 64x64 dyadic grid.
    """

    source: SuspensionSystem = dataclasses.field()
    target: SuspensionSystem = dataclasses.field()
    h: BaseConjugacy = dataclasses.field()
    tolerance: float = dataclasses.field(default=CONJUGACY_GRID_TOLERANCE)

    def __post_init__(self):
        residual = conjugacy_residual(self.source.map, self.target.map, self.h)
        if residual > self.tolerance:
            raise ConjugacyMismatch(residual, self.tolerance)
        logger.debug("conjugacy grid residual %.3e", residual)

    @classmethod
    def from_conjugacy(
        cls,
        source: SuspensionSystem,
        h: BaseConjugacy,
        target_ceiling: T.Optional[CeilingFunction] = None,
    ) -> "EquivalencePair":
        """
        Build the target from ``h``: ``g = h∘f∘h^-1`` and, unless a ceiling is
        given, ``c_g = c_f∘h^-1`` (the conjugacy case).
        """
        if target_ceiling is None:
            target_ceiling = h.push_ceiling(source.ceiling)
        target = SuspensionSystem(
            map=h.conjugate_map(source.map),
            ceiling=target_ceiling,
        )
        return cls(source=source, target=target, h=h)

    def fiber_scale(self, x: TorusPoint) -> T.Tuple[TorusPoint, float]:
        """
        ``(h(x), c_g(h(x)) / c_f(x))``. Every use of the ratio goes through
        here so equal inputs give bit-equal ratios.
        """
        hx = self.h.apply(x)
        return hx, self.target.ceiling.eval(hx) / self.source.ceiling.eval(x)

    def h_hat(self, p: SuspensionPoint) -> SuspensionPoint:
        hx, ratio = self.fiber_scale(p.base)
        return self.target.normalize(hx, p.height * ratio)

    def h_hat_inverse(self, q: SuspensionPoint) -> SuspensionPoint:
        x = self.h.apply_inverse(q.base)
        height = q.height * self.source.ceiling.eval(x) / self.target.ceiling.eval(q.base)
        return self.source.normalize(x, height)

    def tau(self, p: SuspensionPoint, t: float) -> TimeChangeRecord:
        """
        .. code-block:: text

            tau = s' * c_g(h(x_n)) / c_f(x_n) - s * c_g(h(x)) / c_f(x)
                  + S_g(n, h(x))

        where ``(x_n, s')`` is the source landing point after time ``t`` and
        ``S_g`` the signed Birkhoff sum of ``c_g`` along the ``g``-orbit.
        Negative ``n`` (backward time) uses the same formula.
        """
        x, s = p.base, p.height
        _, ratio = self.fiber_scale(x)
        if t == 0:
            return TimeChangeRecord(point=p, t=0.0, n=0, tau=0.0, slope=ratio)
        landing = self.source.land(x, s, t)
        _, slope = self.fiber_scale(landing.point.base)
        hx = self.h.apply(x)
        crossed = self.target.ceiling.signed_birkhoff_sum(self.target.map, hx, landing.n)
        tau = landing.point.height * slope - s * ratio + crossed
        return TimeChangeRecord(point=p, t=float(t), n=landing.n, tau=tau, slope=slope)

    def tau_derivative(self, p: SuspensionPoint, t: float) -> float:
        return self.tau(p, t).slope

    def n_consistency(self, p: SuspensionPoint, t: float) -> T.Tuple[int, int]:
        """
        ``(n_source, n_target)``: the step count of the source flow and that
        of the target flow from ``h_hat(p)`` over time ``tau``.
        """
        record = self.tau(p, t)
        q = self.h_hat(p)
        n_target = self.target.step_count(q.base, q.height, record.tau)
        return record.n, n_target

    def verify_equivalence(
        self,
        p: SuspensionPoint,
        t: float,
        tau_offset: float = 0.0,
    ) -> float:
        """
        Residual of ``h_hat(flow_f(p, t)) = flow_g(h_hat(p), tau)`` in the
        target's :meth:`~SuspensionSystem.section_distance`.

        ``tau_offset`` is added to ``tau``; a non-zero value corrupts the
        time change on purpose.

        Base points on the sample lattice (:func:`~anosov_suspension.torus.lattice_point`)
        keep the residual at rounding level, below ``1e-9``. For arbitrary
        floats the rounding error of ``x`` is stretched by the map at every
        crossed fiber, so residuals of ``1e-7`` are normal over ``|t| <= 20``.
        """
        tau = self.tau(p, t).tau + tau_offset
        lhs = self.h_hat(self.source.flow(p, t))
        rhs = self.target.flow(self.h_hat(p), tau)
        return self.target.section_distance(lhs, rhs)

    def verification_record(
        self,
        sample: int,
        p: SuspensionPoint,
        t: float,
        tau_offset: float = 0.0,
    ) -> EquivalenceRecord:
        record = self.tau(p, t)
        tau = record.tau + tau_offset
        q = self.h_hat(p)
        n_target = self.target.step_count(q.base, q.height, tau)
        lhs = self.h_hat(self.source.flow(p, t))
        rhs = self.target.flow(q, tau)
        return EquivalenceRecord(
            sample=sample,
            x1=p.base.x1,
            x2=p.base.x2,
            s=p.height,
            t=float(t),
            n_src=record.n,
            n_tgt=n_target,
            tau=tau,
            slope=record.slope,
            residual=self.target.section_distance(lhs, rhs),
        )


def verification_frame(records: T.Iterable[EquivalenceRecord]) -> pl.DataFrame:
    """
    One row per sample, columns in :data:`EQUIVALENCE_COLUMNS` order.
    """
    return pl.DataFrame(
        list(records),
        schema=[
            ("sample", pl.Int64),
            ("x1", pl.Float64),
            ("x2", pl.Float64),
            ("s", pl.Float64),
            ("t", pl.Float64),
            ("n_src", pl.Int64),
            ("n_tgt", pl.Int64),
            ("tau", pl.Float64),
            ("slope", pl.Float64),
            ("residual", pl.Float64),
        ],
    ).select(EQUIVALENCE_COLUMNS)


def h_hat(pair: EquivalencePair, p: SuspensionPoint) -> SuspensionPoint:
    return pair.h_hat(p)


def h_hat_inverse(pair: EquivalencePair, q: SuspensionPoint) -> SuspensionPoint:
    return pair.h_hat_inverse(q)


def tau(pair: EquivalencePair, p: SuspensionPoint, t: float) -> TimeChangeRecord:
    return pair.tau(p, t)


def verify_equivalence(pair: EquivalencePair, p: SuspensionPoint, t: float) -> float:
    return pair.verify_equivalence(p, t)


def n_consistency(
    pair: EquivalencePair,
    p: SuspensionPoint,
    t: float,
) -> T.Tuple[int, int]:
    return pair.n_consistency(p, t)
