# -*- coding: utf-8 -*-

"""
The suspension space ``M_c`` and its vertical flow.

A point ``(x, s)`` moves up its fiber at unit speed; on reaching the roof
``(x, c(x))`` it is identified with ``(f(x), 0)``. Representatives are
half-open: ``0 <= s < c(x)``.
"""

import typing as T
import math
import logging
import dataclasses

import polars as pl

from .constants import SEAM_TOLERANCE, TRAJECTORY_COLUMNS
from .exc import IterationCapExceeded
from .torus import TorusPoint, HyperbolicToralMap, torus_distance
from .ceiling import CeilingFunction

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class SuspensionPoint:
    base: TorusPoint = dataclasses.field()
    height: float = dataclasses.field()

    @classmethod
    def new(cls, x1: float, x2: float, height: float) -> "SuspensionPoint":
        return cls(base=TorusPoint(x1, x2), height=float(height))

    def as_tuple(self) -> T.Tuple[float, float, float]:
        return (self.base.x1, self.base.x2, self.height)


class Landing(T.NamedTuple):
    """
    Result of moving ``u`` units of time up from the bottom of the fiber
    over ``x``: the step count ``n``, the canonical landing point and the
    signed Birkhoff sum ``S(n, x)`` that was crossed.
    """

    n: int
    point: SuspensionPoint
    crossed: float


@dataclasses.dataclass(frozen=True)
class SuspensionSystem:
    """
    The suspension of ``map`` under ``ceiling``.
    """

    map: HyperbolicToralMap = dataclasses.field()
    ceiling: CeilingFunction = dataclasses.field()

    @property
    def alpha(self) -> float:
        return self.ceiling.alpha

    def roof(self, x: TorusPoint) -> float:
        return self.ceiling.eval(x)

    return_time = roof

    def _iteration_cap(self, s: float, t: float) -> int:
        return math.ceil((abs(t) + s) / self.alpha) + 1

    def land(self, x: TorusPoint, s: float, t: float) -> Landing:
        """
        Move ``(x, s)`` by time ``t`` and report where it lands.

        Forward (``s + t >= 0``): the ``n >= 0`` with ``S(n) <= s + t < S(n+1)``.
        Backward: the ``n = -k < 0`` with ``-B(k) <= s + t < -B(k-1)`` where
        ``B(k) = sum_{i=1}^{k} c(f^-i x)``. An exact tie goes to the larger
        ``n``; a height within :data:`SEAM_TOLERANCE` of the roof is pushed
        through the identification.
        """
        u = s + t
        cap = self._iteration_cap(s, t)
        f = self.map
        if u >= 0:
            n = 0
            total = 0.0
            base = x
            c = self.ceiling.eval(base)
            while u - total >= c - SEAM_TOLERANCE:
                total += c
                base = f.apply(base)
                n += 1
                if n > cap:
                    raise IterationCapExceeded(
                        f"forward step count exceeded cap {cap} at s={s!r}, t={t!r}"
                    )
                c = self.ceiling.eval(base)
            height = max(u - total, 0.0)
            return Landing(n=n, point=SuspensionPoint(base, height), crossed=total)

        k = 0
        total = 0.0
        base = x
        while True:
            base = f.apply_inverse(base)
            c = self.ceiling.eval(base)
            total += c
            k += 1
            if k > cap:
                raise IterationCapExceeded(
                    f"backward step count exceeded cap {cap} at s={s!r}, t={t!r}"
                )
            if u + total >= 0:
                break
        height = u + total
        if height >= c - SEAM_TOLERANCE:
            total -= c
            base = f.apply(base)
            k -= 1
            height = max(height - c, 0.0)
        return Landing(n=-k, point=SuspensionPoint(base, height), crossed=-total)

    def normalize(self, base: TorusPoint, height: float) -> SuspensionPoint:
        """
        Canonical representative of ``(base, height)`` for any finite height.
        """
        if 0.0 <= height < self.ceiling.eval(base) - SEAM_TOLERANCE:
            return SuspensionPoint(base, float(height))
        return self.land(base, 0.0, height).point

    def step_count(self, x: TorusPoint, s: float, t: float) -> int:
        return self.land(x, s, t).n

    def flow(self, p: SuspensionPoint, t: float) -> SuspensionPoint:
        if t == 0:
            return p
        return self.land(p.base, p.height, t).point

    def first_return(self, p: SuspensionPoint) -> SuspensionPoint:
        """
        The next hit of the section ``{height = 0}``, i.e. ``(f(x), 0)``.
        """
        return SuspensionPoint(self.map.apply(p.base), 0.0)

    def representatives(
        self,
        q: SuspensionPoint,
    ) -> T.Iterator[T.Tuple[TorusPoint, float]]:
        yield q.base, q.height
        below = self.map.apply_inverse(q.base)
        yield below, q.height + self.ceiling.eval(below)
        yield self.map.apply(q.base), q.height - self.ceiling.eval(q.base)

    def _one_sided_distance(self, p: SuspensionPoint, q: SuspensionPoint) -> float:
        return min(
            torus_distance(p.base, base) + abs(p.height - height)
            for base, height in self.representatives(q)
        )

    def section_distance(self, p: SuspensionPoint, q: SuspensionPoint) -> float:
        """
        Seam-aware distance: torus distance of bases plus height difference,
        minimized over ``q`` itself and ``q`` seen from the neighbouring
        fibers. Taking the minimum in both directions makes it symmetric.
        """
        return min(self._one_sided_distance(p, q), self._one_sided_distance(q, p))

    def trajectory(
        self,
        p: SuspensionPoint,
        times: T.Iterable[float],
    ) -> pl.DataFrame:
        """
        Flow ``p`` to each of ``times``; one row per time with columns
        ``t, x1, x2, height, n``.
        """
        rows = list()
        for t in times:
            t = float(t)
            if t == 0:
                n, q = 0, p
            else:
                landing = self.land(p.base, p.height, t)
                n, q = landing.n, landing.point
            rows.append((t, q.base.x1, q.base.x2, q.height, n))
        logger.debug("trajectory of %s: %d rows", p, len(rows))
        return pl.DataFrame(
            rows,
            schema=[
                ("t", pl.Float64),
                ("x1", pl.Float64),
                ("x2", pl.Float64),
                ("height", pl.Float64),
                ("n", pl.Int64),
            ],
            orient="row",
        ).select(TRAJECTORY_COLUMNS)


def normalize(
    sys: SuspensionSystem,
    base: TorusPoint,
    height: float,
) -> SuspensionPoint:
    return sys.normalize(base, height)


def step_count(sys: SuspensionSystem, x: TorusPoint, s: float, t: float) -> int:
    return sys.step_count(x, s, t)


def flow(sys: SuspensionSystem, p: SuspensionPoint, t: float) -> SuspensionPoint:
    return sys.flow(p, t)


def section_distance(
    sys: SuspensionSystem,
    p: SuspensionPoint,
    q: SuspensionPoint,
) -> float:
    return sys.section_distance(p, q)
