# -*- coding: utf-8 -*-

"""
Scaling probe for a base homeomorphism at one point.

For dyadic radii ``delta = 2^-k`` the increments ``|h(x + delta v) - h(x)|``
are regressed against ``delta`` on a log-log scale. A slope near 1 is what a
map differentiable at ``x`` with invertible derivative produces; a Hölder
singularity of exponent ``a`` gives slope ``a``.
"""

import typing as T
import math
import dataclasses

import numpy as np

from ..constants import PROBE_DYADIC_EXPONENTS, DEFAULT_SEED
from ..utils import new_rng
from ..torus import TorusPoint
from .fd import torus_increment


@dataclasses.dataclass(frozen=True, eq=False)
class PointProbeResult:
    """
    :param slope: median of the per-direction slopes, ``nan`` if degenerate.
    :param degenerate: some increment vanished, so the map collapses a
        neighbourhood and cannot be a local diffeomorphism.
    """

    x: TorusPoint = dataclasses.field()
    slope: float = dataclasses.field()
    slopes: np.ndarray = dataclasses.field()
    degenerate: bool = dataclasses.field()

    def to_record(self) -> T.Dict[str, T.Any]:
        return {
            "record": "point",
            "x1": self.x.x1,
            "x2": self.x.x2,
            "slope": None if self.degenerate else self.slope,
            "degenerate": self.degenerate,
        }


def point_differentiability_probe(
    func: T.Callable[[TorusPoint], TorusPoint],
    x: TorusPoint,
    n_directions: int = 8,
    exponents: T.Sequence[int] = PROBE_DYADIC_EXPONENTS,
    rng: T.Optional[np.random.Generator] = None,
) -> PointProbeResult:
    if rng is None:
        rng = new_rng(DEFAULT_SEED)
    deltas = np.array([2.0**-k for k in exponents])
    log_deltas = np.log(deltas)
    angles = rng.uniform(0.0, 2.0 * math.pi, size=n_directions)
    slopes = list()
    degenerate = False
    for angle in angles:
        v1, v2 = math.cos(angle), math.sin(angle)
        increments = np.array(
            [torus_increment(func, x, d * v1, d * v2) for d in deltas]
        )
        if np.any(increments == 0.0):
            degenerate = True
            break
        slope, _ = np.polyfit(log_deltas, np.log(increments), 1)
        slopes.append(slope)
    if degenerate:
        return PointProbeResult(
            x=x, slope=math.nan, slopes=np.array(slopes), degenerate=True
        )
    slopes = np.array(slopes)
    return PointProbeResult(
        x=x, slope=float(np.median(slopes)), slopes=slopes, degenerate=False
    )
