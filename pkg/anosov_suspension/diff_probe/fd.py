# -*- coding: utf-8 -*-

"""
Finite differences on suspension spaces.

Points are read in the coordinates ``(x1, x2, s)``. Differences of outputs
are taken in local coordinates around a reference output, choosing among the
representatives of a point the one closest to the reference, so an output
that crossed the seam is compared correctly.
"""

import typing as T

import numpy as np

from ..constants import DEFAULT_FD_STEP, RICHARDSON_ORDER
from ..exc import StepTooLarge
from ..utils import wrap_delta
from ..torus import TorusPoint, torus_distance
from ..suspension import SuspensionPoint, SuspensionSystem

T_SUSPENSION_MAP = T.Callable[[SuspensionPoint], SuspensionPoint]


def richardson_extrapolate(
    base_values: T.Sequence[T.Union[np.ndarray, float]],
    p: int,
    r: float = 2.0,
) -> np.ndarray:
    """
    Richardson extrapolation of approximations computed with steps shrinking
    by ``r``, whose leading error term has order ``p``.
    """
    n = len(base_values)
    if n < 2:
        raise ValueError("richardson_extrapolate requires at least two base values.")
    vals = [np.asarray(v, dtype=float) for v in base_values]
    for j in range(1, n):
        factor = r ** (p * j)
        for k in range(n - 1, j - 1, -1):
            vals[k] = (factor * vals[k] - vals[k - 1]) / (factor - 1.0)
    return vals[-1]


def local_offset(
    system: SuspensionSystem,
    ref: SuspensionPoint,
    q: SuspensionPoint,
) -> np.ndarray:
    """
    Coordinates of ``q`` relative to ``ref``: ``(dx1, dx2, ds)`` of the
    representative of ``q`` nearest to ``ref``.
    """
    best = None
    best_distance = np.inf
    for base, height in system.representatives(q):
        distance = torus_distance(ref.base, base) + abs(height - ref.height)
        if distance < best_distance:
            best, best_distance = (base, height), distance
    base, height = best
    return np.array(
        [
            wrap_delta(base.x1 - ref.base.x1),
            wrap_delta(base.x2 - ref.base.x2),
            height - ref.height,
        ]
    )


def perturb(
    system: SuspensionSystem,
    p: SuspensionPoint,
    direction: int,
    offset: float,
) -> SuspensionPoint:
    """
    ``p`` moved by ``offset`` along coordinate ``direction`` (0, 1: base,
    2: height).

    :raises StepTooLarge: when the moved point leaves the fiber it started on.
    """
    if direction == 2:
        base, height = p.base, p.height + offset
    else:
        d1, d2 = (offset, 0.0) if direction == 0 else (0.0, offset)
        base, height = p.base.shift(d1, d2), p.height
    if not 0.0 <= height < system.roof(base):
        raise StepTooLarge(
            f"offset {offset!r} along coordinate {direction} leaves the fiber "
            f"at {p}; use a smaller step or a section chart"
        )
    return SuspensionPoint(base, height)


def fd_jacobian(
    func: T_SUSPENSION_MAP,
    p: SuspensionPoint,
    source: SuspensionSystem,
    target: SuspensionSystem,
    step: float = DEFAULT_FD_STEP,
    richardson: bool = True,
) -> np.ndarray:
    """
    3x3 Jacobian of ``func`` at ``p`` by central differences, combined over
    steps ``h`` and ``h/2`` with one Richardson level when ``richardson``.

    :raises StepTooLarge: if ``step <= 0`` or a perturbation leaves the fiber.
    """
    if not step > 0:
        raise StepTooLarge(f"finite-difference step must be positive, got {step!r}")
    ref = func(p)
    steps = (step, 0.5 * step) if richardson else (step,)
    estimates = list()
    for h in steps:
        jac = np.empty((3, 3))
        for j in range(3):
            plus = local_offset(target, ref, func(perturb(source, p, j, h)))
            minus = local_offset(target, ref, func(perturb(source, p, j, -h)))
            jac[:, j] = (plus - minus) / (2.0 * h)
        estimates.append(jac)
    if richardson:
        return richardson_extrapolate(estimates, p=RICHARDSON_ORDER)
    return estimates[0]


def identity_map(p: SuspensionPoint) -> SuspensionPoint:
    return p


def torus_increment(
    func: T.Callable[[TorusPoint], TorusPoint],
    x: TorusPoint,
    d1: float,
    d2: float,
) -> float:
    """
    ``d(func(x + d), func(x))`` in the torus metric.
    """
    return torus_distance(func(x.shift(d1, d2)), func(x))
