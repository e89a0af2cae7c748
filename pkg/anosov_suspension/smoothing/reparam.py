# -*- coding: utf-8 -*-

"""
Fiber reparametrizations and the smoothed equivalence.

Over each base point ``x`` the map ``Phi_x`` sends the source fiber
``[0, c_f(x)]`` onto the target fiber ``[0, c_g(h(x))]``:

.. code-block:: text

    Phi_x(t) = t + int_0^t bump_x

where ``bump_x`` lives on ``[eps, c_f(x) - eps]`` and integrates to
``c_g(h(x)) - c_f(x)``. So ``Phi_x`` is the identity near the bottom and a
pure shift near the top, which glues it across the section.
"""

import typing as T
import logging
import threading
import dataclasses

import numpy as np
from scipy.interpolate import PchipInterpolator
from scipy.optimize import brentq

from ..constants import (
    BumpShapeEnum,
    DEFAULT_PLATEAU_DELTA,
    N_FIBER_NODES,
    FIBER_KEY_QUANTUM,
    QUADRATURE_TOLERANCE,
)
from ..exc import MonotonicityViolation, OutOfDomain, QuadratureFailure
from ..utils import quantize
from ..torus import TorusPoint
from ..suspension import SuspensionPoint
from ..equivalence import EquivalencePair
from .bump import BumpSpec
from .quadrature import cumulative_simpson

logger = logging.getLogger(__name__)

DOMAIN_SLACK = 1e-12
INVERSE_XTOL = 1e-15


@dataclasses.dataclass(frozen=True, eq=False)
class FiberReparam:
    """
    ``Phi_x`` for one base point.

    ``nodes`` and ``values`` are the cached grid of ``Phi_x`` over the bump
    support; both are empty when the bump vanishes (``Phi_x`` is the
    identity).
    """

    x: TorusPoint = dataclasses.field()
    epsilon: float = dataclasses.field()
    c_f_x: float = dataclasses.field()
    c_g_hx: float = dataclasses.field()
    bump: BumpSpec = dataclasses.field()
    nodes: np.ndarray = dataclasses.field(repr=False)
    values: np.ndarray = dataclasses.field(repr=False)
    interpolator: T.Optional[PchipInterpolator] = dataclasses.field(
        default=None, repr=False
    )

    @classmethod
    def build(
        cls,
        x: TorusPoint,
        c_f_x: float,
        c_g_hx: float,
        epsilon: float,
        shape: BumpShapeEnum = BumpShapeEnum.plateau,
        delta: float = DEFAULT_PLATEAU_DELTA,
        n_nodes: int = N_FIBER_NODES,
    ) -> "FiberReparam":
        """
        :raises MonotonicityViolation: when ``min(1 + bump) <= 0``.
        """
        shift = c_g_hx - c_f_x
        bump = BumpSpec(
            a=epsilon,
            b=c_f_x - epsilon,
            c=shift,
            shape=shape,
            delta=delta,
        )
        if shift == 0:
            empty = np.empty(0)
            return cls(
                x=x,
                epsilon=epsilon,
                c_f_x=c_f_x,
                c_g_hx=c_g_hx,
                bump=bump,
                nodes=empty,
                values=empty,
            )
        margin = 1.0 + bump.min_value
        if margin <= 0:
            raise MonotonicityViolation(x.x1, x.x2, margin, bump.shape.value)
        nodes, cumulative = cumulative_simpson(
            bump.kernel_array,
            bump.a,
            bump.b,
            n_nodes,
            tol=QUADRATURE_TOLERANCE * bump.kernel_integral,
        )
        total = float(cumulative[-1])
        if not (total > 0.0 and np.isfinite(cumulative).all()):
            raise QuadratureFailure(
                f"bump kernel on [{bump.a!r}, {bump.b!r}] integrates to {total!r}"
            )
        # normalizing by the computed total pins Phi_x(b) = b + shift
        values = nodes + shift * cumulative / total
        return cls(
            x=x,
            epsilon=epsilon,
            c_f_x=c_f_x,
            c_g_hx=c_g_hx,
            bump=bump,
            nodes=nodes,
            values=values,
            interpolator=PchipInterpolator(nodes, values),
        )

    @property
    def shift(self) -> float:
        return self.c_g_hx - self.c_f_x

    @property
    def is_identity(self) -> bool:
        return self.interpolator is None

    @property
    def margin(self) -> float:
        """
        ``min Phi_x' = min(1 + bump)``.
        """
        return 1.0 + self.bump.min_value

    def _check_domain(self, t: float):
        if t < -DOMAIN_SLACK or t > self.c_f_x + DOMAIN_SLACK:
            raise OutOfDomain(
                f"t = {t!r} outside the fiber [0, {self.c_f_x!r}] over {self.x}"
            )

    def value(self, t: float) -> float:
        self._check_domain(t)
        if self.is_identity or t <= self.bump.a:
            return t
        if t >= self.bump.b:
            return t + self.shift
        return float(self.interpolator(t))

    def derivative(self, t: float) -> float:
        self._check_domain(t)
        return 1.0 + self.bump.eval(t)

    def eval(self, t: float) -> T.Tuple[float, float]:
        """
        ``(Phi_x(t), Phi_x'(t))``; the derivative is ``1 + bump(t)``, not a
        difference of cached values.
        """
        return self.value(t), self.derivative(t)

    def eval_array(self, t: np.ndarray) -> T.Tuple[np.ndarray, np.ndarray]:
        t = np.asarray(t, dtype=float)
        if t.size and (t.min() < -DOMAIN_SLACK or t.max() > self.c_f_x + DOMAIN_SLACK):
            raise OutOfDomain(f"samples outside the fiber [0, {self.c_f_x!r}]")
        derivative = 1.0 + self.bump.eval_array(t)
        if self.is_identity:
            return t.copy(), derivative
        a, b = self.bump.a, self.bump.b
        inner = self.interpolator(np.clip(t, a, b))
        value = np.where(t <= a, t, np.where(t >= b, t + self.shift, inner))
        return value, derivative

    def inverse(self, v: float) -> float:
        """
        ``Phi_x^-1(v)`` for ``v`` in the target fiber: bracket on the cached
        grid, then Brent root finding on the monotone interpolant inside
        that cell.
        """
        if v < -DOMAIN_SLACK or v > self.c_g_hx + DOMAIN_SLACK:
            raise OutOfDomain(
                f"v = {v!r} outside the target fiber [0, {self.c_g_hx!r}]"
            )
        a, b = self.bump.a, self.bump.b
        if self.is_identity or v <= a:
            return v
        if v >= b + self.shift:
            return v - self.shift
        j = int(np.searchsorted(self.values, v, side="right")) - 1
        j = min(max(j, 0), self.nodes.size - 2)
        lo, hi = float(self.nodes[j]), float(self.nodes[j + 1])

        def residual(t: float) -> float:
            return float(self.interpolator(t)) - v

        if residual(lo) >= 0.0:
            return lo
        if residual(hi) <= 0.0:
            return hi
        return brentq(residual, lo, hi, xtol=INVERSE_XTOL)


def fiber_reparam_eval(rep: FiberReparam, t: float) -> T.Tuple[float, float]:
    return rep.eval(t)


@dataclasses.dataclass
class SmoothedEquivalence:
    """
    ``h_hat(x, s) = (h(x), Phi_x(s))``.

    Fibers are built lazily and memoized by base point, quantized to
    :data:`FIBER_KEY_QUANTUM`. The cache is guarded by a lock so one instance
    can serve a thread pool.
    """

    pair: EquivalencePair = dataclasses.field()
    shape: BumpShapeEnum = dataclasses.field(default=BumpShapeEnum.plateau)
    delta: float = dataclasses.field(default=DEFAULT_PLATEAU_DELTA)
    _cache: T.Dict[T.Tuple[int, int], FiberReparam] = dataclasses.field(
        default_factory=dict, init=False, repr=False
    )
    _lock: threading.Lock = dataclasses.field(
        default_factory=threading.Lock, init=False, repr=False
    )

    def __post_init__(self):
        self.shape = BumpShapeEnum(self.shape)

    @property
    def epsilon(self) -> float:
        """
        ``min(alpha_f, alpha_g) / 3``; both fibers are at least ``3 eps`` tall.
        """
        return min(self.pair.source.alpha, self.pair.target.alpha) / 3.0

    def fiber(self, x: TorusPoint) -> FiberReparam:
        key = (quantize(x.x1, FIBER_KEY_QUANTUM), quantize(x.x2, FIBER_KEY_QUANTUM))
        with self._lock:
            rep = self._cache.get(key)
        if rep is not None:
            return rep
        hx = self.pair.h.apply(x)
        rep = FiberReparam.build(
            x=x,
            c_f_x=self.pair.source.ceiling.eval(x),
            c_g_hx=self.pair.target.ceiling.eval(hx),
            epsilon=self.epsilon,
            shape=self.shape,
            delta=self.delta,
        )
        logger.debug("built fiber over (%.12f, %.12f), shift %.6g", x.x1, x.x2, rep.shift)
        with self._lock:
            return self._cache.setdefault(key, rep)

    def cache_size(self) -> int:
        with self._lock:
            return len(self._cache)

    def clear_cache(self):
        with self._lock:
            self._cache.clear()

    def smooth_h_hat(self, p: SuspensionPoint) -> SuspensionPoint:
        value = self.fiber(p.base).value(p.height)
        return self.pair.target.normalize(self.pair.h.apply(p.base), value)

    def smooth_h_hat_inverse(self, q: SuspensionPoint) -> SuspensionPoint:
        x = self.pair.h.apply_inverse(q.base)
        rep = self.fiber(x)
        height = rep.inverse(min(q.height, rep.c_g_hx))
        return self.pair.source.normalize(x, height)

    def smooth_time_change(self, p: SuspensionPoint, t: float) -> float:
        """
        .. code-block:: text

            t' = S_g(n, h(x)) + Phi_{x_n}(s') - Phi_x(s)

        with ``(x_n, s')`` the source landing point after time ``t``.
        """
        if t == 0:
            return 0.0
        landing = self.pair.source.land(p.base, p.height, t)
        hx = self.pair.h.apply(p.base)
        crossed = self.pair.target.ceiling.signed_birkhoff_sum(
            self.pair.target.map, hx, landing.n
        )
        end = self.fiber(landing.point.base).value(landing.point.height)
        start = self.fiber(p.base).value(p.height)
        return crossed + end - start

    def verify_smooth(self, p: SuspensionPoint, t: float) -> float:
        """
        Residual of ``smooth_h_hat(flow_f(p, t)) = flow_g(smooth_h_hat(p), t')``.

        Same precondition as :meth:`EquivalencePair.verify_equivalence`: the
        ``1e-9`` level holds for base points on the sample lattice only.
        """
        lhs = self.smooth_h_hat(self.pair.source.flow(p, t))
        rhs = self.pair.target.flow(self.smooth_h_hat(p), self.smooth_time_change(p, t))
        return self.pair.target.section_distance(lhs, rhs)


def fiber_reparam_build(
    pair: EquivalencePair,
    x: TorusPoint,
    shape: BumpShapeEnum = BumpShapeEnum.plateau,
    delta: float = DEFAULT_PLATEAU_DELTA,
) -> FiberReparam:
    return SmoothedEquivalence(pair=pair, shape=shape, delta=delta).fiber(x)


def smooth_h_hat(se: SmoothedEquivalence, p: SuspensionPoint) -> SuspensionPoint:
    return se.smooth_h_hat(p)


def smooth_time_change(se: SmoothedEquivalence, p: SuspensionPoint, t: float) -> float:
    return se.smooth_time_change(p, t)
