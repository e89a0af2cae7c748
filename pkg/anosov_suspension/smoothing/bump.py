# -*- coding: utf-8 -*-

"""
Smooth compactly supported bumps with a prescribed integral.

Two kernels are supported on ``(a, b)``:

- ``exponential``: ``exp(-1 / ((t - a)(b - t)))`` scaled by its peak, i.e.
  ``exp(-(2t - a - b)^2 / (w^2 (t - a)(b - t)))`` with ``w = b - a``, so the
  kernel tops out at 1 on supports of any width
- ``plateau``: ``S((t - a) / w) * S((b - t) / w)``, a mollified indicator with
  ``S(u) = psi(u) / (psi(u) + psi(1 - u))``, ``psi(u) = exp(-1/u)`` and ramp
  width ``w = (b - a) * delta / (1 + delta)``.

Both vanish to all orders at ``a`` and ``b``. The bump is ``c * k / int(k)``.
For the plateau kernel ``int(k) = (b - a) / (1 + delta)`` exactly, so
``max |bump| / |mean bump| = 1 + delta``.
"""

import math
import dataclasses
from functools import cached_property

import numpy as np

from ..constants import BumpShapeEnum, DEFAULT_PLATEAU_DELTA
from .quadrature import adaptive_simpson


def _smooth_step(u: float) -> float:
    if u <= 0.0:
        return 0.0
    if u >= 1.0:
        return 1.0
    p = math.exp(-1.0 / u)
    q = math.exp(-1.0 / (1.0 - u))
    return p / (p + q)


def _smooth_step_array(u: np.ndarray) -> np.ndarray:
    inner = (u > 0.0) & (u < 1.0)
    ui = np.where(inner, u, 0.5)
    p = np.exp(-1.0 / ui)
    q = np.exp(-1.0 / (1.0 - ui))
    return np.where(inner, p / (p + q), np.where(u >= 1.0, 1.0, 0.0))


@dataclasses.dataclass(frozen=True)
class BumpSpec:
    """
    Normalized bump on ``(a, b)`` integrating to ``c``.

    :param delta: plateau ramp parameter in ``(0, 1)``; ignored by the
        exponential shape.
    """

    a: float = dataclasses.field()
    b: float = dataclasses.field()
    c: float = dataclasses.field()
    shape: BumpShapeEnum = dataclasses.field(default=BumpShapeEnum.plateau)
    delta: float = dataclasses.field(default=DEFAULT_PLATEAU_DELTA)

    def __post_init__(self):
        object.__setattr__(self, "shape", BumpShapeEnum(self.shape))
        if not self.a < self.b:
            raise ValueError(f"bump support needs a < b, got a={self.a!r}, b={self.b!r}")
        if self.shape is BumpShapeEnum.plateau and not 0.0 < self.delta < 1.0:
            raise ValueError(f"plateau delta must lie in (0, 1), got {self.delta!r}")

    @property
    def width(self) -> float:
        return self.b - self.a

    @property
    def ramp(self) -> float:
        return self.width * self.delta / (1.0 + self.delta)

    def kernel(self, t: float) -> float:
        """
        The unnormalized kernel.
        """
        a, b = self.a, self.b
        if t <= a or t >= b:
            return 0.0
        if self.shape is BumpShapeEnum.exponential:
            m = 2.0 * t - a - b
            return math.exp(-m * m / (self.width * self.width * (t - a) * (b - t)))
        w = self.ramp
        return _smooth_step((t - a) / w) * _smooth_step((b - t) / w)

    def kernel_array(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        a, b = self.a, self.b
        inside = (t > a) & (t < b)
        if self.shape is BumpShapeEnum.exponential:
            ti = np.where(inside, t, 0.5 * (a + b))
            m = 2.0 * ti - a - b
            q = self.width * self.width * (ti - a) * (b - ti)
            return np.where(inside, np.exp(-m * m / q), 0.0)
        w = self.ramp
        return _smooth_step_array((t - a) / w) * _smooth_step_array((b - t) / w)

    @cached_property
    def kernel_integral(self) -> float:
        if self.shape is BumpShapeEnum.plateau:
            return self.width / (1.0 + self.delta)
        # the integral scales like width**2 on narrow supports
        tol = 1e-13 * self.width * min(1.0, self.width)
        return adaptive_simpson(self.kernel, self.a, self.b, tol=tol)

    @property
    def kernel_max(self) -> float:
        return 1.0

    @property
    def peak_ratio(self) -> float:
        """
        ``max |bump| / |mean bump|`` over the support, independent of ``c``.
        """
        return self.kernel_max * self.width / self.kernel_integral

    @property
    def min_value(self) -> float:
        """
        Smallest value of the bump (``0`` unless ``c < 0``).
        """
        if self.c >= 0:
            return 0.0
        return self.c * self.kernel_max / self.kernel_integral

    def eval(self, t: float) -> float:
        if self.c == 0:
            return 0.0
        return self.c * self.kernel(t) / self.kernel_integral

    def eval_array(self, t: np.ndarray) -> np.ndarray:
        if self.c == 0:
            return np.zeros(np.shape(t))
        return self.c * self.kernel_array(t) / self.kernel_integral


def bump_eval(spec: BumpSpec, t: float) -> float:
    return spec.eval(t)


def bump_integral(spec: BumpSpec) -> float:
    """
    Integral of the normalized bump over its support, by adaptive Simpson.
    """
    if spec.c == 0:
        return 0.0
    return adaptive_simpson(spec.eval, spec.a, spec.b, tol=1e-12 * max(1.0, abs(spec.c)))
