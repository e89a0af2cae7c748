# -*- coding: utf-8 -*-

"""
Jacobians of the equivalence maps away from the section.

In coordinates ``(x1, x2, s)`` the fiber-scaling map
``(x, s) -> (h(x), s * r(x))``, ``r = c_g∘h / c_f``, has the block Jacobian

.. code-block:: text

    [ Dh_x        0   ]
    [ s * grad r  r(x) ]

with ``grad r = Dh^T grad c_g(h(x)) / c_f(x) - c_g(h(x)) grad c_f(x) / c_f(x)^2``.
"""

import typing as T
import dataclasses

import numpy as np

from ..constants import DEFAULT_FD_STEP, RICHARDSON_ORDER
from ..exc import OnSection
from ..suspension import SuspensionPoint
from ..equivalence import EquivalencePair
from ..smoothing.reparam import SmoothedEquivalence
from .fd import fd_jacobian


def analytic_jacobian_piecewise(
    pair: EquivalencePair,
    p: SuspensionPoint,
) -> np.ndarray:
    """
    :raises OnSection: for ``s <= 0``, where the map is only piecewise
        differentiable.
    """
    if p.height <= 0:
        raise OnSection(f"{p} lies on the section; the block Jacobian needs s > 0")
    x, s = p.base, p.height
    dh = pair.h.jacobian(x)
    hx = pair.h.apply(x)
    c_f = pair.source.ceiling.eval(x)
    c_g = pair.target.ceiling.eval(hx)
    grad_ratio = dh.T @ pair.target.ceiling.gradient(hx) / c_f - (
        c_g * pair.source.ceiling.gradient(x) / (c_f * c_f)
    )
    jac = np.zeros((3, 3))
    jac[:2, :2] = dh
    jac[2, :2] = s * grad_ratio
    jac[2, 2] = c_g / c_f
    return jac


@dataclasses.dataclass(frozen=True, eq=False)
class JacobianReport:
    """
    One interior probe: the finite-difference Jacobian, the analytic one when
    known and their largest entrywise difference.
    """

    point: SuspensionPoint = dataclasses.field()
    fd: np.ndarray = dataclasses.field()
    fd_step: float = dataclasses.field()
    richardson_order: int = dataclasses.field()
    analytic: T.Optional[np.ndarray] = dataclasses.field(default=None)
    label: str = dataclasses.field(default="piecewise")

    @property
    def max_abs_error(self) -> T.Optional[float]:
        if self.analytic is None:
            return None
        return float(np.max(np.abs(self.analytic - self.fd)))

    @property
    def determinant(self) -> float:
        return float(np.linalg.det(self.fd))

    def to_record(self) -> T.Dict[str, T.Any]:
        return {
            "record": "jacobian",
            "map": self.label,
            "x1": self.point.base.x1,
            "x2": self.point.base.x2,
            "s": self.point.height,
            "fd_step": self.fd_step,
            "richardson_order": self.richardson_order,
            "max_abs_error": self.max_abs_error,
            "determinant": self.determinant,
            "fd": self.fd.ravel().tolist(),
            "analytic": None if self.analytic is None else self.analytic.ravel().tolist(),
        }


def probe_piecewise(
    pair: EquivalencePair,
    p: SuspensionPoint,
    step: float = DEFAULT_FD_STEP,
) -> JacobianReport:
    return JacobianReport(
        point=p,
        fd=fd_jacobian(pair.h_hat, p, pair.source, pair.target, step=step),
        fd_step=step,
        richardson_order=RICHARDSON_ORDER,
        analytic=analytic_jacobian_piecewise(pair, p),
        label="piecewise",
    )


def probe_smoothed(
    se: SmoothedEquivalence,
    p: SuspensionPoint,
    step: float = DEFAULT_FD_STEP,
) -> JacobianReport:
    pair = se.pair
    return JacobianReport(
        point=p,
        fd=fd_jacobian(se.smooth_h_hat, p, pair.source, pair.target, step=step),
        fd_step=step,
        richardson_order=RICHARDSON_ORDER,
        label="smoothed",
    )
