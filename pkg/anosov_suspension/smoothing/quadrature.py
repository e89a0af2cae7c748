# -*- coding: utf-8 -*-

"""
Adaptive Simpson quadrature.

- :func:`adaptive_simpson` integrates a scalar function over one interval.
- :func:`cumulative_simpson` returns the running integral at the nodes of a
  uniform grid, refining every grid cell independently with numpy arrays.

Both use the standard error estimate ``(S2 - S1) / 15`` between one Simpson
panel and its two halves, and add it back as a Richardson correction.
"""

import typing as T
import logging

import numpy as np

from ..constants import QUADRATURE_TOLERANCE, QUADRATURE_MAX_DEPTH
from ..exc import QuadratureFailure

logger = logging.getLogger(__name__)

T_SCALAR_FUNC = T.Callable[[float], float]
T_ARRAY_FUNC = T.Callable[[np.ndarray], np.ndarray]

N_INITIAL_PANELS = 8
ROUNDOFF_FLOOR = 1e-16


def _simpson(h: float, fa: float, fm: float, fb: float) -> float:
    return h / 6.0 * (fa + 4.0 * fm + fb)


def _refine(
    func: T_SCALAR_FUNC,
    a: float,
    b: float,
    fa: float,
    fm: float,
    fb: float,
    whole: float,
    tol: float,
    depth: int,
) -> float:
    m = 0.5 * (a + b)
    flm = func(0.5 * (a + m))
    frm = func(0.5 * (m + b))
    left = _simpson(m - a, fa, flm, fm)
    right = _simpson(b - m, fm, frm, fb)
    delta = left + right - whole
    if abs(delta) <= 15.0 * max(tol, ROUNDOFF_FLOOR * abs(left + right)):
        return left + right + delta / 15.0
    if depth <= 0:
        raise QuadratureFailure(
            f"adaptive Simpson did not converge on [{a!r}, {b!r}]: "
            f"error estimate {abs(delta) / 15.0:.3e} > {tol:.3e}"
        )
    return _refine(func, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) + _refine(
        func, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1
    )


def adaptive_simpson(
    func: T_SCALAR_FUNC,
    a: float,
    b: float,
    tol: float = QUADRATURE_TOLERANCE,
    max_depth: int = QUADRATURE_MAX_DEPTH,
) -> float:
    """
    ``int_a^b func`` to absolute tolerance ``tol``.

    The interval is first cut into a few panels so that a narrow peak cannot
    hide between the first three sample points.

    :raises QuadratureFailure: when a panel still misses its share of the
        tolerance after ``max_depth`` bisections.
    """
    if a == b:
        return 0.0
    edges = np.linspace(a, b, N_INITIAL_PANELS + 1)
    panel_tol = tol / N_INITIAL_PANELS
    total = 0.0
    for left, right in zip(edges[:-1], edges[1:]):
        left, right = float(left), float(right)
        mid = 0.5 * (left + right)
        fa, fm, fb = func(left), func(mid), func(right)
        whole = _simpson(right - left, fa, fm, fb)
        total += _refine(func, left, right, fa, fm, fb, whole, panel_tol, max_depth)
    return total


def cumulative_simpson(
    func: T_ARRAY_FUNC,
    a: float,
    b: float,
    n_nodes: int,
    tol: float = QUADRATURE_TOLERANCE,
    max_depth: int = QUADRATURE_MAX_DEPTH,
) -> T.Tuple[np.ndarray, np.ndarray]:
    """
    Running integral ``K(t_j) = int_a^{t_j} func`` on ``n_nodes`` uniform
    nodes ``t_0 = a, ..., t_{n-1} = b``.

    Every cell ``[t_j, t_{j+1}]`` starts as one panel. Panels whose error
    estimate exceeds their width-proportional share of ``tol`` are bisected;
    accepted panels are summed back into their cell with ``np.add.at``.

    :param func: vectorized integrand.
    :returns: ``(nodes, K)``, both of length ``n_nodes``.
    """
    nodes = np.linspace(a, b, n_nodes)
    n_cells = n_nodes - 1
    cell_integral = np.zeros(n_cells)
    tol_density = tol / (b - a)

    owner = np.arange(n_cells)
    left = nodes[:-1].copy()
    right = nodes[1:].copy()
    f_left = func(left)
    f_right = func(right)
    mid = 0.5 * (left + right)
    f_mid = func(mid)
    whole = (right - left) / 6.0 * (f_left + 4.0 * f_mid + f_right)

    depth = 0
    n_refined = 0
    while owner.size:
        lm = 0.5 * (left + mid)
        rm = 0.5 * (mid + right)
        f_lm = func(lm)
        f_rm = func(rm)
        s_left = (mid - left) / 6.0 * (f_left + 4.0 * f_lm + f_mid)
        s_right = (right - mid) / 6.0 * (f_mid + 4.0 * f_rm + f_right)
        s2 = s_left + s_right
        delta = s2 - whole
        allowed = 15.0 * np.maximum(
            tol_density * (right - left),
            ROUNDOFF_FLOOR * np.abs(s2),
        )
        ok = np.abs(delta) <= allowed
        np.add.at(cell_integral, owner[ok], s2[ok] + delta[ok] / 15.0)

        bad = ~ok
        if not bad.any():
            break
        depth += 1
        if depth > max_depth:
            raise QuadratureFailure(
                f"cumulative Simpson: {int(bad.sum())} panels unresolved after "
                f"{max_depth} bisections on [{a!r}, {b!r}]"
            )
        n_refined += int(bad.sum())
        # children: [left, mid] and [mid, right] of every failing panel
        owner = np.concatenate([owner[bad], owner[bad]])
        new_left = np.concatenate([left[bad], mid[bad]])
        new_right = np.concatenate([mid[bad], right[bad]])
        f_left = np.concatenate([f_left[bad], f_mid[bad]])
        f_right = np.concatenate([f_mid[bad], f_right[bad]])
        f_mid = np.concatenate([f_lm[bad], f_rm[bad]])
        whole = np.concatenate([s_left[bad], s_right[bad]])
        left, right = new_left, new_right
        mid = 0.5 * (left + right)

    if n_refined:
        logger.debug(
            "cumulative Simpson on [%.6g, %.6g]: %d refinements, depth %d",
            a,
            b,
            n_refined,
            depth,
        )
    cumulative = np.concatenate([[0.0], np.cumsum(cell_integral)])
    return nodes, cumulative
