# -*- coding: utf-8 -*-

"""
Base discrete dynamics on the 2-torus ``R^2 / Z^2``.

This module provides:

- :class:`TorusPoint`, a point with both coordinates in ``[0, 1)``.
- :class:`IntMatrix2`, a unimodular 2x2 integer matrix.
- :class:`HyperbolicToralMap`, a hyperbolic (affine) toral automorphism
  ``x -> A x + w (mod 1)``, the base Anosov system.
- :class:`BaseConjugacy`, the analytically known conjugacies ``h`` with
  ``g∘h = h∘f`` (identity, linear, affine) plus a callable escape hatch.
"""

import typing as T
import math
import dataclasses

import numpy as np

from .constants import (
    ConjugacyKindEnum,
    TORUS_GRID_SIZE,
    SAMPLE_LATTICE_BITS,
)
from .exc import (
    NotUnimodular,
    NotHyperbolic,
    NotDifferentiable,
    NotInvertible,
)
from .typehint import T_VEC2
from .utils import wrap_unit, wrap_delta

if T.TYPE_CHECKING:  # pragma: no cover
    from .ceiling import CeilingFunction


@dataclasses.dataclass(frozen=True)
class TorusPoint:
    """
    A point of ``R^2 / Z^2``. Coordinates are reduced into ``[0, 1)`` at
    construction, so two points are equal iff their representatives are.
    """

    x1: float = dataclasses.field()
    x2: float = dataclasses.field()

    def __post_init__(self):
        object.__setattr__(self, "x1", wrap_unit(float(self.x1)))
        object.__setattr__(self, "x2", wrap_unit(float(self.x2)))

    def as_tuple(self) -> T_VEC2:
        return (self.x1, self.x2)

    def to_array(self) -> np.ndarray:
        return np.array([self.x1, self.x2], dtype=float)

    def shift(self, d1: float, d2: float) -> "TorusPoint":
        return TorusPoint(self.x1 + d1, self.x2 + d2)

    def delta_to(self, other: "TorusPoint") -> T_VEC2:
        """
        Shortest displacement ``other - self`` on the torus.
        """
        return (wrap_delta(other.x1 - self.x1), wrap_delta(other.x2 - self.x2))

    def distance(self, other: "TorusPoint") -> float:
        return torus_distance(self, other)

    def snap(self, bits: int = SAMPLE_LATTICE_BITS) -> "TorusPoint":
        return lattice_point(self.x1, self.x2, bits)


def lattice_point(x1: float, x2: float, bits: int = SAMPLE_LATTICE_BITS) -> TorusPoint:
    """
    The point of the dyadic lattice ``2^-bits Z^2`` nearest to ``(x1, x2)``.

    >>> lattice_point(0.1, 0.7, bits=2)
    TorusPoint(x1=0.0, x2=0.75)
    """
    return TorusPoint(
        math.ldexp(round(math.ldexp(x1, bits)), -bits),
        math.ldexp(round(math.ldexp(x2, bits)), -bits),
    )


def torus_distance(p: TorusPoint, q: TorusPoint) -> float:
    """
    Flat quotient metric: per-coordinate ``min(|d|, 1 - |d|)`` combined in
    the Euclidean way.
    """
    d1 = abs(p.x1 - q.x1)
    d2 = abs(p.x2 - q.x2)
    d1 = min(d1, 1.0 - d1)
    d2 = min(d2, 1.0 - d2)
    return math.hypot(d1, d2)


@dataclasses.dataclass(frozen=True)
class IntMatrix2:
    """
    Integer 2x2 matrix ``[[a, b], [c, d]]`` with determinant ``+1`` or ``-1``.
    """

    a: int = dataclasses.field()
    b: int = dataclasses.field()
    c: int = dataclasses.field()
    d: int = dataclasses.field()

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value:
                raise NotUnimodular(f"entry {name}={value!r} is not an integer")
            object.__setattr__(self, name, int(value))
        if abs(self.det) != 1:
            raise NotUnimodular(
                f"matrix {self.to_list()} has determinant {self.det}, expected +1 or -1"
            )

    @classmethod
    def from_list(cls, rows: T.Sequence[T.Sequence[int]]) -> "IntMatrix2":
        (a, b), (c, d) = rows
        return cls(a=a, b=b, c=c, d=d)

    @classmethod
    def identity(cls) -> "IntMatrix2":
        return cls(a=1, b=0, c=0, d=1)

    def to_list(self) -> T.List[T.List[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.to_list(), dtype=float)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def inverse(self) -> "IntMatrix2":
        # det is +-1, so 1/det == det and the inverse stays integral
        s = self.det
        return IntMatrix2(a=s * self.d, b=-s * self.b, c=-s * self.c, d=s * self.a)

    def __matmul__(self, other: "IntMatrix2") -> "IntMatrix2":
        return IntMatrix2(
            a=self.a * other.a + self.b * other.c,
            b=self.a * other.b + self.b * other.d,
            c=self.c * other.a + self.d * other.c,
            d=self.c * other.b + self.d * other.d,
        )

    def mul_vec(self, v1: float, v2: float) -> T_VEC2:
        """
        Matrix times vector in ``R^2`` (no reduction).
        """
        return (self.a * v1 + self.b * v2, self.c * v1 + self.d * v2)

    def power(self, k: int) -> "IntMatrix2":
        base = self if k >= 0 else self.inverse()
        result = IntMatrix2.identity()
        k = abs(k)
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result


@dataclasses.dataclass(frozen=True, eq=False)
class EigenData:
    """
    Hyperbolic splitting of a toral automorphism.

    :param lambda_u: expanding eigenvalue, ``|lambda_u| > 1``.
    :param lambda_s: contracting eigenvalue, ``|lambda_s| < 1``.
    :param v_u: unit eigenvector spanning the unstable direction.
    :param v_s: unit eigenvector spanning the stable direction.
    """

    lambda_u: float = dataclasses.field()
    lambda_s: float = dataclasses.field()
    v_u: np.ndarray = dataclasses.field()
    v_s: np.ndarray = dataclasses.field()

    @property
    def entropy(self) -> float:
        """
        Topological entropy ``log |lambda_u|``.
        """
        return math.log(abs(self.lambda_u))


@dataclasses.dataclass(frozen=True)
class HyperbolicToralMap:
    """
    Hyperbolic toral automorphism ``x -> A x + w (mod 1)``.

    ``A`` must be unimodular with ``|trace A| > 2``; both are checked at
    construction so no operation can produce an invalid map. The translation
    ``w`` defaults to zero; it is only non-zero for the target of an affine
    base conjugacy.
    """

    matrix: IntMatrix2 = dataclasses.field()
    translation: T_VEC2 = dataclasses.field(default=(0.0, 0.0))

    def __post_init__(self):
        if abs(self.matrix.trace) <= 2:
            raise NotHyperbolic(
                f"matrix {self.matrix.to_list()} has |trace| = "
                f"{abs(self.matrix.trace)} <= 2"
            )
        w1, w2 = self.translation
        object.__setattr__(self, "translation", (float(w1), float(w2)))

    @classmethod
    def from_matrix(
        cls,
        rows: T.Sequence[T.Sequence[int]],
        translation: T_VEC2 = (0.0, 0.0),
    ) -> "HyperbolicToralMap":
        """
        >>> cat = HyperbolicToralMap.from_matrix([[2, 1], [1, 1]])
        """
        return cls(matrix=IntMatrix2.from_list(rows), translation=translation)

    @classmethod
    def cat_map(cls) -> "HyperbolicToralMap":
        return cls.from_matrix([[2, 1], [1, 1]])

    @property
    def a(self) -> int:
        return self.matrix.a

    @property
    def b(self) -> int:
        return self.matrix.b

    @property
    def c(self) -> int:
        return self.matrix.c

    @property
    def d(self) -> int:
        return self.matrix.d

    @property
    def det(self) -> int:
        return self.matrix.det

    @property
    def trace(self) -> int:
        return self.matrix.trace

    @property
    def is_linear(self) -> bool:
        return self.translation == (0.0, 0.0)

    def apply(self, p: TorusPoint) -> TorusPoint:
        y1, y2 = self.matrix.mul_vec(p.x1, p.x2)
        w1, w2 = self.translation
        return TorusPoint(y1 + w1, y2 + w2)

    def apply_inverse(self, p: TorusPoint) -> TorusPoint:
        w1, w2 = self.translation
        y1, y2 = self.matrix.inverse().mul_vec(p.x1 - w1, p.x2 - w2)
        return TorusPoint(y1, y2)

    def iterate(self, p: TorusPoint, n: int) -> TorusPoint:
        """
        ``f^n(p)``; negative ``n`` iterates the inverse.
        """
        step = self.apply if n >= 0 else self.apply_inverse
        for _ in range(abs(n)):
            p = step(p)
        return p

    def inverse(self) -> "HyperbolicToralMap":
        inv = self.matrix.inverse()
        w1, w2 = self.translation
        u1, u2 = inv.mul_vec(-w1, -w2)
        return HyperbolicToralMap(matrix=inv, translation=(u1, u2))

    def compose(self, other: "HyperbolicToralMap") -> "HyperbolicToralMap":
        """
        ``self ∘ other``.
        """
        w1, w2 = other.translation
        u1, u2 = self.matrix.mul_vec(w1, w2)
        v1, v2 = self.translation
        return HyperbolicToralMap(
            matrix=self.matrix @ other.matrix,
            translation=(wrap_unit(u1 + v1), wrap_unit(u2 + v2)),
        )

    def power(self, k: int) -> "HyperbolicToralMap":
        if k == 0:
            raise NotHyperbolic("the zeroth power of a toral map is the identity")
        base = self if k > 0 else self.inverse()
        result = base
        for _ in range(abs(k) - 1):
            result = result.compose(base)
        return result

    def eigen_data(self) -> EigenData:
        return eigen_data(self)


def apply_map(m: HyperbolicToralMap, p: TorusPoint) -> TorusPoint:
    """
    ``(a x1 + b x2, c x1 + d x2)`` (plus translation) reduced into ``[0, 1)^2``.
    """
    return m.apply(p)


def apply_inverse(m: HyperbolicToralMap, p: TorusPoint) -> TorusPoint:
    return m.apply_inverse(p)


def eigen_data(m: HyperbolicToralMap) -> EigenData:
    """
    Closed-form eigenvalues ``(tr ± sqrt(tr^2 - 4 det)) / 2`` ordered by
    modulus, with unit eigenvectors ``(b, lambda - a)``. ``b`` is never zero
    for a hyperbolic unimodular matrix.
    """
    tr = float(m.trace)
    disc = tr * tr - 4.0 * m.det
    if abs(m.trace) <= 2 or disc <= 0:
        raise NotHyperbolic(f"trace {m.trace} does not give a hyperbolic splitting")
    root = math.sqrt(disc)
    lam1 = 0.5 * (tr + root)
    lam2 = 0.5 * (tr - root)
    lam_u, lam_s = (lam1, lam2) if abs(lam1) > abs(lam2) else (lam2, lam1)

    def unit_vector(lam: float) -> np.ndarray:
        v = np.array([float(m.b), lam - m.a])
        v = v / np.linalg.norm(v)
        if v[0] < 0 or (v[0] == 0 and v[1] < 0):
            v = -v
        return v

    return EigenData(
        lambda_u=lam_u,
        lambda_s=lam_s,
        v_u=unit_vector(lam_u),
        v_s=unit_vector(lam_s),
    )


T_TORUS_FUNC = T.Callable[[TorusPoint], TorusPoint]
T_JACOBIAN_FUNC = T.Callable[[TorusPoint], np.ndarray]


@dataclasses.dataclass(frozen=True)
class BaseConjugacy:
    """
    The base homeomorphism ``h`` with ``g∘h = h∘f``.

    Built-in kinds are analytically smooth:

    - ``identity``: ``h(x) = x``
    - ``linear``: ``h(x) = B x (mod 1)``
    - ``affine``: ``h(x) = B x + v (mod 1)``

    The ``callable`` kind wraps a user function. Its smoothness is declared
    by the user through ``differentiable``, never certified.
    """

    kind: ConjugacyKindEnum = dataclasses.field()
    b_matrix: IntMatrix2 = dataclasses.field(default_factory=IntMatrix2.identity)
    offset: T_VEC2 = dataclasses.field(default=(0.0, 0.0))
    func: T.Optional[T_TORUS_FUNC] = dataclasses.field(default=None, compare=False)
    inverse_func: T.Optional[T_TORUS_FUNC] = dataclasses.field(
        default=None, compare=False
    )
    jacobian_func: T.Optional[T_JACOBIAN_FUNC] = dataclasses.field(
        default=None, compare=False
    )
    differentiable: bool = dataclasses.field(default=True)

    def __post_init__(self):
        object.__setattr__(self, "kind", ConjugacyKindEnum(self.kind))
        if self.kind is ConjugacyKindEnum.callable and self.func is None:
            raise ValueError("a callable conjugacy needs 'func'")

    @classmethod
    def identity(cls) -> "BaseConjugacy":
        return cls(kind=ConjugacyKindEnum.identity)

    @classmethod
    def linear(cls, rows: T.Sequence[T.Sequence[int]]) -> "BaseConjugacy":
        return cls(kind=ConjugacyKindEnum.linear, b_matrix=IntMatrix2.from_list(rows))

    @classmethod
    def affine(
        cls,
        rows: T.Sequence[T.Sequence[int]],
        offset: T_VEC2,
    ) -> "BaseConjugacy":
        v1, v2 = offset
        return cls(
            kind=ConjugacyKindEnum.affine,
            b_matrix=IntMatrix2.from_list(rows),
            offset=(wrap_unit(v1), wrap_unit(v2)),
        )

    @classmethod
    def from_callable(
        cls,
        func: T_TORUS_FUNC,
        inverse_func: T.Optional[T_TORUS_FUNC] = None,
        jacobian_func: T.Optional[T_JACOBIAN_FUNC] = None,
        differentiable: bool = False,
    ) -> "BaseConjugacy":
        return cls(
            kind=ConjugacyKindEnum.callable,
            func=func,
            inverse_func=inverse_func,
            jacobian_func=jacobian_func,
            differentiable=differentiable,
        )

    @property
    def is_callable(self) -> bool:
        return self.kind is ConjugacyKindEnum.callable

    @property
    def is_invertible(self) -> bool:
        return (not self.is_callable) or (self.inverse_func is not None)

    def apply(self, p: TorusPoint) -> TorusPoint:
        if self.kind is ConjugacyKindEnum.identity:
            return p
        if self.is_callable:
            return self.func(p)
        y1, y2 = self.b_matrix.mul_vec(p.x1, p.x2)
        v1, v2 = self.offset
        return TorusPoint(y1 + v1, y2 + v2)

    def apply_inverse(self, q: TorusPoint) -> TorusPoint:
        if self.kind is ConjugacyKindEnum.identity:
            return q
        if self.is_callable:
            if self.inverse_func is None:
                raise NotInvertible("callable conjugacy was given without an inverse")
            return self.inverse_func(q)
        v1, v2 = self.offset
        y1, y2 = self.b_matrix.inverse().mul_vec(q.x1 - v1, q.x2 - v2)
        return TorusPoint(y1, y2)

    def jacobian(self, p: TorusPoint) -> np.ndarray:
        """
        ``Dh_p``: the constant ``B`` for linear/affine kinds, the identity for
        the identity kind.
        """
        if self.kind is ConjugacyKindEnum.identity:
            return np.eye(2)
        if not self.is_callable:
            return self.b_matrix.to_numpy()
        if not self.differentiable:
            raise NotDifferentiable(
                "callable conjugacy is not declared differentiable"
            )
        if self.jacobian_func is not None:
            return np.asarray(self.jacobian_func(p), dtype=float)
        return _central_jacobian(self.func, p)

    def conjugate_map(self, f: HyperbolicToralMap) -> HyperbolicToralMap:
        """
        The map ``g = h∘f∘h^-1``.

        For ``h(x) = B x + v`` and ``f(x) = A x + w`` this is
        ``g(y) = B A B^-1 y + (B w + v - B A B^-1 v)``.
        """
        if self.kind is ConjugacyKindEnum.identity:
            return f
        if self.is_callable:
            raise ValueError("callable conjugacies need an explicit target map")
        b = self.b_matrix
        g_matrix = b @ f.matrix @ b.inverse()
        w1, w2 = f.translation
        bw1, bw2 = b.mul_vec(w1, w2)
        v1, v2 = self.offset
        gv1, gv2 = g_matrix.mul_vec(v1, v2)
        return HyperbolicToralMap(
            matrix=g_matrix,
            translation=(wrap_unit(bw1 + v1 - gv1), wrap_unit(bw2 + v2 - gv2)),
        )

    def push_ceiling(self, ceiling: "CeilingFunction") -> "CeilingFunction":
        """
        The ceiling ``c∘h^-1`` on the target torus, for which the suspensions
        are conjugate rather than merely equivalent.
        """
        if self.kind is ConjugacyKindEnum.identity:
            return ceiling
        if self.is_callable:
            raise ValueError("cannot push a ceiling through a callable conjugacy")
        inv = self.b_matrix.inverse()
        v1, v2 = self.offset
        u1, u2 = inv.mul_vec(-v1, -v2)
        return ceiling.compose_affine(inv, (u1, u2))


def apply_conjugacy(h: BaseConjugacy, p: TorusPoint) -> TorusPoint:
    return h.apply(p)


def conjugacy_jacobian(h: BaseConjugacy, p: TorusPoint) -> np.ndarray:
    return h.jacobian(p)


def _central_jacobian(
    func: T_TORUS_FUNC,
    p: TorusPoint,
    step: float = 1e-6,
) -> np.ndarray:
    jac = np.empty((2, 2))
    for j, (d1, d2) in enumerate(((step, 0.0), (0.0, step))):
        plus = func(p.shift(d1, d2))
        minus = func(p.shift(-d1, -d2))
        e1, e2 = minus.delta_to(plus)
        jac[0, j] = e1 / (2 * step)
        jac[1, j] = e2 / (2 * step)
    return jac


def grid_points(size: int = TORUS_GRID_SIZE) -> T.Iterator[TorusPoint]:
    """
    The dyadic (for power-of-two ``size``) grid ``{(i/size, j/size)}``.
    """
    for i in range(size):
        for j in range(size):
            yield TorusPoint(i / size, j / size)


def conjugacy_residual(
    f: HyperbolicToralMap,
    g: HyperbolicToralMap,
    h: BaseConjugacy,
    points: T.Optional[T.Iterable[TorusPoint]] = None,
) -> float:
    """
    ``max d(g(h(x)), h(f(x)))`` over ``points`` (default: the 64x64 grid).
    """
    if points is None:
        points = grid_points()
    residual = 0.0
    for x in points:
        residual = max(residual, torus_distance(g.apply(h.apply(x)), h.apply(f.apply(x))))
    return residual
