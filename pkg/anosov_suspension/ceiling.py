# -*- coding: utf-8 -*-

"""
Roof functions of the suspension.

A ceiling is either a positive constant or a finite cosine polynomial

.. code-block:: text

    c(x) = c0 + sum_k amp_k * cos(2 pi (k1 x1 + k2 x2) + phase_k)

with integer wave vectors, so it is well defined on the torus, ``C^inf``, and
has the certified lower bound ``c0 - sum |amp_k|``.
"""

import typing as T
import math
import dataclasses

import numpy as np

from .constants import CeilingKindEnum
from .exc import InvalidCeiling
from .typehint import T_VEC2

if T.TYPE_CHECKING:  # pragma: no cover
    from .torus import TorusPoint, IntMatrix2, HyperbolicToralMap

TWO_PI = 2.0 * math.pi


@dataclasses.dataclass(frozen=True)
class CosineTerm:
    """
    One term ``amp * cos(2 pi (k1 x1 + k2 x2) + phase)``.
    """

    amp: float = dataclasses.field()
    k1: int = dataclasses.field()
    k2: int = dataclasses.field()
    phase: float = dataclasses.field(default=0.0)

    def __post_init__(self):
        for name in ("k1", "k2"):
            value = getattr(self, name)
            if int(value) != value:
                raise InvalidCeiling(
                    f"wave number {name}={value!r} must be an integer"
                )
            object.__setattr__(self, name, int(value))
        object.__setattr__(self, "amp", float(self.amp))
        object.__setattr__(self, "phase", float(self.phase))

    def argument(self, x1: float, x2: float) -> float:
        return TWO_PI * (self.k1 * x1 + self.k2 * x2) + self.phase

    def to_text(self) -> str:
        """
        ``amp:k1:k2:phase``, the form used in run configs.
        """
        return f"{self.amp!r}:{self.k1}:{self.k2}:{self.phase!r}"

    @classmethod
    def from_text(cls, text: str) -> "CosineTerm":
        """
        >>> CosineTerm.from_text("0.1:1:0")
        CosineTerm(amp=0.1, k1=1, k2=0, phase=0.0)
        """
        parts = [part.strip() for part in text.strip().split(":")]
        if len(parts) not in (3, 4):
            raise InvalidCeiling(
                f"cosine term {text!r} is not of the form amp:k1:k2[:phase]"
            )
        try:
            amp = float(parts[0])
            k1 = int(parts[1])
            k2 = int(parts[2])
            phase = float(parts[3]) if len(parts) == 4 else 0.0
        except ValueError as e:
            raise InvalidCeiling(f"cosine term {text!r}: {e}")
        return cls(amp=amp, k1=k1, k2=k2, phase=phase)


@dataclasses.dataclass(frozen=True)
class CeilingFunction:
    """
    Smooth positive roof with certified lower bound ``alpha > 0``.

    Use :meth:`constant` or :meth:`trig` to build one; both check the bound.
    """

    kind: CeilingKindEnum = dataclasses.field()
    c0: float = dataclasses.field()
    terms: T.Tuple[CosineTerm, ...] = dataclasses.field(default=tuple())
    alpha: float = dataclasses.field(default=0.0)

    def __post_init__(self):
        object.__setattr__(self, "kind", CeilingKindEnum(self.kind))
        object.__setattr__(self, "terms", tuple(self.terms))
        if self.kind is CeilingKindEnum.constant and self.terms:
            raise InvalidCeiling("a constant ceiling has no cosine terms")
        if not math.isfinite(self.c0):
            raise InvalidCeiling(f"c0 = {self.c0!r} is not finite")
        bound = self.certified_bound
        if self.alpha > bound + 1e-15:
            raise InvalidCeiling(
                f"alpha = {self.alpha!r} exceeds the certified bound {bound!r}"
            )
        if self.alpha <= 0:
            raise InvalidCeiling(
                f"lower bound alpha = {self.alpha!r} must be positive"
            )

    @classmethod
    def constant(cls, c0: float) -> "CeilingFunction":
        c0 = float(c0)
        return cls(kind=CeilingKindEnum.constant, c0=c0, alpha=c0)

    @classmethod
    def trig(
        cls,
        c0: float,
        terms: T.Iterable[T.Union[CosineTerm, T.Tuple[float, int, int, float]]],
        alpha: T.Optional[float] = None,
    ) -> "CeilingFunction":
        """
        :param terms: :class:`CosineTerm` instances or ``(amp, k1, k2[, phase])``
            tuples.
        :param alpha: optional lower bound, at most ``c0 - sum |amp|``.
            Defaults to that certified value.
        """
        terms = tuple(
            term if isinstance(term, CosineTerm) else CosineTerm(*term)
            for term in terms
        )
        c0 = float(c0)
        if alpha is None:
            alpha = c0 - sum(abs(term.amp) for term in terms)
        return cls(kind=CeilingKindEnum.trig, c0=c0, terms=terms, alpha=float(alpha))

    @property
    def certified_bound(self) -> float:
        return self.c0 - sum(abs(term.amp) for term in self.terms)

    @property
    def is_constant(self) -> bool:
        return not self.terms

    def eval(self, x: "TorusPoint") -> float:
        value = self.c0
        for term in self.terms:
            value += term.amp * math.cos(term.argument(x.x1, x.x2))
        return value

    def eval_array(self, x1: np.ndarray, x2: np.ndarray) -> np.ndarray:
        """
        Vectorized :meth:`eval` over coordinate arrays of equal shape.
        """
        x1 = np.asarray(x1, dtype=float)
        x2 = np.asarray(x2, dtype=float)
        value = np.full(np.broadcast(x1, x2).shape, self.c0)
        for term in self.terms:
            value += term.amp * np.cos(
                TWO_PI * (term.k1 * x1 + term.k2 * x2) + term.phase
            )
        return value

    def gradient(self, x: "TorusPoint") -> np.ndarray:
        g1 = 0.0
        g2 = 0.0
        for term in self.terms:
            factor = -TWO_PI * term.amp * math.sin(term.argument(x.x1, x.x2))
            g1 += factor * term.k1
            g2 += factor * term.k2
        return np.array([g1, g2])

    def birkhoff_sum(
        self,
        m: "HyperbolicToralMap",
        x: "TorusPoint",
        n: int,
    ) -> float:
        """
        ``sum_{i=0}^{n-1} c(f^i x)``.
        """
        if n < 0:
            raise ValueError(f"birkhoff_sum needs n >= 0, got {n}")
        total = 0.0
        for _ in range(n):
            total += self.eval(x)
            x = m.apply(x)
        return total

    def signed_birkhoff_sum(
        self,
        m: "HyperbolicToralMap",
        x: "TorusPoint",
        n: int,
    ) -> float:
        """
        :meth:`birkhoff_sum` for ``n >= 0`` and ``-sum_{i=1}^{|n|} c(f^-i x)``
        for ``n < 0``, so that ``S(n + k, x) = S(n, x) + S(k, f^n x)`` for all
        integers.
        """
        if n >= 0:
            return self.birkhoff_sum(m, x, n)
        total = 0.0
        for _ in range(-n):
            x = m.apply_inverse(x)
            total -= self.eval(x)
        return total

    def compose_affine(
        self,
        matrix: "IntMatrix2",
        shift: T_VEC2,
    ) -> "CeilingFunction":
        """
        The ceiling ``y -> c(M y + u)``. Wave vectors become ``M^T k`` and
        phases gain ``2 pi k.u``; the bound ``alpha`` is unchanged.
        """
        if self.is_constant:
            return self
        u1, u2 = shift
        terms = list()
        for term in self.terms:
            phase = math.fmod(term.phase + TWO_PI * (term.k1 * u1 + term.k2 * u2), TWO_PI)
            terms.append(
                CosineTerm(
                    amp=term.amp,
                    k1=matrix.a * term.k1 + matrix.c * term.k2,
                    k2=matrix.b * term.k1 + matrix.d * term.k2,
                    phase=phase,
                )
            )
        return CeilingFunction(
            kind=self.kind,
            c0=self.c0,
            terms=tuple(terms),
            alpha=self.alpha,
        )

    def to_text(self) -> T.Dict[str, str]:
        """
        Key/value form used in run configs.
        """
        data = {"ceiling": self.kind.value, "c0": repr(self.c0)}
        if self.terms:
            data["terms"] = ", ".join(term.to_text() for term in self.terms)
        if self.alpha != self.certified_bound:
            data["alpha"] = repr(self.alpha)
        return data


def birkhoff_sum(
    c: CeilingFunction,
    m: "HyperbolicToralMap",
    x: "TorusPoint",
    n: int,
) -> float:
    return c.birkhoff_sum(m, x, n)
