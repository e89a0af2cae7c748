# -*- coding: utf-8 -*-

"""
Shared demo systems for the test suites.

- ``cat``: the cat map ``[[2, 1], [1, 1]]`` under a trig ceiling,
  ``alpha = 0.7``.
- ``pair``: ``cat`` against its ``B``-conjugate ``[[3, -1], [1, 0]]``,
  ``B = [[1, 1], [0, 1]]``, under an unrelated trig ceiling, ``alpha = 1.1``.
- ``constant_pair``: the cat map under ``c = 1`` against itself under ``c = 2``.
- ``conjugate_pair``: ``cat`` against ``c_f∘h^-1`` on the ``B``-conjugate; the
  suspensions are conjugate, so ``tau(t) = t``.
- ``adversarial_pair``: ``c_f = 1`` against ``c_g = 0.4``; only the plateau
  bump keeps the fiber reparametrization monotone.
"""

import typing as T

import numpy as np

from ..utils import new_rng
from ..torus import HyperbolicToralMap, BaseConjugacy, lattice_point
from ..ceiling import CeilingFunction
from ..suspension import SuspensionPoint, SuspensionSystem
from ..equivalence import EquivalencePair
from ..smoothing.reparam import SmoothedEquivalence

SEED = 20240917


def demo_source_ceiling() -> CeilingFunction:
    return CeilingFunction.trig(1.0, [(0.2, 1, 0), (0.1, 0, 1, 0.3)])


def demo_target_ceiling() -> CeilingFunction:
    return CeilingFunction.trig(1.5, [(0.3, 1, 1), (0.1, 0, 1)])


def demo_conjugacy() -> BaseConjugacy:
    return BaseConjugacy.linear([[1, 1], [0, 1]])


def random_points(
    system: SuspensionSystem,
    rng: np.random.Generator,
    n: int,
) -> T.List[SuspensionPoint]:
    """
    Base points uniform on the sample lattice, heights uniform in the fiber.
    """
    table = rng.uniform(0.0, 1.0, size=(n, 3))
    points = list()
    for x1, x2, frac in table:
        x = lattice_point(x1, x2)
        points.append(SuspensionPoint(x, frac * system.roof(x)))
    return points


class BaseDemoTest:
    cat_map: HyperbolicToralMap = None
    cat: SuspensionSystem = None
    h: BaseConjugacy = None
    pair: EquivalencePair = None
    constant_pair: EquivalencePair = None
    conjugate_pair: EquivalencePair = None
    adversarial_pair: EquivalencePair = None
    smoothed: SmoothedEquivalence = None
    rng: np.random.Generator = None

    @classmethod
    def setup_class(cls):
        cls.cat_map = HyperbolicToralMap.cat_map()
        cls.cat = SuspensionSystem(map=cls.cat_map, ceiling=demo_source_ceiling())
        cls.h = demo_conjugacy()
        cls.pair = EquivalencePair.from_conjugacy(
            cls.cat, cls.h, target_ceiling=demo_target_ceiling()
        )
        cls.constant_pair = EquivalencePair(
            source=SuspensionSystem(map=cls.cat_map, ceiling=CeilingFunction.constant(1.0)),
            target=SuspensionSystem(map=cls.cat_map, ceiling=CeilingFunction.constant(2.0)),
            h=BaseConjugacy.identity(),
        )
        cls.conjugate_pair = EquivalencePair.from_conjugacy(cls.cat, cls.h)
        cls.adversarial_pair = EquivalencePair(
            source=SuspensionSystem(map=cls.cat_map, ceiling=CeilingFunction.constant(1.0)),
            target=SuspensionSystem(map=cls.cat_map, ceiling=CeilingFunction.constant(0.4)),
            h=BaseConjugacy.identity(),
        )
        cls.smoothed = SmoothedEquivalence(pair=cls.pair)
        cls.rng = new_rng(SEED)
        cls.setup_class_post_hook()

    @classmethod
    def setup_class_post_hook(cls):
        pass
