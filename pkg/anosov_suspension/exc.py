# -*- coding: utf-8 -*-

"""
Exception hierarchy.

Every error raised on purpose by this library derives from
:class:`AnosovSuspensionError`, so callers can catch one class.
"""


class AnosovSuspensionError(Exception):
    pass


class NotUnimodular(AnosovSuspensionError, ValueError):
    pass


class NotHyperbolic(AnosovSuspensionError, ValueError):
    pass


class InvalidCeiling(AnosovSuspensionError, ValueError):
    pass


class NotDifferentiable(AnosovSuspensionError):
    pass


class NotInvertible(AnosovSuspensionError):
    pass


class ConjugacyMismatch(AnosovSuspensionError):
    """
    Raised when ``g∘h = h∘f`` fails on the verification grid.
    """

    def __init__(self, residual: float, tolerance: float):
        self.residual = residual
        self.tolerance = tolerance
        super().__init__(
            f"conjugacy identity residual {residual:.3e} exceeds tolerance {tolerance:.1e}"
        )


class NumericFailure(AnosovSuspensionError, ArithmeticError):
    pass


class QuadratureFailure(NumericFailure):
    pass


class IterationCapExceeded(NumericFailure):
    pass


class MonotonicityViolation(AnosovSuspensionError):
    """
    Raised when the fiber reparametrization is not strictly increasing,
    i.e. ``min(bump + 1) <= 0`` on the fiber over ``(x1, x2)``.
    """

    def __init__(self, x1: float, x2: float, margin: float, shape: str):
        self.x1 = x1
        self.x2 = x2
        self.margin = margin
        self.shape = shape
        super().__init__(
            f"fiber over ({x1!r}, {x2!r}) is not monotone with shape {shape!r}: "
            f"min(bump + 1) = {margin:.6g}"
        )


class OutOfDomain(AnosovSuspensionError, ValueError):
    pass


class OnSection(AnosovSuspensionError, ValueError):
    pass


class StepTooLarge(AnosovSuspensionError, ValueError):
    pass


class ConfigError(AnosovSuspensionError, ValueError):
    """
    Invalid run configuration. ``key`` is the offending ``section.key``.
    """

    def __init__(self, key: str, message: str):
        self.key = key
        self.message = message
        super().__init__(f"{key}: {message}")
