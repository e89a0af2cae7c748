# -*- coding: utf-8 -*-

import enum

# Torus
TORUS_GRID_SIZE = 64
"""Side of the dyadic verification grid for base conjugacies."""
CONJUGACY_GRID_TOLERANCE = 1e-10
SAMPLE_LATTICE_BITS = 48
"""
Random base points are drawn on the lattice ``2^-48 Z^2``. Integer maps with
small entries act on it without rounding, so orbits computed along different
paths agree bit for bit.
"""

# Suspension
SEAM_TOLERANCE = 1e-12
"""Heights this close to the ceiling are pushed through the identification."""

# Smoothing
DEFAULT_PLATEAU_DELTA = 0.1
N_FIBER_NODES = 1024
QUADRATURE_TOLERANCE = 1e-11
QUADRATURE_MAX_DEPTH = 30
FIBER_KEY_QUANTUM = 1e-12

# Differentiability probes
DEFAULT_FD_STEP = 1e-5
DEFAULT_CHART_STEP = 1e-4
RICHARDSON_ORDER = 2
PROBE_DYADIC_EXPONENTS = tuple(range(4, 21))

# Verification defaults
DEFAULT_SEED = 20240917
DEFAULT_SAMPLES = 1000
DEFAULT_EQUIVALENCE_TOLERANCE = 1e-9
DEFAULT_SMOOTH_TOLERANCE = 1e-4
DEFAULT_JACOBIAN_TOLERANCE = 1e-6
PIECEWISE_SEAM_THRESHOLD = 1e-2
"""Seam mismatch above which the fiber-scaling map counts as non-differentiable."""
DEFAULT_T_RANGE = 20.0


class ExitCode(enum.IntEnum):
    success = 0
    config_error = 2
    numeric_failure = 3
    verification_failure = 4
    monotonicity_violation = 5


class BumpShapeEnum(str, enum.Enum):
    exponential = "exponential"
    plateau = "plateau"


class ConjugacyKindEnum(str, enum.Enum):
    identity = "identity"
    linear = "linear"
    affine = "affine"
    callable = "callable"


class OutputFormatEnum(str, enum.Enum):
    csv = "csv"
    ndjson = "ndjson"


class CeilingKindEnum(str, enum.Enum):
    constant = "constant"
    trig = "trig"


# Output columns
TRAJECTORY_COLUMNS = ["t", "x1", "x2", "height", "n"]
EQUIVALENCE_COLUMNS = [
    "sample",
    "x1",
    "x2",
    "s",
    "t",
    "n_src",
    "n_tgt",
    "tau",
    "slope",
    "residual",
]
FIBER_COLUMNS = ["fiber", "x1", "x2", "t", "phi", "dphi"]
