# -*- coding: utf-8 -*-

from . import exc
from .constants import ExitCode
from .constants import BumpShapeEnum
from .constants import ConjugacyKindEnum
from .constants import CeilingKindEnum
from .constants import OutputFormatEnum
from .torus import TorusPoint
from .torus import IntMatrix2
from .torus import EigenData
from .torus import HyperbolicToralMap
from .torus import BaseConjugacy
from .torus import apply_map
from .torus import apply_inverse
from .torus import eigen_data
from .torus import apply_conjugacy
from .torus import conjugacy_jacobian
from .torus import conjugacy_residual
from .torus import torus_distance
from .ceiling import CosineTerm
from .ceiling import CeilingFunction
from .ceiling import birkhoff_sum
from .suspension import SuspensionPoint
from .suspension import SuspensionSystem
from .suspension import normalize
from .suspension import step_count
from .suspension import flow
from .suspension import section_distance
from .equivalence import TimeChangeRecord
from .equivalence import EquivalencePair
from .equivalence import h_hat
from .equivalence import h_hat_inverse
from .equivalence import tau
from .equivalence import verify_equivalence
from .equivalence import n_consistency
from .equivalence import verification_frame
from .smoothing import api as smoothing
from .diff_probe import api as diff_probe
from .config import RunConfig
from .output import render
from .output import emit
from .cli import main
