# -*- coding: utf-8 -*-

from .fd import richardson_extrapolate
from .fd import local_offset
from .fd import fd_jacobian
from .jacobian import JacobianReport
from .jacobian import analytic_jacobian_piecewise
from .jacobian import probe_piecewise
from .jacobian import probe_smoothed
from .chart import SectionChart
from .chart import SectionCheck
from .chart import cross_section_check
from .chart import smoothed_section_check
from .chart import piecewise_section_check
from .point import PointProbeResult
from .point import point_differentiability_probe
from .report import ProbeBatch
from .report import sample_interior_points
from .report import sample_section_points
from .report import run_probe_batch
