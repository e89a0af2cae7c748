# -*- coding: utf-8 -*-

from .quadrature import adaptive_simpson
from .quadrature import cumulative_simpson
from .bump import BumpSpec
from .bump import bump_eval
from .bump import bump_integral
from .reparam import FiberReparam
from .reparam import SmoothedEquivalence
from .reparam import fiber_reparam_build
from .reparam import fiber_reparam_eval
from .reparam import smooth_h_hat
from .reparam import smooth_time_change
