# -*- coding: utf-8 -*-

from .helper import run_cov_test
from .helper import read_jsonl
from .demo import BaseDemoTest
