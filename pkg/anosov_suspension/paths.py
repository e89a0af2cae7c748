# -*- coding: utf-8 -*-

"""
Filesystem locations used by the test runner and the bundled demo configs.
"""

from pathlib import Path

dir_here = Path(__file__).absolute().parent
PACKAGE_NAME = dir_here.name

dir_project_root = dir_here.parent

# coverage report of ``run_cov_test``
dir_htmlcov = dir_project_root / "htmlcov"

# demo run configurations shipped with the package
dir_demo_configs = dir_here / "tests" / "configs"
path_demo_config = dir_demo_configs / "demo.ini"
path_constant_config = dir_demo_configs / "constant.ini"
path_conjugate_config = dir_demo_configs / "conjugate.ini"
path_adversarial_config = dir_demo_configs / "adversarial.ini"
