# -*- coding: utf-8 -*-

"""
Helpers shared by the test modules.
"""

import typing as T
import json
from pathlib import Path

from ..paths import dir_project_root, dir_htmlcov
from ..vendor.pytest_cov_helper import run_cov_test as _run_cov_test


def run_cov_test(
    script: str,
    module: str,
    preview: bool = False,
    is_folder: bool = False,
):
    """
    Run ``script`` under pytest and report coverage of ``module``,
    e.g. ``"anosov_suspension.smoothing.bump"``.
    """
    _run_cov_test(
        script=script,
        module=module,
        root_dir=f"{dir_project_root}",
        htmlcov_dir=f"{dir_htmlcov}",
        preview=preview,
        is_folder=is_folder,
    )


def read_jsonl(path: Path) -> T.List[T.Dict[str, T.Any]]:
    """
    Load a JSON-lines report written by the command line.
    """
    return [json.loads(line) for line in path.read_text().splitlines() if line]
