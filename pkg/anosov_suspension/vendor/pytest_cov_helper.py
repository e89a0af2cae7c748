# -*- coding: utf-8 -*-

"""
Run one test script (or a test folder) with coverage of one module.

Usage, at the bottom of a test file::

    if __name__ == "__main__":
        from anosov_suspension.tests import run_cov_test

        run_cov_test(__file__, "anosov_suspension.torus", preview=False)
"""

import typing as T
import os
import sys
import subprocess
import contextlib
import webbrowser
from pathlib import Path

__version__ = "0.1.1"


@contextlib.contextmanager
def temp_cwd(path: T.Union[str, Path]):
    """
    Temporarily set the current working directory and restore it afterwards.
    """
    cwd = os.getcwd()
    os.chdir(f"{path}")
    try:
        yield path
    finally:
        os.chdir(cwd)


def run_cov_test(
    script: str,
    module: str,
    root_dir: str,
    htmlcov_dir: str,
    preview: bool = False,
    is_folder: bool = False,
):
    """
    :param script: the ``__file__`` of the calling test script.
    :param module: dotted name of the module to measure, e.g. ``pkg.utils``.
    :param root_dir: project root; pytest runs from there.
    :param htmlcov_dir: output folder of the html coverage report.
    :param preview: open the html report in a browser when done.
    :param is_folder: run every test in the folder of ``script`` instead of
        the script alone.
    """
    path_script = Path(script).absolute()
    target = path_script.parent if is_folder else path_script
    if is_folder:
        htmlcov_dir = f"{htmlcov_dir}/{module}"
    args = [
        sys.executable,
        "-m",
        "pytest",
        f"{target}",
        "-s",
        f"--rootdir={root_dir}",
        f"--cov={module}",
        "--cov-report",
        "term-missing",
        "--cov-report",
        f"html:{htmlcov_dir}",
    ]
    with temp_cwd(root_dir):
        subprocess.run(args)
    if preview:  # pragma: no cover
        webbrowser.open(f"file://{htmlcov_dir}/index.html")
