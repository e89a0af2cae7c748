# -*- coding: utf-8 -*-

"""
Build script of ``anosov_suspension``, required for ``pip install``.

Metadata comes from ``anosov_suspension/__init__.py``; runtime dependencies
from ``requirements.txt``; the ``tests`` and ``docs`` extras from
``requirements-test.txt`` and ``requirements-doc.txt``.
"""

import os
from setuptools import setup, find_packages

import anosov_suspension as package

PKG_NAME = package.__name__
VERSION = package.__version__
REPOSITORY_NAME = "{}-project".format(PKG_NAME)
URL = "https://github.com/{0}/{1}".format(package.__github_username__, REPOSITORY_NAME)
DOWNLOAD_URL = "https://pypi.python.org/pypi/{0}/{1}#downloads".format(PKG_NAME, VERSION)

CLASSIFIERS = [
    "Development Status :: 4 - Beta",
    "Intended Audience :: Science/Research",
    "Topic :: Scientific/Engineering :: Mathematics",
    "License :: OSI Approved :: MIT License",
    "Natural Language :: English",
    "Operating System :: Microsoft :: Windows",
    "Operating System :: MacOS",
    "Operating System :: Unix",
    "Programming Language :: Python",
    "Programming Language :: Python :: 3.8",
    "Programming Language :: Python :: 3.9",
    "Programming Language :: Python :: 3.10",
    "Programming Language :: Python :: 3.11",
    "Programming Language :: Python :: 3.12",
    "Programming Language :: Python :: 3 :: Only",
]


def read_requirements_file(path):
    """
    Read requirements.txt, ignore comments
    """
    requires = list()
    if not os.path.exists(path):
        print("'{}' not found!".format(path))
        return requires
    with open(path, "rb") as f:
        for line in f.read().decode("utf-8").split("\n"):
            line = line.strip()
            if "#" in line:
                line = line[: line.find("#")].strip()
            if line:
                requires.append(line)
    return requires


if __name__ == "__main__":
    with open("README.rst", "rb") as f:
        LONG_DESCRIPTION = f.read().decode("utf-8")

    setup(
        name=PKG_NAME,
        description=package.__short_description__,
        long_description=LONG_DESCRIPTION,
        version=VERSION,
        author=package.__author__,
        author_email=package.__author_email__,
        maintainer=package.__maintainer__,
        maintainer_email=package.__maintainer_email__,
        packages=[PKG_NAME] + ["%s.%s" % (PKG_NAME, i) for i in find_packages(PKG_NAME)],
        include_package_data=True,
        package_data={
            "": ["*.*"],
            PKG_NAME + ".tests": ["configs/*.ini"],
        },
        url=URL,
        download_url=DOWNLOAD_URL,
        classifiers=CLASSIFIERS,
        platforms=["Windows", "MacOS", "Unix"],
        license=package.__license__,
        python_requires=">=3.8",
        install_requires=read_requirements_file("requirements.txt"),
        extras_require={
            "tests": read_requirements_file("requirements-test.txt"),
            "docs": read_requirements_file("requirements-doc.txt"),
        },
        entry_points={
            "console_scripts": [
                "anosov-suspension = anosov_suspension.cli:main",
            ],
        },
    )
