# -*- coding: utf-8 -*-

"""
Sphinx configuration of the anosov_suspension documentation site.

Build with ``sphinx-build -b html docs/source docs/build/html``. The API
reference pages are generated by ``docfly`` on every build.
"""

from datetime import datetime

import docfly

import anosov_suspension as package

package_name = package.__name__
package_author = package.__author__
package_version = package.__version__

# -- General configuration ------------------------------------------------
extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx.ext.todo",
    "sphinx.ext.coverage",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinx_copybutton",
    "sphinx_design",
    "sphinx_search.extension",
    "docfly.directives",
]

source_suffix = ".rst"
master_doc = "index"

project = package_name
copyright = "{}, {}".format(datetime.utcnow().year, package_author)
author = package_author
version = package_version
release = package_version
language = "en"

exclude_patterns = []
pygments_style = "monokai"
todo_include_todos = True

# -- Options for HTML output ----------------------------------------------
html_theme = "furo"
html_theme_options = {
    "sidebar_hide_name": False,
}
pygments_dark_style = "monokai"
htmlhelp_basename = "{}doc".format(package_name)

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "scipy": ("https://docs.scipy.org/doc/scipy/", None),
    "polars": ("https://docs.pola.rs/api/python/stable/", None),
}
autodoc_member_order = "bysource"

# equations in docstrings use ``:math:``
mathjax_path = "https://cdn.jsdelivr.net/npm/mathjax@3/es5/tex-mml-chtml.js"

# -- API reference --------------------------------------------------------
docfly.ApiReferenceDoc(
    conf_file=__file__,
    package_name=package_name,
    ignored_package=[
        "%s.tests" % package_name,
        "%s.vendor" % package_name,
        "%s._version" % package_name,
        "%s.paths" % package_name,
        "%s.__main__" % package_name,
    ],
).fly()
