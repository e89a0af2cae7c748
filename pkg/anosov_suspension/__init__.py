# -*- coding: utf-8 -*-

"""
Suspension flows over hyperbolic toral automorphisms, the explicit orbit
equivalence between two such suspensions, and its smooth reparametrization.
"""

from ._version import __version__

__short_description__ = (
    "Suspension flows over hyperbolic toral automorphisms, their orbit "
    "equivalences, time changes and smooth fiber reparametrizations."
)
__license__ = "MIT"
__author__ = "Sanhe Hu"
__author_email__ = "husanhe@gmail.com"
__maintainer__ = "Sanhe Hu"
__maintainer_email__ = "husanhe@email.com"
__github_username__ = "MacHu-GWU"
