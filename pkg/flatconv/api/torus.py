"""
This is the public API for flat autoconvolutions on the circle.

This is the single ``api`` module that code outside of the
``flatconv.apps.torus.*`` package should import from. It re-exports the public
functions from all api.py modules of all torus apps.
"""
# These wildcard imports are okay because these api modules declare __all__.
# pylint: disable=wildcard-import
from ..apps.torus.concentration.api import *
from ..apps.torus.constructions.api import *
from ..apps.torus.densities.api import *
from ..apps.torus.experiments.api import *
from ..apps.torus.grid_measures.api import *
from ..apps.torus.metrics.api import *
