"""
    sullivan, exact computations on minimal Sullivan models of elliptic spaces.

    Build a model, compute its rational cohomology degree by degree,
    and test dim V <= dim H together with the sufficient conditions that imply it.
"""

# flake8: noqa

from . import (
    algebra, checks, cohomology, corpus, degrees, exceptions, helpers, hilali, linalg, model, model_io, templates,
    types
)
from .algebra import *
from .checks import *
from .cohomology import *
from .corpus import *
from .degrees import *
from .exceptions import *
from .helpers import *
from .hilali import *
from .linalg import *
from .model import *
from .model_io import *
from .types import *
