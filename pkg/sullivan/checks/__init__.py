"""
Theorem-specific sufficient conditions for dim V <= dim H.
"""

# flake8: noqa

from . import base, bounds, symplectic, toral, tower, trinomial, witness
from .base import *
from .bounds import *
from .symplectic import *
from .toral import *
from .tower import *
from .trinomial import *
from .witness import *
