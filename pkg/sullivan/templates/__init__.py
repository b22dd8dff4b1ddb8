"""
Templates for generated text: model files, reference tables and reports.
"""

# flake8: noqa

from . import models, reports
from .models import *
from .reports import *
