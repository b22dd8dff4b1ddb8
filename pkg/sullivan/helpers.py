"""Helper functions used by the command line and the corpus runner."""
from __future__ import annotations

import math
import multiprocessing as mp
import sys

from loguru import logger

__all__ = [
    'configure_logging',
    'default_jobs',
    'verbosity_level',
]


def default_jobs() -> int:
    """Return the amount of worker processes to use when running models in parallel."""
    return math.ceil(mp.cpu_count() * 0.4)


def verbosity_level(verbose: int) -> str:
    """Map a count of ``-v`` flags to a loguru level name."""
    match verbose:
        case 0:
            return 'WARNING'
        case 1:
            return 'INFO'
        case _:
            return 'DEBUG'


def configure_logging(verbose: int = 0) -> int:
    """
    Replace every loguru sink with a single stderr sink.

    The library itself never calls this.

    :returns:   The id of the new sink.
    """
    logger.remove()
    return logger.add(sys.stderr, level=verbosity_level(verbose), format="<level>{level: <8}</level> {message}")
