"""Generic types."""
from __future__ import annotations

__all__ = [
    'DEFAULT_LINE_WIDTH', 'EVIDENCE_NOTE', 'Evidence', 'FilePath',
    'Pairing', 'REPORT_FORMAT', 'ReportFormat', 'THEOREM_TAGS', 'TheoremStatus'
]

import os
from enum import Enum
from pathlib import Path
from typing import Literal, Union

FilePath = Union[str, os.PathLike[str], Path]

REPORT_FORMAT = Literal['human', 'machine']

# Order in which theorem verdicts are listed in every report.
THEOREM_TAGS = ('FH', 'Ha', 'A', 'A1', 'A-bound', 'B', 'C', 'C1', 'D', 'E', 'Hi', 'F', 'G')

DEFAULT_LINE_WIDTH = 100

EVIDENCE_NOTE = "heuristic: Betti numbers vanish between the predicted formal dimension and the window top"


class ReportFormat(str, Enum):
    """Output flavours understood by the report emitters."""

    HUMAN = 'human'
    MACHINE = 'machine'


class TheoremStatus(str, Enum):
    """Three-valued verdict of a theorem predicate, plus "does not apply"."""

    PASS = 'pass'
    FAIL = 'fail'
    UNKNOWN = 'unknown'
    NOT_APPLICABLE = 'n/a'

    @classmethod
    def of(cls, value: bool) -> TheoremStatus:
        return cls.PASS if value else cls.FAIL


class Evidence(str, Enum):
    """What the computed window says about ellipticity. Never a proof."""

    SUPPORTED = 'supported'
    CONTRADICTED = 'contradicted'
    UNCHECKED = 'unchecked'


class Pairing(str, Enum):
    """
    How even and odd degree lists are matched in the inequality |y| >= 2|x| - 1.

    TOP pairs the ascending even degrees with the n largest odd degrees (ascending).
    A matching exists if and only if this one works.
    ASCENDING pairs both lists from the bottom.
    """

    TOP = 'top'
    ASCENDING = 'ascending'
