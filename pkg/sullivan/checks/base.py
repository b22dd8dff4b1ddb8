from __future__ import annotations

from dataclasses import dataclass

from ..types import TheoremStatus

__all__ = ['TheoremResult']


@dataclass(frozen=True)
class TheoremResult:
    """
    Verdict of one theorem predicate on a model.

    :param tag:         Short theorem tag, one of :py:data:`sullivan.types.THEOREM_TAGS`.
    :param status:      PASS when the hypothesis is met, FAIL when it is not,
                        UNKNOWN when it can't be decided from the model and N/A outside the theorem's scope.
    :param detail:      One line explaining the verdict.
    """

    tag: str
    status: TheoremStatus
    detail: str = ''

    def __str__(self) -> str:
        return f"{self.tag}: {self.status.value}" + (f" ({self.detail})" if self.detail else '')
