"""Degree sequences admissible under the Friedlander-Halperin constraints."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from importlib.resources import files
from typing import Iterable, Iterator, Sequence

from loguru import logger

from .exceptions import MalformedReferenceError
from .types import Pairing

__all__ = [
    'AuditResult', 'DegreeSequence',
    'audit_against_reference', 'enumerate_fh', 'fh_violations', 'format_degrees',
    'restricted_partitions', 'shipped_reference_rows'
]


def format_degrees(degrees: Iterable[int]) -> str:
    return f"({','.join(str(d) for d in degrees)})"


@dataclass(frozen=True, order=True)
class DegreeSequence:
    """
    Degrees of the even and odd generators of a (hypothetical) elliptic model.

    :param even:    Ascending even degrees |x_1| <= ... <= |x_n|.
    :param odd:     Ascending odd degrees |y_1| <= ... <= |y_{n+p}|.
    :param fd:      Target formal dimension.
    """

    even: tuple[int, ...]
    odd: tuple[int, ...]
    fd: int = field(default=0)

    def __post_init__(self) -> None:
        object.__setattr__(self, 'even', tuple(self.even))
        object.__setattr__(self, 'odd', tuple(self.odd))

    @property
    def n(self) -> int:
        return len(self.even)

    @property
    def p(self) -> int:
        return len(self.odd) - len(self.even)

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
        return self.n, self.even, self.odd

    def format_row(self) -> str:
        """The ``fd=4: (2) | (5)`` row format of enumeration output and reference tables."""
        return f"fd={self.fd}: {format_degrees(self.even)} | {format_degrees(self.odd)}"

    def __str__(self) -> str:
        return self.format_row()


def fh_violations(
    even: Sequence[int], odd: Sequence[int], fd: int, pairing: Pairing = Pairing.TOP
) -> list[str]:
    """
    List every Friedlander-Halperin constraint the degree multisets violate.

    Checked: parities and lower bounds of the parts, p >= 0,
    sum|y| - sum(|x| - 1) = fd, sum|x| <= fd, sum|y| <= 2fd - 1 and the pairing |y_i| >= 2|x_i| - 1.

    :param even:        Even generator degrees, in any order.
    :param odd:         Odd generator degrees, in any order.
    :param fd:          Formal dimension to test against.
    :param pairing:     How the even and odd degrees are matched. See :py:class:`Pairing`.

    :returns:           Human-readable descriptions, empty when everything holds.
    """
    xs, ys = sorted(even), sorted(odd)
    violations = list[str]()

    if bad := [x for x in xs if x < 2 or x % 2]:
        violations.append(f"even degrees must be even and >= 2, got {format_degrees(bad)}")

    if bad := [y for y in ys if y < 3 or y % 2 == 0]:
        violations.append(f"odd degrees must be odd and >= 3, got {format_degrees(bad)}")

    if len(ys) < len(xs):
        violations.append(f"p = {len(ys) - len(xs)} is negative")

    if (formula := sum(ys) - sum(x - 1 for x in xs)) != fd:
        violations.append(f"sum|y| - sum(|x| - 1) = {formula} differs from fd = {fd}")

    if sum(xs) > fd:
        violations.append(f"sum|x| = {sum(xs)} exceeds fd = {fd}")

    if sum(ys) > 2 * fd - 1:
        violations.append(f"sum|y| = {sum(ys)} exceeds 2fd - 1 = {2 * fd - 1}")

    if len(ys) >= len(xs):
        partners = ys[len(ys) - len(xs):] if pairing is Pairing.TOP else ys[:len(xs)]

        for x, y in zip(xs, partners):
            if y < 2 * x - 1:
                violations.append(f"|y| = {y} is smaller than 2|x| - 1 = {2 * x - 1} ({pairing.value} pairing)")

    return violations


def restricted_partitions(total: int, parts: Sequence[int], _start: int = 0) -> Iterator[tuple[int, ...]]:
    """
    Enumerate the partitions of `total` into the allowed parts, each one as an ascending tuple.

    :param total:   Number to partition. 0 yields the empty partition.
    :param parts:   Allowed parts, ascending and without duplicates.
    """
    if total == 0:
        yield ()
        return

    for i in range(_start, len(parts)):
        part = parts[i]

        if part > total:
            break

        for rest in restricted_partitions(total - part, parts, i):
            yield (part,) + rest


@cache
def enumerate_fh(fd: int, pairing: Pairing = Pairing.TOP) -> tuple[DegreeSequence, ...]:
    """
    All degree sequences satisfying the Friedlander-Halperin constraints for a formal dimension.

    For each multiset of even parts (each <= fd, summing to at most fd) the odd parts must sum to
    fd + sum(|x| - 1). They are drawn from the odd numbers in [3, 2fd - 1].
    Every candidate is re-checked with :py:func:`fh_violations`.

    :param fd:          Formal dimension, at least 2.
    :param pairing:     Pairing used for the |y_i| >= 2|x_i| - 1 constraint.

    :returns:           Sequences ordered by n, then even degrees, then odd degrees.
    """
    if fd < 2:
        raise ValueError(f"enumerate_fh: 'The formal dimension must be at least 2, not {fd}!'")

    even_parts = tuple(range(2, fd + 1, 2))
    odd_parts = tuple(range(3, 2 * fd, 2))
    rows = list[DegreeSequence]()

    for even_total in range(0, fd + 1, 2):
        for even in restricted_partitions(even_total, even_parts):
            odd_total = fd + even_total - len(even)

            if odd_total > 2 * fd - 1:
                continue

            for odd in restricted_partitions(odd_total, odd_parts):
                if len(odd) < len(even):
                    continue

                if not fh_violations(even, odd, fd, pairing):
                    rows.append(DegreeSequence(even, odd, fd))

    rows.sort(key=lambda r: r.sort_key)

    logger.debug(f"enumerate_fh: {len(rows)} admissible sequences for fd={fd} ({pairing.value} pairing)")

    return tuple(rows)


def _check_reference_row(row: DegreeSequence, fd: int) -> None:
    text = row.format_row()

    if row.fd != fd:
        raise MalformedReferenceError(text, f"it belongs to fd={row.fd}, not fd={fd}")
    if list(row.even) != sorted(row.even) or list(row.odd) != sorted(row.odd):
        raise MalformedReferenceError(text, "degrees must be listed in ascending order")
    if any(x < 2 or x % 2 for x in row.even):
        raise MalformedReferenceError(text, "even degrees must be even and >= 2")
    if any(y < 3 or y % 2 == 0 for y in row.odd):
        raise MalformedReferenceError(text, "odd degrees must be odd and >= 3")


@dataclass(frozen=True)
class AuditResult:
    """Set differences between the enumeration and a reference table."""

    fd: int
    missing: tuple[DegreeSequence, ...]
    extra: tuple[DegreeSequence, ...]

    @property
    def ok(self) -> bool:
        return not self.missing


def audit_against_reference(
    fd: int, reference: Iterable[DegreeSequence], pairing: Pairing = Pairing.TOP
) -> AuditResult:
    """
    Compare the enumeration for `fd` with reference rows.

    :returns:   Rows of the reference the enumeration lacks (``missing``) and enumerated rows
                the reference lacks (``extra``), both in canonical order.
    """
    rows = list(reference)

    for row in rows:
        _check_reference_row(row, fd)

    enumerated = set(enumerate_fh(fd, pairing))
    expected = set(rows)

    result = AuditResult(
        fd,
        tuple(sorted(expected - enumerated, key=lambda r: r.sort_key)),
        tuple(sorted(enumerated - expected, key=lambda r: r.sort_key)),
    )

    if result.missing:
        logger.warning(f"Audit for fd={fd}: {len(result.missing)} reference rows are not enumerated!")

    return result


def shipped_reference_rows(fd: int) -> list[DegreeSequence]:
    """Load the shipped reference table for `fd` (2 to 10)."""
    from .model_io import read_reference

    if not 2 <= fd <= 10:
        raise ValueError(f"shipped_reference_rows: 'There is no reference table for fd={fd}!'")

    text = (files('sullivan') / 'data' / 'reference' / f'fd{fd}.tbl').read_text(encoding='utf-8')

    return read_reference(text)
