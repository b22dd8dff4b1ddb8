"""
Exact linear algebra over the rationals.

Everything the cohomology code needs (rank, kernel, span membership, solving) runs on
:py:class:`FractionFreeEchelon`, a sparse integer echelon basis built one row at a time.
:py:func:`dense_rank` is a naive dense rational elimination kept as an independent oracle.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from .algebra import Rational

__all__ = [
    'TARGET', 'FractionFreeEchelon', 'SparseVector', 'Tag',
    'dense_rank', 'fraction_free_rank', 'integral', 'kernel_basis', 'solve_in_span'
]

SparseVector = dict[int, int]
Tag = dict[int, Fraction]

# Tag key reserved for the vector being solved for.
TARGET = -1


def integral(vector: Mapping[int, Rational]) -> tuple[SparseVector, int]:
    """
    Clear denominators.

    :returns:   The integer vector and the positive factor it was multiplied by.
    """
    values = {k: Fraction(c) for k, c in vector.items() if c}
    scale = lcm(*(c.denominator for c in values.values())) if values else 1

    return {k: int(c * scale) for k, c in values.items()}, scale


def _combine_tags(a: int, tag: Tag, b: int, other: Tag) -> Tag:
    out = {k: a * c for k, c in tag.items()}

    for k, c in other.items():
        value = out.get(k, Fraction(0)) - b * c

        if value:
            out[k] = value
        else:
            out.pop(k, None)

    return out


class FractionFreeEchelon:
    """
    Incremental echelon basis of integer row vectors.

    Rows are stored sparsely and keyed by their leading (smallest) column.
    A new vector is reduced against the stored rows with the fraction-free step
    ``v <- (p/g)*v - (a/g)*row`` (``p`` the pivot, ``a`` the entry of ``v``, ``g = gcd(p, a)``)
    and stored rows are kept primitive by removing their content.

    When ``track`` is set every vector carries a tag: a sparse rational linear combination
    of whatever the caller says the vector stands for. The reduction keeps
    ``vector == sum(tag[key] * original[key])`` true, so a vector that reduces to zero
    hands back a linear dependency.

    :param track:   Whether to keep tags.
    """

    track: bool

    def __init__(self, track: bool = False) -> None:
        self.track = track
        self._rows = dict[int, tuple[SparseVector, Tag]]()

    @property
    def rank(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def reduce(
        self, vector: Mapping[int, Rational], tag: Mapping[int, Rational] | None = None
    ) -> tuple[SparseVector, Tag]:
        """
        Reduce a vector against the basis until its leading column is not a pivot (or it vanishes).

        Rational input is scaled to integers first and the tag is scaled with it.
        """
        v, scale = integral(vector)
        t: Tag = {k: Fraction(c) * scale for k, c in (tag or {}).items() if c} if self.track else {}

        while v:
            lead = min(v)
            stored = self._rows.get(lead)

            if stored is None:
                break

            row, row_tag = stored
            p, a = row[lead], v[lead]
            g = gcd(p, a)
            alpha, beta = p // g, a // g

            out = {k: alpha * c for k, c in v.items()} if alpha != 1 else dict(v)

            for k, c in row.items():
                value = out.get(k, 0) - beta * c

                if value:
                    out[k] = value
                else:
                    out.pop(k, None)

            v = out

            if self.track:
                t = _combine_tags(alpha, t, beta, row_tag)

        return v, t

    def add(self, vector: Mapping[int, Rational], tag: Mapping[int, Rational] | None = None) -> Tag | None:
        """
        Insert a vector.

        :returns:   None if the vector was independent of the basis and got stored,
                    otherwise the tag of its zero remainder (a linear dependency).
        """
        v, t = self.reduce(vector, tag)

        if not v:
            return t

        content = 0

        for c in v.values():
            content = gcd(content, c)

        if v[min(v)] < 0:
            content = -content

        if content != 1:
            v = {k: c // content for k, c in v.items()}
            t = {k: c / content for k, c in t.items()}

        self._rows[min(v)] = (v, t)

        return None

    def __contains__(self, vector: Mapping[int, Rational]) -> bool:
        v, _ = self.reduce(vector)
        return not v

    def extend(self, vectors: Iterable[Mapping[int, Rational]]) -> int:
        """Insert several untagged vectors and return how many were independent."""
        return sum(1 for vec in vectors if self.add(vec) is None)


def fraction_free_rank(rows: Iterable[Mapping[int, Rational]]) -> int:
    """Rank of a set of sparse rational vectors."""
    echelon = FractionFreeEchelon()
    echelon.extend(rows)
    return echelon.rank


def kernel_basis(columns: Sequence[Mapping[int, Rational]]) -> list[dict[int, Fraction]]:
    """
    Basis of the relations ``sum(x[j] * columns[j]) == 0``.

    Columns are fed in order and every column depending on the earlier ones yields one kernel vector,
    so the j-th vector has its last nonzero entry at the j-th dependent column. That entry is scaled to 1.
    """
    echelon = FractionFreeEchelon(track=True)
    basis = list[dict[int, Fraction]]()

    for j, column in enumerate(columns):
        relation = echelon.add(column, {j: 1})

        if relation is None:
            continue

        last = relation[max(relation)]
        basis.append({k: c / last for k, c in sorted(relation.items())})

    return basis


def solve_in_span(
    columns: Sequence[Mapping[int, Rational]], target: Mapping[int, Rational]
) -> dict[int, Fraction] | None:
    """
    Find x with ``sum(x[j] * columns[j]) == target``.

    :returns:   A sparse solution or None if the target is not in the span.
    """
    echelon = FractionFreeEchelon(track=True)

    for j, column in enumerate(columns):
        echelon.add(column, {j: 1})

    remainder, tag = echelon.reduce(target, {TARGET: 1})

    if remainder:
        return None

    pivot = tag[TARGET]

    return {k: -c / pivot for k, c in tag.items() if k != TARGET}


def dense_rank(rows: Sequence[Sequence[Rational]]) -> int:
    """Rank by plain Gaussian elimination over dense rational rows."""
    m = [[Fraction(c) for c in row] for row in rows]

    if not m:
        return 0

    n_rows, n_cols = len(m), len(m[0])
    piv_r = 0

    for piv_c in range(n_cols):
        for i_row in range(piv_r, n_rows):
            if m[i_row][piv_c] != 0:
                break
        else:
            continue

        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]

        fp = m[piv_r][piv_c]

        for r in range(piv_r + 1, n_rows):
            fr = m[r][piv_c]

            if fr == 0:
                continue

            frp = fr / fp

            for c in range(piv_c, n_cols):
                m[r][c] -= m[piv_r][c] * frp

        piv_r += 1

        if piv_r == n_rows:
            break

    return piv_r
