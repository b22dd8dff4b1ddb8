"""Closed-form lower and upper bounds used alongside the theorem predicates."""
from __future__ import annotations

from .toral import ToralRankInterval

__all__ = [
    'codimension_auxiliary', 'codimension_dimension_bound', 'cosymplectic_lower_bound',
    'symplectic_lower_bound', 'toral_rank_cohomology_bound'
]


def toral_rank_cohomology_bound(interval: ToralRankInterval) -> int | None:
    """2^rk₀, claimed only when rk₀ is known exactly."""
    return 2 ** interval.lower if interval.exact else None


def codimension_dimension_bound(fd: int) -> int:
    """
    dim V <= floor((7fd - 2) / 6) for an elliptic model of formal dimension fd.

    Follows from n <= fd / 2 and n + p <= (2fd - 1) / 3.
    """
    return (7 * fd - 2) // 6


def codimension_auxiliary(n: int) -> int:
    """f(N) = 3 * 2^N - 224N + 64, non-negative (and increasing) for N >= 10."""
    return 3 * 2 ** n - 224 * n + 64


def symplectic_lower_bound(half_dim: int) -> int:
    """dim H >= 2m + 2 for a symplectic space of formal dimension 2m with chi_c = 0."""
    return 2 * half_dim + 2


def cosymplectic_lower_bound(n: int) -> int:
    """dim H >= 2n + 2 when every Betti number of a (2n+1)-dimensional space is non-zero."""
    return 2 * n + 2
