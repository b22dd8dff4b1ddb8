"""The trinomial condition for hyperelliptic models and its small cases."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

__all__ = ['A1Case', 'TrinomialResult', 'hyperelliptic_lower_bound', 'small_n_lower_bound', 'trinomial_condition']


class A1Case(str, Enum):
    """Which branch of the chi_pi in {0, -1, -2} argument settles a hyperelliptic model."""

    PURE = 'pure'
    P_ONE = 'p=1'
    P_TWO_TRINOMIAL = 'p=2, n>=2'
    P_TWO_SMALL_N = 'p=2, n<=1'


@dataclass(frozen=True)
class TrinomialResult:
    value: int
    satisfied: bool
    a1_case: A1Case | None


def trinomial_condition(n: int, p: int) -> TrinomialResult:
    """
    Evaluate P(n, p) = n² - n - 3p + 4, the lower bound for dim H - dim V of a non-pure hyperelliptic model.

    The condition is satisfied for p = 0 (the pure case), for p = 1 and every n,
    and for p >= 2 exactly when n >= (1 + sqrt(12p - 15)) / 2.
    The last test is done in integers: 2n - 1 >= 0 and (2n - 1)² >= 12p - 15.

    :param n:   Number of even generators.
    :param p:   -chi_pi.
    """
    if n < 0 or p < 0:
        raise ValueError(f"trinomial_condition: 'n and p must be non-negative, got n={n}, p={p}!'")

    value = n * n - n - 3 * p + 4

    match p:
        case 0:
            return TrinomialResult(value, True, A1Case.PURE)
        case 1:
            return TrinomialResult(value, True, A1Case.P_ONE)

    satisfied = 2 * n - 1 >= 0 and (2 * n - 1) ** 2 >= 12 * p - 15

    if p == 2:
        return TrinomialResult(value, satisfied, A1Case.P_TWO_TRINOMIAL if n >= 2 else A1Case.P_TWO_SMALL_N)

    return TrinomialResult(value, satisfied, None)


def hyperelliptic_lower_bound(n: int, p: int) -> int:
    """2 * (n(n+1)/2 - p + 2): dim H of an elliptic, non-pure hyperelliptic model is at least this."""
    return 2 * (n * (n + 1) // 2 - p + 2)


def small_n_lower_bound(n: int) -> int:
    """2 + 2n: dim H when p = 2 and n <= 1, from the unit and the classes of the even generators."""
    return 2 + 2 * n
