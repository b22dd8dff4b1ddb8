"""Bounds on the rational toral rank and the theorems phrased through it."""
from __future__ import annotations

from dataclasses import dataclass

from loguru import logger

from ..model import Classification, ModelInvariants, SullivanModel, classify_model, model_invariants
from ..types import TheoremStatus
from .base import TheoremResult
from .trinomial import trinomial_condition

__all__ = [
    'DCoverage', 'ToralRankInterval',
    'theorem_d', 'theorem_d_coverage', 'theorem_d_gap', 'theorem_e', 'toral_rank_interval'
]

MAX_CODIMENSION = 6


@dataclass(frozen=True)
class ToralRankInterval:
    """Closed interval known to contain rk₀."""

    lower: int
    upper: int
    exact: bool

    def __post_init__(self) -> None:
        if not 0 <= self.lower <= self.upper:
            raise ValueError(f"ToralRankInterval: 'Invalid interval [{self.lower}, {self.upper}]!'")
        if self.exact and self.lower != self.upper:
            raise ValueError("ToralRankInterval: 'An exact interval must be a single value!'")

    def __contains__(self, value: int) -> bool:
        return self.lower <= value <= self.upper

    def __str__(self) -> str:
        return f"[{self.lower}, {self.upper}]" + (' (exact)' if self.exact else '')


def toral_rank_interval(
    model: SullivanModel, classification: Classification | None = None, invariants: ModelInvariants | None = None
) -> ToralRankInterval:
    """
    Bound rk₀ from chi_pi alone.

    rk₀ <= -chi_pi = p always, with equality exactly for pure models.
    A non-pure model therefore has rk₀ in [0, p - 1].
    chi_pi > 0 rules out ellipticity; the interval is then the uninformative [0, 0], not marked exact.
    """
    classification = classification or classify_model(model)
    invariants = invariants or model_invariants(model)
    p = invariants.p

    if p < 0:
        logger.warning(f"{model.name} has chi_pi = {-p} > 0; it is not elliptic and no toral-rank bound applies")
        return ToralRankInterval(0, 0, False)

    if classification.pure:
        return ToralRankInterval(p, p, True)

    if p == 0:
        logger.warning(f"{model.name} is not pure but has chi_pi = 0; an elliptic model like that can't exist")

    return ToralRankInterval(0, max(p - 1, 0), False)


def theorem_e(model: SullivanModel, interval: ToralRankInterval | None = None) -> TheoremResult:
    """Three-valued fd - rk₀ <= 6 over the toral-rank interval."""
    interval = interval or toral_rank_interval(model)
    fd = model_invariants(model).fd_predicted
    detail = f"codim = {fd} - rk0, rk0 in {interval}"

    if fd - interval.lower <= MAX_CODIMENSION:
        return TheoremResult('E', TheoremStatus.PASS, detail)
    if fd - interval.upper > MAX_CODIMENSION:
        return TheoremResult('E', TheoremStatus.FAIL, detail)

    return TheoremResult('E', TheoremStatus.UNKNOWN, detail)


@dataclass(frozen=True)
class DCoverage:
    """
    The n (number of even generators) for which rk₀ = p - i settles the inequality.

    n is covered when n <= ``low_max`` (from dim H >= 2^rk₀) or n >= ``high_min`` (the trinomial).
    """

    p: int
    i: int
    low_max: int | None
    high_min: int

    def covers(self, n: int) -> bool:
        return (self.low_max is not None and n <= self.low_max) or n >= self.high_min


def theorem_d_coverage(p: int, i: int) -> DCoverage:
    """
    :param p:   -chi_pi.
    :param i:   rk₀ = p - i, with i in {0, 1, 2}. i = 0 is the pure case and covers every n.
    """
    if i not in (0, 1, 2) or p - i < 0:
        raise ValueError(f"theorem_d_coverage: 'rk0 = p - i needs i in (0, 1, 2) and p >= i, got p={p}, i={i}!'")

    if i == 0:
        return DCoverage(p, i, None, 0)

    low = (2 ** (p - i) - p) // 2
    high = 0

    while not trinomial_condition(high, p).satisfied:
        high += 1

    return DCoverage(p, i, low if low >= 0 else None, high)


def theorem_d_gap(p: int, i: int) -> tuple[int, ...]:
    """The n left uncovered by :py:func:`theorem_d_coverage`, which have to be settled model by model."""
    coverage = theorem_d_coverage(p, i)
    return tuple(n for n in range(coverage.high_min) if not coverage.covers(n))


def theorem_d(
    model: SullivanModel, classification: Classification | None = None, interval: ToralRankInterval | None = None
) -> TheoremResult:
    """
    rk₀ = p - i with i in {0, 1, 2} for a hyperelliptic model.

    Pure models have rk₀ = p. For the others rk₀ is only known to lie in [0, p - 1],
    which is inside {p - 2, p - 1} when p <= 2.
    """
    classification = classification or classify_model(model)

    if not classification.hyperelliptic:
        return TheoremResult('D', TheoremStatus.NOT_APPLICABLE, 'not hyperelliptic')

    interval = interval or toral_rank_interval(model, classification)
    p = model_invariants(model).p

    if classification.pure:
        return TheoremResult('D', TheoremStatus.PASS, f"pure, rk0 = p = {p}")

    if all(p - rk in (1, 2) for rk in range(interval.lower, interval.upper + 1)):
        return TheoremResult('D', TheoremStatus.PASS, f"rk0 in {interval}, so rk0 = p - 1 or p - 2")

    return TheoremResult('D', TheoremStatus.UNKNOWN, f"rk0 in {interval} is not determined")
