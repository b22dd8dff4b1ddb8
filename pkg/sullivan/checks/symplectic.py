"""Hard-Lefschetz and cosymplectic Betti-profile checks on a computed cohomology report."""
from __future__ import annotations

from fractions import Fraction

from loguru import logger

from ..cohomology import (
    CohomologyClass, CohomologyReport, betti_table, cosymplectic_profile, cup_class, lefschetz_check, unit_class
)
from ..model import SullivanModel
from ..types import TheoremStatus
from .base import TheoremResult
from .bounds import cosymplectic_lower_bound, symplectic_lower_bound
from .tower import basis_classes

__all__ = ['find_lefschetz_class', 'lefschetz_candidates', 'theorem_f', 'theorem_g']


def lefschetz_candidates(report: CohomologyReport) -> list[CohomologyClass]:
    """Every basis class of H², then their sum when there are several."""
    candidates = basis_classes(report, 2)

    if len(candidates) > 1:
        candidates.append(CohomologyClass(2, tuple(Fraction(1) for _ in candidates)))

    return candidates


def find_lefschetz_class(model: SullivanModel, report: CohomologyReport) -> CohomologyClass | None:
    """
    Look for a degree-2 class w with w^m ≠ 0 for which every w^k: H^{m-k} -> H^{m+k} is an isomorphism.

    :param report:  A report computed with class representatives, with an even observed formal dimension 2m.
    """
    half_dim = report.fd_observed // 2

    for w in lefschetz_candidates(report):
        power = unit_class()

        for _ in range(half_dim):
            power = cup_class(model, report, power, w)

        if power.is_zero():
            continue

        if lefschetz_check(model, report, w, half_dim).passed:
            return w

    return None


def theorem_f(model: SullivanModel, report: CohomologyReport) -> TheoremResult:
    """
    Hard-Lefschetz behaviour of a degree-2 class, the cohomological shadow of a symplectic structure.

    Cheap Betti-number conditions are checked first; representatives are only computed when they pass.
    """
    fd, betti = report.fd_observed, report.betti

    if fd == 0 or fd % 2:
        return TheoremResult('F', TheoremStatus.NOT_APPLICABLE, f"formal dimension {fd} is not a positive even number")
    if fd > report.window or not betti[2]:
        return TheoremResult('F', TheoremStatus.NOT_APPLICABLE, 'no degree-2 class')

    half_dim = fd // 2

    if not all(betti[2 * i] for i in range(half_dim + 1)):
        return TheoremResult('F', TheoremStatus.FAIL, 'some even Betti number vanishes')
    if any(betti[half_dim - k] != betti[half_dim + k] for k in range(half_dim + 1)):
        return TheoremResult('F', TheoremStatus.FAIL, 'Betti numbers are not symmetric')

    if not report.has_representatives:
        logger.info(f"Computing class representatives of {model.name} for the Lefschetz check...")
        report = betti_table(model, up_to=report.window, representatives=True)

    if (w := find_lefschetz_class(model, report)) is None:
        return TheoremResult('F', TheoremStatus.FAIL, 'no degree-2 class has the Lefschetz property')

    return TheoremResult(
        'F', TheoremStatus.PASS,
        f"w = {w} has the Lefschetz property, dim H >= {symplectic_lower_bound(half_dim)}"
    )


def theorem_g(report: CohomologyReport) -> TheoremResult:
    """Cosymplectic Betti profile b_0 = b_{2n+1} <= b_1 = b_{2n} <= ... <= b_n = b_{n+1}."""
    fd = report.fd_observed

    if fd % 2 == 0 or fd > report.window:
        return TheoremResult('G', TheoremStatus.NOT_APPLICABLE, f"formal dimension {fd} is not odd")

    n = (fd - 1) // 2

    if cosymplectic_profile(report.betti[:fd + 1], n):
        return TheoremResult('G', TheoremStatus.PASS, f"dim H >= {cosymplectic_lower_bound(n)}")

    return TheoremResult('G', TheoremStatus.FAIL, 'Betti numbers do not have the cosymplectic profile')
