"""
Odd towers: the connecting maps of a model generated in odd degrees only.

With A_i = H(⋀(y_1, ..., y_i)) and α_i = [dy_i] ∈ A_{i-1}, the map δ_i: A_{i-1} -> A_{i-1} is
multiplication by α_i and dim A_i = 2 * dim ker δ_i.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from loguru import logger

from ..cohomology import CohomologyClass, CohomologyReport, betti_table, class_coordinates, cup_class
from ..exceptions import InvalidModelError, NotOddGeneratedError
from ..linalg import fraction_free_rank, solve_in_span
from ..model import SullivanModel, validate_model

__all__ = ['OddTowerStage', 'TowerReport', 'basis_classes', 'odd_tower_check', 'tower_dimension_identity']


@dataclass(frozen=True)
class OddTowerStage:
    """
    Stage i of an odd tower (1-based).

    :param alpha_class:         [dy_i] in A_{i-1}.
    :param source_dim:          dim A_{i-1}.
    :param ker_dim:             dim ker δ_i.
    :param im_dim:              dim im δ_i.
    :param condition_ok:        ker_dim > im_dim.
    :param c1_factorable:       α_i = γ1·γ2 with γ1² = 0 was found (trivially true when α_i = 0).
    :param alpha_squared_zero:  α_i² = 0.
    :param witness:             The factorisation (γ1, γ2) when one was found.
    """

    i: int
    alpha_class: CohomologyClass
    source_dim: int
    ker_dim: int
    im_dim: int
    condition_ok: bool
    c1_factorable: bool
    alpha_squared_zero: bool
    witness: tuple[CohomologyClass, CohomologyClass] | None = None


@dataclass(frozen=True)
class TowerReport:
    model_name: str
    stages: tuple[OddTowerStage, ...]

    @property
    def holds(self) -> bool:
        """Every stage has ker δ_i larger than im δ_i."""
        return all(stage.condition_ok for stage in self.stages)

    @property
    def c1_holds(self) -> bool:
        return all(stage.alpha_squared_zero and stage.c1_factorable for stage in self.stages)


def basis_classes(report: CohomologyReport, k: int) -> list[CohomologyClass]:
    """The representative basis of H^k, as classes."""
    size = report.slice(k).betti
    return [CohomologyClass(k, tuple(Fraction(int(i == j)) for j in range(size))) for i in range(size)]


def _check_odd(model: SullivanModel) -> None:
    if model.even_generators:
        raise NotOddGeneratedError(model.name)

    if not (validation := validate_model(model)).ok:
        raise InvalidModelError(f"{model.name} is not a valid minimal model: {validation.violations[0]}")


def _stage_cohomology(model: SullivanModel, count: int, representatives: bool = True) -> CohomologyReport:
    sub = model.truncate(count)
    # An exterior algebra on odd generators vanishes above the sum of their degrees.
    window = max(sum(g.degree for g in sub.generators), 1)
    return betti_table(sub, up_to=window, representatives=representatives)


def _multiply(
    model: SullivanModel, report: CohomologyReport, a: CohomologyClass, b: CohomologyClass
) -> CohomologyClass:
    if a.degree + b.degree > report.window:
        return CohomologyClass(a.degree + b.degree, ())
    return cup_class(model, report, a, b)


def _factorise(
    model: SullivanModel, report: CohomologyReport, alpha: CohomologyClass
) -> tuple[CohomologyClass, CohomologyClass] | None:
    target = {t: c for t, c in enumerate(alpha.coordinates) if c}

    for j in range(1, alpha.degree):
        if not report.slice(j).betti or not report.slice(alpha.degree - j).betti:
            continue

        partners = basis_classes(report, alpha.degree - j)

        for gamma in basis_classes(report, j):
            if not _multiply(model, report, gamma, gamma).is_zero():
                continue

            columns = [
                {t: c for t, c in enumerate(cup_class(model, report, gamma, other).coordinates) if c}
                for other in partners
            ]

            if (solution := solve_in_span(columns, target)) is not None:
                cofactor = tuple(solution.get(t, Fraction(0)) for t in range(len(partners)))
                return gamma, CohomologyClass(alpha.degree - j, cofactor)

    return None


def _stage(model: SullivanModel, i: int) -> OddTowerStage:
    report = _stage_cohomology(model, i - 1)
    positions = [j if j < i - 1 else None for j in range(len(model.generators))]
    alpha = model.differential[i - 1].transport(report.generators, positions)
    degree = model.generators[i - 1].degree + 1

    if not alpha:
        return OddTowerStage(
            i, CohomologyClass(degree, ()), report.total_dim, report.total_dim, 0, report.total_dim > 0, True, True
        )

    alpha_class = CohomologyClass(degree, class_coordinates(report, alpha))

    if alpha_class.is_zero():
        return OddTowerStage(
            i, alpha_class, report.total_dim, report.total_dim, 0, report.total_dim > 0, True, True
        )

    im_dim = 0

    for k in range(report.window + 1):
        if k + degree > report.window or not report.slice(k).betti:
            continue

        rows = [
            {t: c for t, c in enumerate(cup_class(model, report, alpha_class, e).coordinates) if c}
            for e in basis_classes(report, k)
        ]
        im_dim += fraction_free_rank(rows)

    ker_dim = report.total_dim - im_dim
    witness = _factorise(model, report, alpha_class)

    stage = OddTowerStage(
        i, alpha_class, report.total_dim, ker_dim, im_dim, ker_dim > im_dim,
        witness is not None, _multiply(model, report, alpha_class, alpha_class).is_zero(), witness
    )

    logger.debug(f"{model.name}: stage {i} has ker {ker_dim}, im {im_dim}")

    return stage


def odd_tower_check(model: SullivanModel) -> TowerReport:
    """
    Run the connecting-map analysis at every stage of an odd-generated model.

    A stage whose α_i is not zero is also searched for a factorisation α_i = γ1·γ2 with γ1² = 0,
    γ1 running over the representative basis and γ2 solved for linearly. Not finding one means "not found",
    not "impossible".

    :raises NotOddGeneratedError:   The model has even generators.
    :raises InvalidModelError:      The model fails validation.
    """
    _check_odd(model)

    logger.info(f"Running the odd tower of {model.name}...")

    return TowerReport(model.name, tuple(_stage(model, i) for i in range(1, len(model.generators) + 1)))


def tower_dimension_identity(model: SullivanModel, n: int) -> tuple[int, int, bool]:
    """
    Compare dim H(⋀(y_1..y_n)) with 2 * dim ker δ_n.

    :returns:   (dim_h_total, twice_ker, equal)
    """
    _check_odd(model)

    if not 1 <= n <= len(model.generators):
        raise ValueError(f"tower_dimension_identity: 'Stage {n} does not exist in {model.name}!'")

    total = _stage_cohomology(model, n, representatives=False).total_dim
    twice_ker = 2 * _stage(model, n).ker_dim

    return total, twice_ker, total == twice_ker
