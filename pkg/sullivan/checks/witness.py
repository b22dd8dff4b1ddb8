"""Linear independence of explicit cocycles in cohomology."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..algebra import GradedElement, basis_index
from ..cohomology import differential_columns
from ..exceptions import NotACocycleError, NotHomogeneousError
from ..linalg import FractionFreeEchelon
from ..model import SullivanModel, apply_differential

__all__ = ['WitnessCheck', 'certify_witnesses', 'independent_in_cohomology']


def independent_in_cohomology(model: SullivanModel, elements: Sequence[GradedElement]) -> int:
    """
    Rank of the span of the classes of some cocycles.

    Classes of different degrees are independent, so the rank is computed degree by degree
    (modulo that degree's coboundaries) and summed.

    :raises NotHomogeneousError:    An element mixes degrees.
    :raises NotACocycleError:       An element is not closed. Carries its position.
    """
    by_degree = defaultdict[int, list[GradedElement]](list)

    for position, element in enumerate(elements):
        if not element.is_homogeneous():
            raise NotHomogeneousError(position)
        if apply_differential(model, element):
            raise NotACocycleError(position, str(element))
        if element:
            by_degree[element.degree or 0].append(element)

    rank = 0

    for k, group in sorted(by_degree.items()):
        echelon = FractionFreeEchelon()

        if k > 0:
            echelon.extend(differential_columns(model, k - 1))

        index = basis_index(model.generators, k)

        for element in group:
            vector: dict[int, Fraction] = {index[m]: c for m, c in element}

            if echelon.add(vector) is None:
                rank += 1

    return rank


@dataclass(frozen=True)
class WitnessCheck:
    rank: int
    claimed: int

    @property
    def ok(self) -> bool:
        return self.rank == self.claimed


def certify_witnesses(model: SullivanModel, elements: Sequence[GradedElement], claimed: int) -> WitnessCheck:
    """Check that explicit cocycles span a space of the claimed dimension in cohomology."""
    return WitnessCheck(independent_in_cohomology(model, elements), claimed)
