"""Degree-wise cohomology of Sullivan models by exact linear algebra."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from loguru import logger

from .algebra import Generators, GradedElement, Monomial, basis_index, basis_of_degree
from .exceptions import LengthMismatchError, NotACocycleError, OddFormalDimensionError, WindowError
from .linalg import TARGET, FractionFreeEchelon, dense_rank, fraction_free_rank, kernel_basis
from .model import SullivanModel, apply_differential, model_invariants
from .types import Evidence

__all__ = [
    'ClassReducer', 'CohomologyClass', 'CohomologyReport', 'CohomologySlice', 'LefschetzResult',
    'betti_table', 'class_coordinates', 'class_element', 'cohomology_slice', 'cosymplectic_profile',
    'cup_class', 'default_window', 'dense_betti_numbers', 'differential_columns', 'lefschetz_check', 'unit_class'
]


def differential_columns(model: SullivanModel, k: int) -> list[dict[int, Fraction]]:
    """
    The matrix of d: ⋀^k -> ⋀^{k+1}, one sparse column per degree-k basis monomial.

    Column entries are keyed by the position of the image monomial in the degree-(k+1) basis.
    """
    target = basis_index(model.generators, k + 1)
    columns = list[dict[int, Fraction]]()

    for mono in basis_of_degree(model.generators, k):
        image = apply_differential(model, GradedElement._wrap(model.generators, {mono: Fraction(1)}))
        columns.append({target[m]: c for m, c in image})

    return columns


class ClassReducer:
    """
    Reduces degree-k cocycles to coordinates in a representative basis of H^k.

    Internally an echelon basis of the coboundaries followed by the representatives,
    where each representative row is tagged with its position.
    """

    degree: int
    size: int

    def __init__(self, echelon: FractionFreeEchelon, basis: Sequence[Monomial], degree: int, size: int) -> None:
        self._echelon = echelon
        self._index = {m: i for i, m in enumerate(basis)}
        self.degree = degree
        self.size = size

    def coordinates(self, element: GradedElement) -> tuple[Fraction, ...]:
        vector = dict[int, Fraction]()

        for mono, coeff in element:
            if (i := self._index.get(mono)) is None:
                raise ValueError(f"class_coordinates: 'The element is not of degree {self.degree}!'")
            vector[i] = coeff

        remainder, tag = self._echelon.reduce(vector, {TARGET: 1})

        if remainder:
            raise NotACocycleError(0, str(element))

        pivot = tag[TARGET]

        return tuple(-tag.get(i, Fraction(0)) / pivot for i in range(self.size))


@dataclass(frozen=True)
class CohomologySlice:
    """
    H^k of a model.

    ``class_representatives`` is empty when the slice was computed without representatives.
    """

    degree: int
    dim_cocycles: int
    dim_coboundaries: int
    betti: int
    class_representatives: tuple[GradedElement, ...] = ()
    reducer: ClassReducer | None = field(default=None, repr=False, compare=False)


def cohomology_slice(model: SullivanModel, k: int, representatives: bool = True) -> CohomologySlice:
    """
    Compute H^k as cocycles modulo coboundaries.

    Representatives are the first kernel vectors (kernel basis taken in canonical monomial order)
    that stay independent modulo the coboundaries.

    :param model:               A validated model.
    :param k:                   Degree, at least 0.
    :param representatives:     Also compute representatives and the reducer used for class coordinates.
    """
    if k < 0:
        raise ValueError(f"cohomology_slice: 'Degree must be non-negative, not {k}!'")

    gens = model.generators
    basis = basis_of_degree(gens, k)
    outgoing = differential_columns(model, k)
    incoming = differential_columns(model, k - 1) if k > 0 else []

    logger.debug(f"{model.name}: degree {k} has {len(basis)} monomials")

    if not representatives:
        rank_out = fraction_free_rank(outgoing)
        rank_in = fraction_free_rank(incoming)

        return CohomologySlice(k, len(basis) - rank_out, rank_in, len(basis) - rank_out - rank_in)

    cocycles = kernel_basis(outgoing)

    echelon = FractionFreeEchelon(track=True)
    dim_coboundaries = echelon.extend(incoming)
    betti = len(cocycles) - dim_coboundaries

    reps = list[GradedElement]()

    for vector in cocycles:
        if len(reps) == betti:
            break

        if echelon.add(vector, {len(reps): 1}) is None:
            reps.append(GradedElement._wrap(gens, {basis[j]: c for j, c in vector.items()}))

    return CohomologySlice(
        k, len(cocycles), dim_coboundaries, betti, tuple(reps), ClassReducer(echelon, basis, k, betti)
    )


@dataclass(frozen=True)
class CohomologyReport:
    """Cohomology of a model over the degree window 0..window."""

    model_name: str
    generators: Generators = field(repr=False)
    slices: tuple[CohomologySlice, ...]
    chi_c: int
    fd_observed: int
    total_dim: int
    duality_ok: bool
    even_dim: int
    odd_dim: int
    window: int
    evidence: Evidence
    fd_predicted: int

    @property
    def betti(self) -> list[int]:
        return [s.betti for s in self.slices]

    def slice(self, k: int) -> CohomologySlice:
        if not 0 <= k <= self.window:
            raise WindowError(f"Degree {k} lies outside the computed window 0..{self.window}!")
        return self.slices[k]

    @property
    def has_representatives(self) -> bool:
        return all(s.reducer is not None for s in self.slices)


def default_window(model: SullivanModel, evidence: bool = True) -> int:
    """
    fd_predicted, plus the largest generator degree when evidence for ellipticity should be collected.

    A negative fd_predicted only happens for non-elliptic models; the window is then twice the largest
    generator degree.
    """
    window = model_invariants(model).fd_predicted

    if window < 0:
        return max(2 * model.max_degree, 1)

    if evidence:
        window += model.max_degree

    return max(window, 1)


def betti_table(
    model: SullivanModel, up_to: int | None = None, assume_elliptic: bool = False, representatives: bool = True
) -> CohomologyReport:
    """
    Compute every slice in the degree window and aggregate them.

    Nothing outside the window is certified. When the window reaches past fd_predicted,
    Betti numbers vanishing strictly above fd_predicted count as evidence for ellipticity (a heuristic).

    :param model:               A validated model.
    :param up_to:               Top degree of the window.
    :param assume_elliptic:     Allow leaving out `up_to`; the window is then fd_predicted.
    :param representatives:     Compute class representatives too. Needed for class coordinates and cup products.
    """
    invariants = model_invariants(model)
    fd_predicted = invariants.fd_predicted

    if up_to is None:
        if not assume_elliptic:
            raise WindowError(f"A window is needed for {model.name}, which is not asserted to be elliptic!")
        up_to = fd_predicted

    if up_to <= 0:
        raise WindowError

    logger.info(f"Computing cohomology of {model.name} up to degree {up_to}...")

    slices = tuple(cohomology_slice(model, k, representatives) for k in range(up_to + 1))
    betti = [s.betti for s in slices]

    fd_observed = max(k for k, b in enumerate(betti) if b)
    even_dim = sum(betti[0::2])
    odd_dim = sum(betti[1::2])

    if invariants.p < 0:
        # chi_pi > 0
        evidence = Evidence.CONTRADICTED
        logger.warning(f"{model.name} has chi_pi = {invariants.chi_pi} > 0; it is not elliptic")
    elif up_to > fd_predicted >= 0:
        evidence = Evidence.CONTRADICTED if any(betti[fd_predicted + 1:]) else Evidence.SUPPORTED
    else:
        evidence = Evidence.UNCHECKED

    if evidence is Evidence.CONTRADICTED and invariants.p >= 0:
        logger.warning(
            f"{model.name} has cohomology above its predicted formal dimension {fd_predicted}; "
            "it is probably not elliptic"
        )

    return CohomologyReport(
        model_name=model.name,
        generators=model.generators,
        slices=slices,
        chi_c=even_dim - odd_dim,
        fd_observed=fd_observed,
        total_dim=even_dim + odd_dim,
        duality_ok=all(betti[k] == betti[fd_observed - k] for k in range(fd_observed + 1)),
        even_dim=even_dim,
        odd_dim=odd_dim,
        window=up_to,
        evidence=evidence,
        fd_predicted=fd_predicted,
    )


@dataclass(frozen=True)
class CohomologyClass:
    """A class given by its coordinates in the representative basis of H^degree."""

    degree: int
    coordinates: tuple[Fraction, ...]

    def is_zero(self) -> bool:
        return not any(self.coordinates)

    def __str__(self) -> str:
        return f"[{', '.join(str(c) for c in self.coordinates)}]_{self.degree}"


def _reducer(source: CohomologyReport | CohomologySlice, degree: int) -> ClassReducer:
    slc = source.slice(degree) if isinstance(source, CohomologyReport) else source

    if slc.degree != degree:
        raise ValueError(f"class_coordinates: 'Expected an element of degree {slc.degree}, not {degree}!'")
    if slc.reducer is None:
        raise WindowError(f"H^{degree} was computed without class representatives!")

    return slc.reducer


def class_coordinates(
    source: CohomologyReport | CohomologySlice, element: GradedElement, degree: int | None = None
) -> tuple[Fraction, ...]:
    """
    Coordinates of the class of a cocycle in the representative basis.

    :param source:      A report or a single slice, computed with representatives.
    :param element:     A homogeneous cocycle.
    :param degree:      Its degree. Only needed for the zero element.
    """
    if degree is None:
        if (degree := element.degree) is None:
            raise ValueError("class_coordinates: 'The degree of the zero element must be given!'")

    return _reducer(source, degree).coordinates(element)


def class_element(report: CohomologyReport, cls: CohomologyClass) -> GradedElement:
    """The cocycle sum(c_i * rep_i) standing for a class."""
    slc = report.slice(cls.degree)

    if len(cls.coordinates) != slc.betti:
        raise ValueError(f"class_element: 'H^{cls.degree} has dimension {slc.betti}, "
                         f"got {len(cls.coordinates)} coordinates!'")

    terms = dict[Monomial, Fraction]()

    for c, rep in zip(cls.coordinates, slc.class_representatives):
        if not c:
            continue
        for mono, coeff in rep:
            value = terms.get(mono, Fraction(0)) + c * coeff

            if value:
                terms[mono] = value
            else:
                del terms[mono]

    return GradedElement._wrap(report.generators, terms)


def unit_class() -> CohomologyClass:
    return CohomologyClass(0, (Fraction(1),))


def cup_class(
    model: SullivanModel, report: CohomologyReport, a: CohomologyClass, b: CohomologyClass
) -> CohomologyClass:
    """
    Cup product of two classes.

    Representatives are multiplied and the product is reduced modulo coboundaries of degree |a| + |b|.
    """
    degree = a.degree + b.degree

    if degree > report.window:
        raise WindowError(f"The product lands in degree {degree}, beyond the window {report.window}!")

    product = class_element(report, a) * class_element(report, b)

    return CohomologyClass(degree, class_coordinates(report, product, degree))


@dataclass(frozen=True)
class LefschetzResult:
    passed: bool
    failing_k: int | None = None


def lefschetz_check(
    model: SullivanModel, report: CohomologyReport, w: CohomologyClass, half_dim: int
) -> LefschetzResult:
    """
    Check that multiplication by w^k is an isomorphism H^{m-k} -> H^{m+k} for every k = 0..m.

    :param w:           A degree-2 class.
    :param half_dim:    m, half the formal dimension.

    :returns:           The verdict and the smallest k that fails.
    """
    fd = report.fd_observed

    if fd % 2 or fd != 2 * half_dim:
        raise OddFormalDimensionError(fd, half_dim)
    if w.degree != 2:
        raise ValueError(f"lefschetz_check: 'w must be a degree-2 class, not degree {w.degree}!'")

    power = unit_class()

    for k in range(half_dim + 1):
        if k:
            power = cup_class(model, report, power, w)

        source, target = report.slice(half_dim - k), report.slice(half_dim + k)

        if source.betti != target.betti:
            return LefschetzResult(False, k)

        rows = list[dict[int, Fraction]]()

        for i in range(source.betti):
            basis_class = CohomologyClass(source.degree, tuple(Fraction(int(i == j)) for j in range(source.betti)))
            image = cup_class(model, report, power, basis_class)
            rows.append({j: c for j, c in enumerate(image.coordinates) if c})

        if fraction_free_rank(rows) != target.betti:
            return LefschetzResult(False, k)

    return LefschetzResult(True)


def cosymplectic_profile(betti: Sequence[int], n: int) -> bool:
    """Whether b_k = b_{2n+1-k} for all k and b_0 <= b_1 <= ... <= b_n."""
    if len(betti) != 2 * n + 2:
        raise LengthMismatchError(2 * n + 2, len(betti))

    symmetric = all(betti[k] == betti[2 * n + 1 - k] for k in range(2 * n + 2))
    monotone = all(betti[k] <= betti[k + 1] for k in range(n))

    return symmetric and monotone


def dense_betti_numbers(model: SullivanModel, up_to: int) -> list[int]:
    """Betti numbers from dense matrices and :py:func:`dense_rank` only. Used to cross-check :py:func:`betti_table`."""
    ranks = list[int]()

    for k in range(up_to + 1):
        rows_count = len(basis_of_degree(model.generators, k + 1))
        columns = differential_columns(model, k)
        dense = [[col.get(r, Fraction(0)) for r in range(rows_count)] for col in columns]
        ranks.append(dense_rank(dense) if dense and rows_count else 0)

    return [
        len(basis_of_degree(model.generators, k)) - ranks[k] - (ranks[k - 1] if k else 0)
        for k in range(up_to + 1)
    ]
