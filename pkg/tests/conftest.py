from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator

import pytest
from hypothesis import HealthCheck, settings, strategies as st
from loguru import logger

from sullivan import (
    CORPUS_NAMES, CohomologyClass, CohomologyReport, GradedElement, Generators, Monomial, SullivanModel,
    basis_of_degree, build_named_model, differential_columns, kernel_basis, make_generators, validate_model,
    word_length
)
from sullivan.corpus import SLOW_MODELS

# a, e even; b, c, f odd.
MIXED = make_generators([('a', 2), ('b', 3), ('c', 3), ('e', 4), ('f', 5)])

coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)

# Property tests over random models.
thorough = settings(
    max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much]
)


@st.composite
def homogeneous_elements(
    draw: st.DrawFn, generators: Generators = MIXED, max_degree: int = 12, max_terms: int = 4
) -> tuple[GradedElement, int]:
    """A homogeneous element together with its degree (the zero element included)."""
    k = draw(st.integers(0, max_degree))
    basis = basis_of_degree(generators, k)

    if not basis:
        return GradedElement.zero(generators), k

    monomials = draw(st.lists(st.sampled_from(basis), max_size=max_terms, unique=True))

    return GradedElement(generators, {m: draw(coefficients) for m in monomials}), k


@st.composite
def elements(draw: st.DrawFn, generators: Generators = MIXED, max_degree: int = 10) -> GradedElement:
    parts = draw(st.lists(homogeneous_elements(generators, max_degree), max_size=3))
    result = GradedElement.zero(generators)

    for part, _ in parts:
        result = result + part

    return result


@st.composite
def integer_matrices(draw: st.DrawFn, max_rows: int = 6, max_cols: int = 6) -> list[list[int]]:
    rows = draw(st.integers(1, max_rows))
    cols = draw(st.integers(1, max_cols))
    entries = st.integers(-3, 3)

    return [[draw(entries) for _ in range(cols)] for _ in range(rows)]


@st.composite
def _triangular_models(
    draw: st.DrawFn, max_generators: int, degrees: st.SearchStrategy[int], weights: st.SearchStrategy[int]
) -> SullivanModel:
    """dy_i is a random combination of decomposable cocycles of the model on y_1..y_{i-1}."""
    chosen = sorted(draw(st.lists(degrees, min_size=1, max_size=max_generators)))
    generators = make_generators([(f"g{i}", degree) for i, degree in enumerate(chosen, 1)])
    differentials = dict[str, GradedElement]()

    for gen in generators:
        # A decomposable of degree |gen| + 1 only involves generators of degree below |gen|.
        partial = SullivanModel.from_differentials(generators, differentials, 'random')
        basis = basis_of_degree(generators, gen.degree + 1)
        decomposable = [j for j, mono in enumerate(basis) if word_length(mono) >= 2]
        columns = differential_columns(partial, gen.degree + 1)
        cocycles = kernel_basis([columns[j] for j in decomposable])
        chosen_weights = draw(st.lists(weights, min_size=len(cocycles), max_size=len(cocycles)))

        terms = dict[Monomial, Fraction]()

        for weight, vector in zip(chosen_weights, cocycles):
            for j, c in vector.items():
                mono = basis[decomposable[j]]
                terms[mono] = terms.get(mono, Fraction(0)) + weight * c

        differentials[gen.name] = GradedElement(generators, terms)

    return SullivanModel.from_differentials(generators, differentials, 'random')


def minimal_models(
    max_generators: int = 4, max_degree: int = 7, odd_only: bool = False
) -> st.SearchStrategy[SullivanModel]:
    """Random minimal models in triangular order, keeping only those `validate_model` accepts."""
    if odd_only:
        degrees = st.sampled_from(range(3, max_degree + 1, 2))
    else:
        degrees = st.integers(2, max_degree)

    return _triangular_models(max_generators, degrees, st.integers(-2, 2)).filter(lambda m: validate_model(m).ok)


def cohomology_classes(report: CohomologyReport, k: int) -> st.SearchStrategy[CohomologyClass]:
    size = report.slice(k).betti
    return st.lists(st.integers(-3, 3), min_size=size, max_size=size).map(
        lambda cs: CohomologyClass(k, tuple(Fraction(c) for c in cs))
    )


def corpus_params(names: Iterable[str] = CORPUS_NAMES) -> list[object]:
    """Corpus names for `parametrize`, with the expensive entries marked slow."""
    return [pytest.param(name, marks=pytest.mark.slow) if name in SLOW_MODELS else name for name in names]


def as_columns(matrix: list[list[int]]) -> list[dict[int, Fraction]]:
    """Sparse columns of a dense row-major matrix."""
    return [
        {r: Fraction(row[c]) for r, row in enumerate(matrix) if row[c]}
        for c in range(len(matrix[0]))
    ]


@pytest.fixture(autouse=True)
def _drop_log_sinks() -> Iterator[None]:
    yield
    logger.remove()


@pytest.fixture(scope='session')
def sphere2() -> SullivanModel:
    return build_named_model('sphere:2')


@pytest.fixture(scope='session')
def tower335() -> SullivanModel:
    return build_named_model('oddtower:3,3,5')


@pytest.fixture(scope='session')
def sample() -> SullivanModel:
    return build_named_model('hyperelliptic:sample')


@pytest.fixture
def broken_text() -> str:
    """dz = x*y has the wrong degree and d(dz) = x^3 is not zero."""
    return "generator x 2\ngenerator y 3\ngenerator z 5\nd y = x^2\nd z = x*y\n"
