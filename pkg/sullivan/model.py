"""Sullivan models (⋀V, d): storage, the Leibniz extension of d, validation and classification."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Mapping, Sequence

from loguru import logger

from .algebra import (
    Generator, Generators, GradedElement, Monomial, check_generators, format_element, make_generators, multiply,
    word_length
)
from .degrees import fh_violations
from .exceptions import GeneratorMismatchError, InvalidModelError, UnknownGeneratorError
from .types import Pairing

__all__ = [
    'Classification', 'HyperellipticSplit', 'ModelInvariants', 'SullivanModel', 'ValidationReport',
    'Violation', 'ViolationKind',
    'apply_differential', 'classify_model', 'hyperelliptic_decomposition', 'model_invariants', 'validate_model'
]


class SullivanModel:
    """
    A free graded-commutative algebra with a differential given on the generators.

    The differential of the i-th generator is stored as an element over the same generator list.
    Models are never mutated after construction; the only internal state is a per-monomial cache
    of the extended differential.

    :param generators:      Generators in triangular order.
    :param differential:    One element per generator. Defaults to d = 0.
    :param name:            Display name, used in reports and as the ``# model:`` header.
    """

    __slots__ = ('name', 'generators', 'differential', '_cache')

    name: str
    generators: Generators
    differential: tuple[GradedElement, ...]

    def __init__(
        self, generators: Sequence[Generator], differential: Sequence[GradedElement] | None = None,
        name: str = 'model'
    ) -> None:
        generators = tuple(generators)
        check_generators(generators)

        if differential is None:
            differential = [GradedElement.zero(generators)] * len(generators)

        if len(differential) != len(generators):
            raise InvalidModelError(
                f"{name} has {len(generators)} generators but {len(differential)} differentials!"
            )

        for dg in differential:
            if dg.generators != generators:
                raise GeneratorMismatchError(
                    f"The differentials of {name} must be elements over its own generators!"
                )

        self.name = name
        self.generators = generators
        self.differential = tuple(differential)
        self._cache = dict[Monomial, GradedElement]()

    @classmethod
    def from_differentials(
        cls, generators: Generators, differentials: Mapping[str, GradedElement], name: str = 'model'
    ) -> SullivanModel:
        """Build a model from a name -> d(name) mapping; unlisted generators are closed."""
        names = {g.name for g in generators}

        for key in differentials:
            if key not in names:
                raise UnknownGeneratorError(key)

        return cls(
            generators,
            [differentials.get(g.name, GradedElement.zero(generators)) for g in generators],
            name
        )

    @classmethod
    def from_expressions(
        cls, declarations: Sequence[tuple[str, int]], expressions: Mapping[str, str], name: str = 'model'
    ) -> SullivanModel:
        """
        Build a model from generator declarations and differentials written in the model-file syntax.

        Example: ``SullivanModel.from_expressions([('x', 2), ('y', 3)], {'y': 'x^2'}, 'sphere:2')``.
        """
        from .model_io import parse_expression

        generators = make_generators(declarations)

        return cls.from_differentials(
            generators, {key: parse_expression(text, generators) for key, text in expressions.items()}, name
        )

    def elements(self) -> tuple[GradedElement, ...]:
        """Every generator as an element, in index order."""
        return tuple(GradedElement.generator(self.generators, i) for i in range(len(self.generators)))

    def element(self, which: int | str) -> GradedElement:
        return GradedElement.generator(self.generators, which)

    def d(self, which: int | str) -> GradedElement:
        """The stored differential of a generator."""
        for gen in self.generators:
            if gen.index == which or gen.name == which:
                return self.differential[gen.index]

        raise UnknownGeneratorError(which)

    @property
    def even_generators(self) -> tuple[Generator, ...]:
        return tuple(g for g in self.generators if g.is_even)

    @property
    def odd_generators(self) -> tuple[Generator, ...]:
        return tuple(g for g in self.generators if g.is_odd)

    @property
    def max_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    def truncate(self, count: int) -> SullivanModel:
        """
        The sub-model generated by the first `count` generators.

        Raises :py:class:`GeneratorMismatchError` if one of their differentials
        involves a later generator.
        """
        if not 0 <= count <= len(self.generators):
            raise ValueError(f"truncate: 'Can not keep {count} of {len(self.generators)} generators!'")

        generators = self.generators[:count]
        positions = [i if i < count else None for i in range(len(self.generators))]

        return SullivanModel(
            generators,
            [dg.transport(generators, positions) for dg in self.differential[:count]],
            f"{self.name}[:{count}]"
        )

    @classmethod
    def product(cls, *models: SullivanModel, name: str | None = None) -> SullivanModel:
        """
        Tensor product of models: generator lists concatenated, differentials componentwise.

        The generators of the k-th factor get the suffix ``_k`` (1-based).
        """
        if not models:
            raise InvalidModelError("A product needs at least one factor!")

        generators = make_generators(
            (f"{g.name}_{k}", g.degree) for k, m in enumerate(models, 1) for g in m.generators
        )
        differential = list[GradedElement]()
        offset = 0

        for m in models:
            positions = [offset + i for i in range(len(m.generators))]
            differential.extend(dg.transport(generators, positions) for dg in m.differential)
            offset += len(m.generators)

        return cls(generators, differential, name or ' x '.join(m.name for m in models))

    def _d_monomial(self, monomial: Monomial) -> GradedElement:
        if (cached := self._cache.get(monomial)) is not None:
            return cached

        gens = self.generators
        terms = dict[Monomial, Fraction]()
        prefix_degree = 0

        for i, e in enumerate(monomial):
            if not e:
                continue

            dg = self.differential[i]

            if dg:
                # prefix * g^(e-1) on the left, everything after g on the right
                left = tuple(monomial[j] if j < i else (e - 1 if j == i else 0) for j in range(len(gens)))
                right = tuple(monomial[j] if j > i else 0 for j in range(len(gens)))

                term = multiply(
                    multiply(GradedElement._wrap(gens, {left: Fraction(1)}), dg),
                    GradedElement._wrap(gens, {right: Fraction(1)})
                )
                factor = -e if prefix_degree % 2 else e

                for mono, coeff in term:
                    value = terms.get(mono, Fraction(0)) + factor * coeff

                    if value:
                        terms[mono] = value
                    else:
                        del terms[mono]

            prefix_degree += e * gens[i].degree

        result = GradedElement._wrap(gens, terms)
        self._cache[monomial] = result

        return result

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, SullivanModel):
            return NotImplemented
        return (self.name, self.generators, self.differential) == (other.name, other.generators, other.differential)

    def __hash__(self) -> int:
        return hash((self.name, self.generators, self.differential))

    def __repr__(self) -> str:
        gens = ', '.join(str(g) for g in self.generators)
        return f"SullivanModel({self.name!r}, ⋀({gens}))"

    def __getstate__(self) -> tuple[str, Generators, tuple[GradedElement, ...]]:
        return self.name, self.generators, self.differential

    def __setstate__(self, state: tuple[str, Generators, tuple[GradedElement, ...]]) -> None:
        self.name, self.generators, self.differential = state
        self._cache = {}


def apply_differential(model: SullivanModel, element: GradedElement) -> GradedElement:
    """
    Extend d to ⋀V as a derivation of degree +1.

    On a monomial g_1...g_r the image is the sum over factors of ±g_1...d(g_i)...g_r,
    the sign being (-1) to the total degree of the factors in front of g_i.
    """
    if element.generators != model.generators:
        raise GeneratorMismatchError(f"The element is not defined over the generators of {model.name}!")

    terms = dict[Monomial, Fraction]()

    for mono, coeff in element:
        for image, c in model._d_monomial(mono):
            value = terms.get(image, Fraction(0)) + coeff * c

            if value:
                terms[image] = value
            else:
                del terms[image]

    return GradedElement._wrap(model.generators, terms)


class ViolationKind(str, Enum):
    """Which well-formedness condition a generator breaks."""

    DEGREE = 'degree'
    TRIANGULARITY = 'triangularity'
    MINIMALITY = 'minimality'
    D_SQUARED = 'd-squared'


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    generator: str
    detail: str

    def __str__(self) -> str:
        return f"{self.kind.value}: {self.generator}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    """All violations found in a model. An empty report means the model is a valid minimal model."""

    model_name: str
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def of_kind(self, kind: ViolationKind) -> tuple[Violation, ...]:
        return tuple(v for v in self.violations if v.kind is kind)


def validate_model(model: SullivanModel) -> ValidationReport:
    """
    Check every generator for degree, triangularity, minimality and d∘d = 0.

    The check is total: every violation is collected, nothing is raised.
    """
    violations = list[Violation]()

    for gen, dg in zip(model.generators, model.differential):
        if not dg:
            continue

        if not dg.is_homogeneous(gen.degree + 1):
            degrees = ', '.join(str(k) for k in sorted(dg.degrees()))
            violations.append(Violation(
                ViolationKind.DEGREE, gen.name,
                f"d{gen.name} = {format_element(dg)} has degree {degrees}, expected {gen.degree + 1}"
            ))

        if later := sorted({model.generators[j].name for mono in dg.terms for j, e in enumerate(mono)
                            if e and j >= gen.index}):
            violations.append(Violation(
                ViolationKind.TRIANGULARITY, gen.name,
                f"d{gen.name} involves {', '.join(later)}, which is not declared before {gen.name}"
            ))

        if short := [mono for mono in dg.terms if word_length(mono) < 2]:
            violations.append(Violation(
                ViolationKind.MINIMALITY, gen.name,
                f"d{gen.name} has {len(short)} term(s) of word length below 2"
            ))

        if dd := apply_differential(model, dg):
            violations.append(Violation(
                ViolationKind.D_SQUARED, gen.name, f"d(d{gen.name}) = {format_element(dd)} is not zero"
            ))

    report = ValidationReport(model.name, tuple(violations))

    if not report.ok:
        logger.warning(f"{model.name} has {len(violations)} validation violation(s)")

    return report


@dataclass(frozen=True)
class Classification:
    minimal: bool
    pure: bool
    hyperelliptic: bool
    odd_generated: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            'minimal': self.minimal, 'pure': self.pure,
            'hyperelliptic': self.hyperelliptic, 'odd_generated': self.odd_generated
        }


def _even_only(model: SullivanModel, mono: Monomial) -> bool:
    return all(not e or model.generators[i].is_even for i, e in enumerate(mono))


def _has_even_factor(model: SullivanModel, mono: Monomial) -> bool:
    return any(e and model.generators[i].is_even for i, e in enumerate(mono))


def classify_model(model: SullivanModel) -> Classification:
    """
    Pure: d vanishes on even generators and sends odd ones into ⋀V^even.
    Hyperelliptic: d vanishes on even generators and no monomial of any d(y) is purely exterior.
    """
    closed_even = all(not model.differential[g.index] for g in model.even_generators)
    odd_images = [model.differential[g.index] for g in model.odd_generators]

    return Classification(
        minimal=validate_model(model).ok,
        pure=closed_even and all(_even_only(model, m) for dy in odd_images for m in dy.terms),
        hyperelliptic=closed_even and all(_has_even_factor(model, m) for dy in odd_images for m in dy.terms),
        odd_generated=not model.even_generators,
    )


@dataclass(frozen=True)
class HyperellipticSplit:
    """
    d(y) = polynomial + mixed + remainder, with the polynomial in ⋀⁺V^even,
    the mixed part in ⋀⁺V^even ⊗ ⋀⁺V^odd and the remainder purely exterior.
    """

    generator: str
    polynomial: GradedElement
    mixed: GradedElement
    remainder: GradedElement


def hyperelliptic_decomposition(model: SullivanModel) -> tuple[HyperellipticSplit, ...]:
    """Split the differential of every odd generator into its polynomial, mixed and exterior parts."""
    splits = list[HyperellipticSplit]()

    for gen in model.odd_generators:
        parts: tuple[dict[Monomial, Fraction], ...] = ({}, {}, {})

        for mono, coeff in model.differential[gen.index]:
            if _even_only(model, mono):
                parts[0][mono] = coeff
            elif _has_even_factor(model, mono):
                parts[1][mono] = coeff
            else:
                parts[2][mono] = coeff

        splits.append(HyperellipticSplit(gen.name, *(GradedElement._wrap(model.generators, p) for p in parts)))

    return tuple(splits)


@dataclass(frozen=True)
class ModelInvariants:
    """
    Closed-form invariants of a model.

    ``p`` is dim V^odd - dim V^even, so ``chi_pi == -p``.
    ``fh_violations`` lists the Friedlander-Halperin constraints the generator degrees break for ``fd_predicted``.
    """

    n: int
    p: int
    chi_pi: int
    dim_v: int
    dim_v_even: int
    dim_v_odd: int
    fd_predicted: int
    even_degrees: tuple[int, ...] = field(default=())
    odd_degrees: tuple[int, ...] = field(default=())
    fh_violations: tuple[str, ...] = field(default=())

    @property
    def fh_ok(self) -> bool:
        return not self.fh_violations


def model_invariants(model: SullivanModel, pairing: Pairing = Pairing.TOP) -> ModelInvariants:
    even = tuple(sorted(g.degree for g in model.even_generators))
    odd = tuple(sorted(g.degree for g in model.odd_generators))
    fd = sum(odd) - sum(x - 1 for x in even)

    return ModelInvariants(
        n=len(even),
        p=len(odd) - len(even),
        chi_pi=len(even) - len(odd),
        dim_v=len(even) + len(odd),
        dim_v_even=len(even),
        dim_v_odd=len(odd),
        fd_predicted=fd,
        even_degrees=even,
        odd_degrees=odd,
        fh_violations=tuple(fh_violations(even, odd, fd, pairing)),
    )
