"""
The free graded-commutative algebra ⋀V on finitely many generators, over the rationals.

Even generators are polynomial, odd generators are exterior.
Monomials are exponent tuples indexed by generator position, always in normal form:
the generators are implicitly ordered by index and any sign coming from reordering
odd factors is carried by the coefficient, never by the monomial.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from types import MappingProxyType
from typing import Any, Iterable, Iterator, Mapping, Sequence

from .exceptions import GeneratorMismatchError, InvalidGeneratorError, NotHomogeneousError, UnknownGeneratorError

__all__ = [
    'Generator', 'Generators', 'GradedElement', 'Monomial', 'Rational',
    'add_scaled', 'basis_index', 'basis_of_degree', 'format_element', 'format_monomial',
    'koszul_sign', 'make_generators', 'monomial_degree', 'multiply', 'multiply_monomials',
    'normal_form', 'term_order_key', 'word_length',
]

Monomial = tuple[int, ...]
Rational = Fraction | int


@dataclass(frozen=True)
class Generator:
    """
    A named algebra generator.

    :param name:        Identifier used in model files and reports.
    :param index:       Position in the ambient generator list (0-based).
    :param degree:      Positive degree. Its parity decides whether the generator is polynomial or exterior.
    """

    name: str
    index: int
    degree: int

    def __post_init__(self) -> None:
        if not self.name.isidentifier():
            raise InvalidGeneratorError(f"\"{self.name}\" is not a valid generator name!")
        if self.index < 0:
            raise InvalidGeneratorError(f"Generator {self.name} has a negative index ({self.index})!")
        if self.degree < 1:
            raise InvalidGeneratorError(f"Generator {self.name} must have a positive degree, not {self.degree}!")

    @property
    def is_odd(self) -> bool:
        return self.degree % 2 == 1

    @property
    def is_even(self) -> bool:
        return self.degree % 2 == 0

    def __str__(self) -> str:
        return f"{self.name}:{self.degree}"


Generators = tuple[Generator, ...]


def make_generators(declarations: Iterable[tuple[str, int]]) -> Generators:
    """Build a generator list from (name, degree) pairs, indexing them in the given order."""
    generators = tuple(Generator(name, i, degree) for i, (name, degree) in enumerate(declarations))
    check_generators(generators)
    return generators


def check_generators(generators: Sequence[Generator]) -> None:
    """Raise if names are not unique or indices are not contiguous from 0."""
    seen = set[str]()

    for i, gen in enumerate(generators):
        if gen.index != i:
            raise InvalidGeneratorError(f"Generator {gen.name} sits at position {i} but has index {gen.index}!")
        if gen.name in seen:
            raise InvalidGeneratorError(f"Generator name {gen.name} is used twice!")
        seen.add(gen.name)


@cache
def _odd_flags(generators: Generators) -> tuple[bool, ...]:
    return tuple(gen.is_odd for gen in generators)


def monomial_degree(generators: Generators, monomial: Monomial) -> int:
    return sum(e * gen.degree for e, gen in zip(monomial, generators))


def word_length(monomial: Monomial) -> int:
    return sum(monomial)


def koszul_sign(deg_a: int, deg_b: int) -> int:
    """Sign picked up when swapping homogeneous elements of the given degrees."""
    return -1 if (deg_a * deg_b) % 2 else 1


def term_order_key(generators: Generators, monomial: Monomial) -> tuple[int, tuple[int, ...]]:
    """Graded-lexicographic key: lower degree first, then larger exponents on earlier generators first."""
    return monomial_degree(generators, monomial), tuple(-e for e in monomial)


def normal_form(generators: Generators, raw_product: Iterable[tuple[int, int]]) -> tuple[int, Monomial | None]:
    """
    Bring an ordered product of generator powers into normal form.

    :param generators:      Ambient generator list.
    :param raw_product:     Factors as (generator index, exponent), in the order they are written.

    :returns:               The sign of the reordering and the sorted monomial,
                            or (0, None) when an odd generator appears more than once.
    """
    odd = _odd_flags(generators)
    exponents = [0] * len(generators)
    odd_sequence = list[int]()

    for index, exponent in raw_product:
        if not 0 <= index < len(generators):
            raise UnknownGeneratorError(index)
        if exponent < 0:
            raise ValueError(f"normal_form: 'Negative exponent {exponent} for generator {index}!'")
        if exponent == 0:
            continue

        if odd[index]:
            if exponent > 1 or exponents[index]:
                return 0, None
            odd_sequence.append(index)

        exponents[index] += exponent

    inversions = sum(
        1 for i, a in enumerate(odd_sequence) for b in odd_sequence[i + 1:] if a > b
    )

    return (-1 if inversions % 2 else 1), tuple(exponents)


def multiply_monomials(generators: Generators, a: Monomial, b: Monomial) -> tuple[int, Monomial | None]:
    """Product of two normal-form monomials, with the Koszul sign of the reordering."""
    odd = _odd_flags(generators)
    sign = 1
    # Number of odd factors of `a` sitting right of the current index.
    later = 0

    for j in range(len(a) - 1, -1, -1):
        if not odd[j]:
            continue
        if b[j]:
            if a[j]:
                return 0, None
            if later % 2:
                sign = -sign
        if a[j]:
            later += 1

    return sign, tuple(x + y for x, y in zip(a, b))


@cache
def basis_of_degree(generators: Generators, k: int) -> tuple[Monomial, ...]:
    """
    All normal-form monomials of total degree exactly `k`.

    Exponent vectors are counted in a bounded multi-radix fashion:
    odd exponents are capped at 1 and the exponent of an even generator of degree d at k // d.
    The order is graded-lexicographic, which for a single degree means descending lexicographic
    order of the exponent tuples.
    """
    if k < 0:
        return ()

    n = len(generators)
    out = list[Monomial]()
    exponents = [0] * n

    def _fill(i: int, remaining: int) -> None:
        if i == n:
            if remaining == 0:
                out.append(tuple(exponents))
            return

        deg = generators[i].degree
        cap = remaining // deg

        if generators[i].is_odd:
            cap = min(cap, 1)

        for e in range(cap, -1, -1):
            exponents[i] = e
            _fill(i + 1, remaining - e * deg)

        exponents[i] = 0

    _fill(0, k)

    return tuple(out)


@cache
def basis_index(generators: Generators, k: int) -> Mapping[Monomial, int]:
    """Position of every degree-`k` monomial in :py:func:`basis_of_degree`."""
    return MappingProxyType({m: i for i, m in enumerate(basis_of_degree(generators, k))})


class GradedElement:
    """
    A finite rational linear combination of normal-form monomials.

    Instances are immutable: arithmetic always returns new elements.
    Zero coefficients are never stored and coefficients are kept as reduced fractions.

    :param generators:      The ambient generator list.
    :param terms:           Mapping of monomial to coefficient. Zero coefficients are dropped.
    """

    __slots__ = ('generators', '_terms', '_hash')

    generators: Generators
    _terms: dict[Monomial, Fraction]
    _hash: int | None

    def __init__(self, generators: Generators, terms: Mapping[Monomial, Rational] | None = None) -> None:
        odd = _odd_flags(generators)
        clean = dict[Monomial, Fraction]()

        for mono, coeff in (terms or {}).items():
            if len(mono) != len(generators):
                raise GeneratorMismatchError(
                    f"Monomial {mono} has {len(mono)} exponents but there are {len(generators)} generators!"
                )
            if any(e < 0 for e in mono):
                raise ValueError(f"GradedElement: 'Negative exponent in {mono}!'")
            if any(o and e > 1 for o, e in zip(odd, mono)):
                # The square of an odd generator vanishes.
                continue

            value = clean.get(mono, Fraction(0)) + Fraction(coeff)

            if value:
                clean[mono] = value
            else:
                clean.pop(mono, None)

        self.generators = generators
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, generators: Generators, terms: dict[Monomial, Fraction]) -> GradedElement:
        # Trusted constructor: `terms` is already in normal form with no zeros.
        element = object.__new__(cls)
        element.generators = generators
        element._terms = terms
        element._hash = None
        return element

    @classmethod
    def zero(cls, generators: Generators) -> GradedElement:
        return cls._wrap(generators, {})

    @classmethod
    def constant(cls, generators: Generators, value: Rational = 1) -> GradedElement:
        value = Fraction(value)
        return cls._wrap(generators, {(0,) * len(generators): value} if value else {})

    @classmethod
    def one(cls, generators: Generators) -> GradedElement:
        return cls.constant(generators, 1)

    @classmethod
    def generator(cls, generators: Generators, which: int | str) -> GradedElement:
        """The element given by a single generator, by index or by name."""
        index = _lookup(generators, which)
        return cls.monomial(generators, tuple(int(i == index) for i in range(len(generators))))

    @classmethod
    def monomial(cls, generators: Generators, monomial: Monomial, coeff: Rational = 1) -> GradedElement:
        return cls(generators, {monomial: coeff})

    @classmethod
    def from_factors(
        cls, generators: Generators, factors: Iterable[tuple[int, int]], coeff: Rational = 1
    ) -> GradedElement:
        """Element for an ordered product of generator powers, signs normalised."""
        sign, mono = normal_form(generators, factors)

        if not sign or mono is None:
            return cls.zero(generators)

        return cls._wrap(generators, {mono: sign * Fraction(coeff)} if coeff else {})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in graded-lexicographic order."""
        return sorted(self._terms.items(), key=lambda t: term_order_key(self.generators, t[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def degrees(self) -> set[int]:
        return {monomial_degree(self.generators, m) for m in self._terms}

    def is_homogeneous(self, k: int | None = None) -> bool:
        """Whether every monomial has the same degree (`k`, when given). Zero is homogeneous of every degree."""
        degrees = self.degrees()

        if k is None:
            return len(degrees) <= 1

        return degrees <= {k}

    @property
    def degree(self) -> int | None:
        """Degree of a homogeneous element, None for zero."""
        degrees = self.degrees()

        if not degrees:
            return None
        if len(degrees) > 1:
            raise NotHomogeneousError(message=f"{format_element(self)} is not homogeneous!")

        return degrees.pop()

    def homogeneous_component(self, k: int) -> GradedElement:
        return self._wrap(
            self.generators, {m: c for m, c in self._terms.items() if monomial_degree(self.generators, m) == k}
        )

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self._terms.get(monomial, Fraction(0))

    def scale(self, value: Rational) -> GradedElement:
        value = Fraction(value)

        if not value:
            return self.zero(self.generators)

        return self._wrap(self.generators, {m: c * value for m, c in self._terms.items()})

    def transport(self, generators: Generators, positions: Sequence[int | None]) -> GradedElement:
        """
        Rewrite the element over another generator list.

        :param generators:      Target generator list.
        :param positions:       New index of every current generator (None if it disappears).
                                Positions must be increasing so no reordering sign appears.
        """
        kept = [p for p in positions if p is not None]

        if any(b <= a for a, b in zip(kept, kept[1:])):
            raise ValueError("transport: 'Positions must be strictly increasing!'")

        out = dict[Monomial, Fraction]()

        for mono, coeff in self._terms.items():
            exponents = [0] * len(generators)

            for old, e in enumerate(mono):
                if not e:
                    continue

                new = positions[old]

                if new is None:
                    raise GeneratorMismatchError(
                        f"{format_element(self)} uses {self.generators[old].name}, "
                        "which does not exist in the target generator list!"
                    )

                exponents[new] = e

            out[tuple(exponents)] = coeff

        return self._wrap(generators, out)

    def _check(self, other: GradedElement) -> None:
        if self.generators is not other.generators and self.generators != other.generators:
            raise GeneratorMismatchError

    def __add__(self, other: GradedElement) -> GradedElement:
        return add_scaled(self, 1, other)

    def __sub__(self, other: GradedElement) -> GradedElement:
        return add_scaled(self, -1, other)

    def __neg__(self) -> GradedElement:
        return self.scale(-1)

    def __mul__(self, other: GradedElement | Rational) -> GradedElement:
        if isinstance(other, GradedElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other: Rational) -> GradedElement:
        return self.scale(other)

    def __pow__(self, exponent: int) -> GradedElement:
        result = self.one(self.generators)

        for _ in range(exponent):
            result = multiply(result, self)

        return result

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self.generators == other.generators and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.generators, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"GradedElement({format_element(self)!r})"

    def __str__(self) -> str:
        return format_element(self)


def _lookup(generators: Generators, which: int | str) -> int:
    if isinstance(which, int):
        if not 0 <= which < len(generators):
            raise UnknownGeneratorError(which)
        return which

    for gen in generators:
        if gen.name == which:
            return gen.index

    raise UnknownGeneratorError(which)


def multiply(a: GradedElement, b: GradedElement) -> GradedElement:
    """Product in ⋀V: bilinear extension of the monomial product, Koszul signs included."""
    a._check(b)

    gens = a.generators
    out = dict[Monomial, Fraction]()

    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            sign, mono = multiply_monomials(gens, ma, mb)

            if not sign or mono is None:
                continue

            value = out.get(mono, Fraction(0)) + (ca * cb if sign > 0 else -ca * cb)

            if value:
                out[mono] = value
            else:
                del out[mono]

    return GradedElement._wrap(gens, out)


def add_scaled(a: GradedElement, c: Rational, b: GradedElement) -> GradedElement:
    """Return a + c·b, pruning zero coefficients."""
    a._check(b)

    c = Fraction(c)
    out = dict(a._terms)

    if c:
        for mono, coeff in b._terms.items():
            value = out.get(mono, Fraction(0)) + c * coeff

            if value:
                out[mono] = value
            else:
                del out[mono]

    return GradedElement._wrap(a.generators, out)


def format_monomial(generators: Generators, monomial: Monomial) -> str:
    """Canonical text of a monomial, e.g. ``x^2*y1``; the unit monomial prints as ``1``."""
    factors = [
        gen.name if e == 1 else f"{gen.name}^{e}"
        for gen, e in zip(generators, monomial) if e
    ]
    return '*'.join(factors) or '1'


def format_element(element: GradedElement) -> str:
    """
    Canonical text of an element.

    Terms are listed in graded-lexicographic order with explicit signs between them,
    a leading minus is written as ``- `` and unit coefficients are omitted.
    Example: ``- 5/3*x^2 + x*y1``.
    """
    if element.is_zero():
        return '0'

    parts = list[str]()

    for i, (mono, coeff) in enumerate(element.sorted_terms()):
        magnitude = abs(coeff)
        body = format_monomial(element.generators, mono)

        if body == '1':
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude}*{body}"

        if i == 0:
            parts.append(f"- {text}" if coeff < 0 else text)
        else:
            parts.append(f"{'-' if coeff < 0 else '+'} {text}")

    return ' '.join(parts)
