from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sullivan import (
    GeneratorMismatchError, GradedElement, InvalidGeneratorError, NotHomogeneousError, UnknownGeneratorError,
    basis_of_degree, format_element, koszul_sign, make_generators, multiply_monomials, normal_form
)

from .conftest import MIXED, elements, homogeneous_elements


def g(name: str) -> GradedElement:
    return GradedElement.generator(MIXED, name)


def test_odd_generators_anticommute() -> None:
    assert g('b') * g('c') == -(g('c') * g('b'))
    assert (g('b') * g('b')).is_zero()
    assert (g('b') ** 2).is_zero()


def test_even_generators_commute() -> None:
    assert g('a') * g('e') == g('e') * g('a')
    assert g('a') ** 3 == g('a') * g('a') * g('a')


def test_odd_square_is_dropped_on_construction() -> None:
    assert GradedElement(MIXED, {(0, 2, 0, 0, 0): 1}).is_zero()


def test_normal_form_sign() -> None:
    # c*b = -b*c
    assert normal_form(MIXED, [(2, 1), (1, 1)]) == (-1, (0, 1, 1, 0, 0))
    assert normal_form(MIXED, [(1, 1), (0, 2), (1, 1)]) == (0, None)
    assert normal_form(MIXED, [(4, 1), (0, 1), (2, 1)]) == (-1, (1, 0, 1, 0, 1))


def test_normal_form_unknown_index() -> None:
    with pytest.raises(UnknownGeneratorError):
        normal_form(MIXED, [(7, 1)])


def test_multiply_monomials() -> None:
    f_times_b = multiply_monomials(MIXED, (0, 0, 0, 0, 1), (0, 1, 0, 0, 0))
    assert f_times_b == (-1, (0, 1, 0, 0, 1))
    assert multiply_monomials(MIXED, (0, 1, 0, 0, 0), (0, 1, 0, 0, 0)) == (0, None)
    assert multiply_monomials(MIXED, (1, 0, 0, 0, 0), (2, 0, 0, 0, 0)) == (1, (3, 0, 0, 0, 0))


words = st.lists(st.tuples(st.integers(0, len(MIXED) - 1), st.integers(1, 2)), max_size=5)


@settings(max_examples=500)
@given(words, words)
def test_normal_form_is_multiplicative(u: list[tuple[int, int]], v: list[tuple[int, int]]) -> None:
    (su, mu), (sv, mv) = normal_form(MIXED, u), normal_form(MIXED, v)

    if mu is None or mv is None:
        assert normal_form(MIXED, u + v) == (0, None)
        return

    sm, m = multiply_monomials(MIXED, mu, mv)

    assert normal_form(MIXED, u + v) == ((su * sv * sm, m) if m is not None else (0, None))


def test_from_factors() -> None:
    assert GradedElement.from_factors(MIXED, [(2, 1), (1, 1)], 3) == -3 * (g('b') * g('c'))


def test_koszul_sign() -> None:
    assert koszul_sign(3, 5) == -1
    assert koszul_sign(2, 3) == 1
    assert koszul_sign(4, 4) == 1


@settings(max_examples=1000, deadline=None)
@given(homogeneous_elements(), homogeneous_elements())
def test_graded_commutativity(a: tuple[GradedElement, int], b: tuple[GradedElement, int]) -> None:
    (x, p), (y, q) = a, b
    assert x * y == koszul_sign(p, q) * (y * x)


@settings(max_examples=1000, deadline=None)
@given(elements(), elements(), elements())
def test_associativity(x: GradedElement, y: GradedElement, z: GradedElement) -> None:
    assert (x * y) * z == x * (y * z)


@given(elements(), elements(), elements())
def test_distributivity(x: GradedElement, y: GradedElement, z: GradedElement) -> None:
    assert x * (y + z) == x * y + x * z


@given(elements())
def test_unit_and_zero(x: GradedElement) -> None:
    one, zero = GradedElement.one(MIXED), GradedElement.zero(MIXED)

    assert x * one == x
    assert one * x == x
    assert (x * zero).is_zero()
    assert (x - x).is_zero()


@given(homogeneous_elements())
def test_homogeneous_degree(a: tuple[GradedElement, int]) -> None:
    x, k = a
    assert x.degree == (k if x else None)
    assert x.is_homogeneous(k)


def test_mixed_degree_is_not_homogeneous() -> None:
    x = g('a') + g('b')

    assert not x.is_homogeneous()
    assert x.degrees() == {2, 3}

    with pytest.raises(NotHomogeneousError):
        x.degree


def test_basis_of_degree() -> None:
    assert basis_of_degree(MIXED, 6) == ((3, 0, 0, 0, 0), (1, 0, 0, 1, 0), (0, 1, 1, 0, 0))
    assert basis_of_degree(MIXED, 1) == ()
    assert basis_of_degree(MIXED, 0) == ((0, 0, 0, 0, 0),)
    assert basis_of_degree(MIXED, -1) == ()


def test_format_element() -> None:
    gens = make_generators([('x', 2), ('y1', 3)])
    x, y1 = GradedElement.generator(gens, 'x'), GradedElement.generator(gens, 'y1')

    assert format_element(x * y1 - Fraction(5, 3) * x ** 2) == "- 5/3*x^2 + x*y1"
    assert format_element(GradedElement.zero(gens)) == '0'
    assert format_element(GradedElement.one(gens)) == '1'
    assert format_element(GradedElement.constant(gens, Fraction(3, 2))) == '3/2'
    assert str(2 * x ** 2 - y1) == '- y1 + 2*x^2'


def test_generator_mismatch() -> None:
    other = make_generators([('x', 2)])

    with pytest.raises(GeneratorMismatchError):
        g('a') + GradedElement.generator(other, 'x')

    with pytest.raises(GeneratorMismatchError):
        GradedElement(MIXED, {(1,): 1})


def test_invalid_generators() -> None:
    with pytest.raises(InvalidGeneratorError):
        make_generators([('x', 2), ('x', 3)])

    with pytest.raises(InvalidGeneratorError):
        make_generators([('x', 0)])

    with pytest.raises(InvalidGeneratorError):
        make_generators([('2x', 2)])


def test_unknown_generator_lookup() -> None:
    with pytest.raises(UnknownGeneratorError):
        GradedElement.generator(MIXED, 'z')


def test_transport() -> None:
    small = make_generators([('b', 3), ('f', 5)])
    element = g('b') * g('f')

    assert element.transport(small, [None, 0, None, None, 1]) == GradedElement(small, {(1, 1): 1})

    with pytest.raises(GeneratorMismatchError):
        (g('a') * g('b')).transport(small, [None, 0, None, None, 1])
