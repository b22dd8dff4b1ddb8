from __future__ import annotations

import pickle

import pytest
from hypothesis import given, settings, strategies as st

from sullivan import (
    CORPUS_NAMES, GeneratorMismatchError, GradedElement, InvalidModelError, SullivanModel, UnknownGeneratorError,
    ViolationKind, apply_differential, build_named_model, classify_model, hyperelliptic_decomposition,
    make_generators, model_invariants, parse_model, validate_model
)

from .conftest import homogeneous_elements, minimal_models, thorough

W0 = build_named_model('thmD:n2p3:W0')


@pytest.mark.parametrize('name', CORPUS_NAMES)
def test_corpus_models_validate(name: str) -> None:
    assert validate_model(build_named_model(name)).ok


def test_sphere_differential(sphere2: SullivanModel) -> None:
    x, y = sphere2.elements()

    assert sphere2.d('x').is_zero()
    assert sphere2.d('y') == x ** 2
    assert apply_differential(sphere2, x * y) == x ** 3
    assert apply_differential(sphere2, y * x) == x ** 3


def test_d_squared_violation(broken_text: str) -> None:
    report = validate_model(parse_model(broken_text, 'broken'))

    assert not report.ok
    assert [v.generator for v in report.of_kind(ViolationKind.D_SQUARED)] == ['z']
    assert [v.generator for v in report.of_kind(ViolationKind.DEGREE)] == ['z']
    assert 'x^3' in report.of_kind(ViolationKind.D_SQUARED)[0].detail


def test_minimality_violation() -> None:
    model = SullivanModel.from_expressions([('x', 2), ('y', 1)], {'y': 'x'})
    report = validate_model(model)

    assert [v.kind for v in report.violations] == [ViolationKind.MINIMALITY]


def test_triangularity_violation() -> None:
    model = SullivanModel.from_expressions([('y', 3), ('x', 2)], {'y': 'x^2'})

    assert [v.kind for v in validate_model(model).violations] == [ViolationKind.TRIANGULARITY]

    with pytest.raises(GeneratorMismatchError):
        model.truncate(1)


def test_validation_collects_everything() -> None:
    model = SullivanModel.from_expressions([('x', 2), ('y', 3), ('z', 3)], {'y': 'x^2', 'z': 'x'})
    report = validate_model(model)

    assert {v.kind for v in report.violations} == {ViolationKind.DEGREE, ViolationKind.MINIMALITY}
    assert classify_model(model).minimal is False


@thorough
@given(minimal_models(), st.data())
def test_leibniz_rule(model: SullivanModel, data: st.DataObject) -> None:
    x, p = data.draw(homogeneous_elements(model.generators, max_degree=6))
    y, _ = data.draw(homogeneous_elements(model.generators, max_degree=6))
    sign = -1 if p % 2 else 1

    expected = apply_differential(model, x) * y + sign * (x * apply_differential(model, y))

    assert apply_differential(model, x * y) == expected


@thorough
@given(minimal_models(), st.data())
def test_d_squared_vanishes(model: SullivanModel, data: st.DataObject) -> None:
    x, _ = data.draw(homogeneous_elements(model.generators))
    assert apply_differential(model, apply_differential(model, x)).is_zero()


@settings(max_examples=50, deadline=None)
@given(homogeneous_elements(W0.generators, max_degree=14))
def test_d_squared_vanishes_on_corpus_model(a: tuple[GradedElement, int]) -> None:
    x, _ = a
    assert apply_differential(W0, apply_differential(W0, x)).is_zero()


@pytest.mark.parametrize(('name', 'pure', 'hyperelliptic', 'odd_generated'), [
    ('sphere:2', True, True, False),
    ('sphere:3', True, True, True),
    ('cpn:3', True, True, False),
    ('product:sphere:3,sphere:5', True, True, True),
    ('oddtower:3,3,5', False, False, True),
    ('thmD:n1p3', True, True, False),
    ('thmD:n2p3:W0', False, True, False),
    ('hyperelliptic:sample', False, True, False),
])
def test_classification(name: str, pure: bool, hyperelliptic: bool, odd_generated: bool) -> None:
    classification = classify_model(build_named_model(name))

    assert classification.minimal
    assert (classification.pure, classification.hyperelliptic, classification.odd_generated) == (
        pure, hyperelliptic, odd_generated
    )


def test_hyperelliptic_decomposition(sample: SullivanModel) -> None:
    splits = {split.generator: split for split in hyperelliptic_decomposition(sample)}
    x, _, y2, y3, _ = sample.elements()

    assert list(splits) == ['y1', 'y2', 'y3', 'z']
    assert splits['z'].polynomial == x ** 4
    assert splits['z'].mixed == x * y2 * y3
    assert splits['z'].remainder.is_zero()
    assert splits['y1'].polynomial == x ** 2


def test_exterior_remainder(tower335: SullivanModel) -> None:
    split = hyperelliptic_decomposition(tower335)[-1]

    assert split.generator == 'y3'
    assert split.remainder == tower335.element('y1') * tower335.element('y2')


@pytest.mark.parametrize(('name', 'n', 'p', 'fd'), [
    ('sphere:2', 1, 0, 2),
    ('sphere:5', 0, 1, 5),
    ('cpn:4', 1, 0, 8),
    ('oddtower:3,3,5', 0, 3, 11),
    ('thmD:n1p3', 1, 3, 11),
    ('thmD:n2p3:W0', 2, 3, 19),
    ('thmD:n3p4:W2zero', 3, 4, 18),
    ('hyperelliptic:sample', 1, 3, 15),
])
def test_model_invariants(name: str, n: int, p: int, fd: int) -> None:
    invariants = model_invariants(build_named_model(name))

    assert (invariants.n, invariants.p, invariants.fd_predicted) == (n, p, fd)
    assert invariants.chi_pi == -p
    assert invariants.dim_v == 2 * n + p
    assert invariants.fh_ok


def test_truncate(tower335: SullivanModel) -> None:
    sub = tower335.truncate(2)

    assert sub.name == 'oddtower:3,3,5[:2]'
    assert [g.name for g in sub.generators] == ['y1', 'y2']
    assert all(dg.is_zero() for dg in sub.differential)

    with pytest.raises(ValueError):
        tower335.truncate(4)


def test_product() -> None:
    model = SullivanModel.product(build_named_model('sphere:3'), build_named_model('sphere:5'))

    assert [str(g) for g in model.generators] == ['y_1:3', 'y_2:5']
    assert model.name == 'sphere:3 x sphere:5'
    assert model.differential == build_named_model('product:sphere:3,sphere:5').differential

    with pytest.raises(InvalidModelError):
        SullivanModel.product()


def test_product_differential() -> None:
    model = build_named_model('product:sphere:2,sphere:4')

    assert model.d('y_2') == model.element('x_2') ** 2
    assert model.d('y_1') == model.element('x_1') ** 2


def test_model_errors() -> None:
    gens = make_generators([('x', 2), ('y', 3)])

    with pytest.raises(InvalidModelError):
        SullivanModel(gens, [GradedElement.zero(gens)])

    with pytest.raises(UnknownGeneratorError):
        SullivanModel.from_differentials(gens, {'z': GradedElement.zero(gens)})

    with pytest.raises(GeneratorMismatchError):
        SullivanModel(gens, [GradedElement.zero(gens), GradedElement.zero(make_generators([('x', 2)]))])


def test_pickle_round_trip(sample: SullivanModel) -> None:
    restored = pickle.loads(pickle.dumps(sample))

    assert restored == sample
    assert apply_differential(restored, restored.element('z')) == sample.d('z')
