from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from sullivan import (
    CohomologyClass, CohomologyReport, Evidence, LengthMismatchError, NotACocycleError,
    OddFormalDimensionError, SullivanModel, WindowError, betti_table, build_named_model, class_coordinates,
    cosymplectic_profile, cup_class, default_window, dense_betti_numbers, koszul_sign, lefschetz_check
)

from .conftest import cohomology_classes, corpus_params, minimal_models

ORACLE_MODELS = [
    *(f"sphere:{k}" for k in range(2, 8)),
    *(f"cpn:{m}" for m in range(1, 6)),
    'product:sphere:3,sphere:5', 'product:sphere:2,sphere:4', 'oddtower:3,3,5',
]


@pytest.mark.parametrize('name', ORACLE_MODELS)
def test_betti_numbers_match_dense_oracle(name: str) -> None:
    model = build_named_model(name)
    window = default_window(model)

    assert betti_table(model, up_to=window).betti == dense_betti_numbers(model, window)


def test_sphere(sphere2: SullivanModel) -> None:
    report = betti_table(sphere2, up_to=5)

    assert report.betti == [1, 0, 1, 0, 0, 0]
    assert (report.total_dim, report.chi_c, report.fd_observed) == (2, 2, 2)
    assert report.duality_ok
    assert report.evidence is Evidence.SUPPORTED
    assert report.slice(2).class_representatives == (sphere2.element('x'),)


@pytest.mark.parametrize('k', range(2, 8))
def test_spheres(k: int) -> None:
    report = betti_table(build_named_model(f"sphere:{k}"), assume_elliptic=True)

    assert report.total_dim == 2
    assert report.fd_observed == k
    assert report.chi_c == (2 if k % 2 == 0 else 0)


@pytest.mark.parametrize('m', range(1, 6))
def test_complex_projective_spaces(m: int) -> None:
    report = betti_table(build_named_model(f"cpn:{m}"), up_to=2 * m + 3)

    assert report.betti == [1, 0] * (m + 1) + [0] * 2
    assert report.total_dim == m + 1
    assert report.fd_observed == 2 * m
    assert report.evidence is Evidence.SUPPORTED


def test_odd_tower_cohomology(tower335: SullivanModel) -> None:
    report = betti_table(tower335, up_to=default_window(tower335))

    assert report.total_dim == 6
    assert report.fd_observed == 11
    assert report.chi_c == 0
    assert report.duality_ok


def test_window_is_required(sphere2: SullivanModel) -> None:
    with pytest.raises(WindowError):
        betti_table(sphere2)

    with pytest.raises(WindowError):
        betti_table(sphere2, up_to=0)

    assert betti_table(sphere2, assume_elliptic=True).window == 2


def test_window_limits_slices(sphere2: SullivanModel) -> None:
    report = betti_table(sphere2, up_to=3)

    with pytest.raises(WindowError):
        report.slice(4)


def test_evidence_against_ellipticity() -> None:
    # H = Q[x] ⊗ ⋀(y) is infinite-dimensional
    model = SullivanModel.from_expressions([('x', 2), ('y', 5)], {}, 'free')

    assert betti_table(model, up_to=8).evidence is Evidence.CONTRADICTED
    assert betti_table(model, up_to=4).evidence is Evidence.UNCHECKED


def test_representatives_are_optional(sphere2: SullivanModel) -> None:
    report = betti_table(sphere2, up_to=4, representatives=False)

    assert report.betti == [1, 0, 1, 0, 0]
    assert not report.has_representatives
    assert report.slice(2).class_representatives == ()


def test_cup_products() -> None:
    model = build_named_model('cpn:2')
    report = betti_table(model, up_to=6)
    x = CohomologyClass(2, class_coordinates(report, model.element('x')))

    assert x.coordinates == (Fraction(1),)
    assert cup_class(model, report, x, x) == CohomologyClass(4, class_coordinates(report, model.element('x') ** 2))
    assert not cup_class(model, report, x, x).is_zero()
    assert cup_class(model, report, cup_class(model, report, x, x), x).is_zero()


def test_non_cocycle_has_no_class(sphere2: SullivanModel) -> None:
    report = betti_table(sphere2, up_to=3)

    with pytest.raises(NotACocycleError):
        class_coordinates(report, sphere2.element('y'))


@pytest.mark.parametrize('m', [1, 2, 3])
def test_lefschetz_on_complex_projective_spaces(m: int) -> None:
    model = build_named_model(f"cpn:{m}")
    report = betti_table(model, up_to=2 * m)
    w = CohomologyClass(2, (Fraction(1),))

    assert lefschetz_check(model, report, w, m).passed


def test_lefschetz_fails_on_sphere_product() -> None:
    model = build_named_model('product:sphere:2,sphere:4')
    report = betti_table(model, up_to=6)
    w = CohomologyClass(2, (Fraction(1),))

    result = lefschetz_check(model, report, w, 3)

    assert not result.passed
    assert result.failing_k == 1


def test_lefschetz_needs_even_dimension() -> None:
    model = build_named_model('sphere:3')
    report = betti_table(model, up_to=3)

    with pytest.raises(OddFormalDimensionError):
        lefschetz_check(model, report, CohomologyClass(2, ()), 1)


def test_cosymplectic_profile() -> None:
    assert cosymplectic_profile([1, 1, 1, 1], 1)
    assert not cosymplectic_profile([1, 0, 0, 1], 1)
    assert cosymplectic_profile([1, 2, 2, 1], 1)
    assert not cosymplectic_profile([1, 2, 1, 1], 1)

    with pytest.raises(LengthMismatchError):
        cosymplectic_profile([1, 1, 1], 1)


@pytest.mark.parametrize('name', corpus_params())
def test_corpus_models_satisfy_duality(name: str) -> None:
    model = build_named_model(name)
    report = betti_table(model, up_to=default_window(model), representatives=False)

    assert report.duality_ok
    assert report.fd_observed == report.fd_predicted
    assert report.evidence is Evidence.SUPPORTED


def test_positive_homotopy_euler_characteristic_contradicts_ellipticity() -> None:
    # ⋀(x) with |x| = 2 has H = Q[x]
    model = SullivanModel.from_expressions([('x', 2)], {}, 'polynomial')
    report = betti_table(model, up_to=default_window(model))

    assert default_window(model) == 4
    assert report.betti == [1, 0, 1, 0, 1]
    assert report.evidence is Evidence.CONTRADICTED


@settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
@given(minimal_models(max_generators=5), st.integers(1, 14))
def test_betti_numbers_match_dense_oracle_on_random_models(model: SullivanModel, window: int) -> None:
    assert betti_table(model, up_to=window, representatives=False).betti == dense_betti_numbers(model, window)


CUP_WINDOW = 10


def _occupied_degrees(report: CohomologyReport, budget: int) -> list[int]:
    return [k for k in range(budget + 1) if report.slice(k).betti]


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
@given(minimal_models(), st.data())
def test_cup_product_is_graded_commutative(model: SullivanModel, data: st.DataObject) -> None:
    report = betti_table(model, up_to=CUP_WINDOW)
    p = data.draw(st.sampled_from(_occupied_degrees(report, CUP_WINDOW)))
    q = data.draw(st.sampled_from(_occupied_degrees(report, CUP_WINDOW - p)))
    a, b = data.draw(cohomology_classes(report, p)), data.draw(cohomology_classes(report, q))

    ab, ba = cup_class(model, report, a, b), cup_class(model, report, b, a)

    assert ab.coordinates == tuple(koszul_sign(p, q) * c for c in ba.coordinates)


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
@given(minimal_models(), st.data())
def test_cup_product_is_associative(model: SullivanModel, data: st.DataObject) -> None:
    report = betti_table(model, up_to=CUP_WINDOW)
    p = data.draw(st.sampled_from(_occupied_degrees(report, CUP_WINDOW)))
    q = data.draw(st.sampled_from(_occupied_degrees(report, CUP_WINDOW - p)))
    r = data.draw(st.sampled_from(_occupied_degrees(report, CUP_WINDOW - p - q)))
    a, b, c = (data.draw(cohomology_classes(report, k)) for k in (p, q, r))

    def cup(x: CohomologyClass, y: CohomologyClass) -> CohomologyClass:
        return cup_class(model, report, x, y)

    assert cup(cup(a, b), c) == cup(a, cup(b, c))
