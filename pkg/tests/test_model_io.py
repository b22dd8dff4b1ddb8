from __future__ import annotations

import json
from fractions import Fraction
from functools import cache
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from sullivan import (
    CORPUS_NAMES, DegreeSequence, DuplicateDeclarationError, GradedElement, MalformedReferenceError,
    ModelParseError, ModelSyntaxError, ReportFormat, SullivanModel, UnknownGeneratorError, betti_table,
    build_named_model, check_hilali, emit_cohomology, emit_report, emit_tower, emit_validation, enumerate_fh,
    format_element, format_enumeration, format_reference, make_generators, odd_tower_check, parse_expression,
    parse_model, read_model, read_reference, serialize_model, validate_model, write_model
)
from sullivan.corpus import SLOW_MODELS

GOLDEN = Path(__file__).parent / 'golden'

GENS = make_generators([('x', 2), ('y1', 3), ('y2', 3)])

MUTATION_ALPHABET = 'xyz0123456789^*+-/ =#\nabcd_'


def test_parse_expression() -> None:
    x, y1, y2 = (GradedElement.generator(GENS, name) for name in ('x', 'y1', 'y2'))

    assert parse_expression('x^2 - 3/2*x*y1', GENS) == x ** 2 - Fraction(3, 2) * (x * y1)
    assert parse_expression('- 5/3*x^2 + x*y1', GENS) == x * y1 - Fraction(5, 3) * x ** 2
    assert parse_expression('y2*y1', GENS) == -(y1 * y2)
    assert parse_expression('y1^2', GENS).is_zero()
    assert parse_expression('0', GENS).is_zero()
    assert parse_expression('2', GENS) == GradedElement.constant(GENS, 2)
    assert parse_expression('x^0*y1', GENS) == y1
    assert parse_expression('+x*x', GENS) == x ** 2


@pytest.mark.parametrize('text', ['- 5/3*x^2 + x*y1', 'x^4 - 2*x*y1*y2', '7/2'])
def test_expression_text_is_canonical(text: str) -> None:
    assert format_element(parse_expression(text, GENS)) == text


def test_expression_errors() -> None:
    with pytest.raises(UnknownGeneratorError, match='unknown generator z'):
        parse_expression('x*z', GENS)

    with pytest.raises(ModelSyntaxError):
        parse_expression('x^', GENS)

    with pytest.raises(ModelSyntaxError):
        parse_expression('1/0*x', GENS)


def test_parse_model() -> None:
    text = "# model: sphere:2\n\ngenerator x 2  # the even one\ngenerator y 3\nd y = x^2\n"
    model = parse_model(text)

    assert model == build_named_model('sphere:2')
    assert parse_model(text, 'renamed').name == 'renamed'
    assert parse_model("generator x 2\n").name == 'model'


def test_differentials_may_come_first() -> None:
    model = parse_model("d y = x^2\ngenerator x 2\ngenerator y 3\n", 'sphere:2')
    assert model == build_named_model('sphere:2')


def test_parity_is_not_a_parse_error() -> None:
    model = parse_model("generator x 2\ngenerator y 2\nd y = x\n")
    assert not validate_model(model).ok


def test_syntax_error_reports_the_line() -> None:
    with pytest.raises(ModelSyntaxError) as error:
        parse_model("generator x 2\ngenerator y three\n")

    assert error.value.line == 2
    assert 'line 2' in str(error.value)


@pytest.mark.parametrize(('text', 'line'), [
    ("generator x 2\ngenerator x 4\n", 2),
    ("generator x 2\ngenerator y 3\nd y = x^2\nd y = 0\n", 4),
])
def test_duplicate_declarations(text: str, line: int) -> None:
    with pytest.raises(DuplicateDeclarationError) as error:
        parse_model(text)

    assert error.value.line == line


def test_unknown_generators_in_model() -> None:
    with pytest.raises(UnknownGeneratorError) as error:
        parse_model("generator x 2\ngenerator y 3\nd y = z^2\n")

    assert error.value.line == 3

    with pytest.raises(UnknownGeneratorError):
        parse_model("generator x 2\nd w = x\n")

    with pytest.raises(ModelParseError):
        parse_model("generator x 2\ngenerator y 3\nd y = z^2\n")


@cache
def _corpus_text(name: str) -> str:
    return serialize_model(build_named_model(name))


@st.composite
def mutated_model_texts(draw: st.DrawFn) -> str:
    """A serialized corpus model with a few characters or lines changed."""
    text = _corpus_text(draw(st.sampled_from([name for name in CORPUS_NAMES if name not in SLOW_MODELS])))

    for _ in range(draw(st.integers(1, 3))):
        i = draw(st.integers(0, len(text) - 1))

        match draw(st.sampled_from(['delete', 'insert', 'replace', 'swap'])):
            case 'delete':
                text = text[:i] + text[i + 1:]
            case 'insert':
                text = text[:i] + draw(st.sampled_from(MUTATION_ALPHABET)) + text[i:]
            case 'replace':
                text = text[:i] + draw(st.sampled_from(MUTATION_ALPHABET)) + text[i + 1:]
            case 'swap':
                lines = text.splitlines(keepends=True)
                j, k = draw(st.integers(0, len(lines) - 1)), draw(st.integers(0, len(lines) - 1))
                lines[j], lines[k] = lines[k], lines[j]
                text = ''.join(lines)

    return text


@settings(max_examples=500, deadline=None)
@given(mutated_model_texts())
def test_mutated_model_text_parses_or_raises_parse_error(text: str) -> None:
    try:
        parse_model(text)
    except ModelParseError:
        pass


def test_invalid_generator_is_a_parse_error() -> None:
    with pytest.raises(ModelParseError):
        parse_model("generator x 0\n")


def test_serialize_round_trip(sample: SullivanModel) -> None:
    text = serialize_model(sample)

    assert text.startswith('# model: hyperelliptic:sample\n')
    assert 'd z = x^4 + x*y2*y3\n' in text
    assert parse_model(text) == sample


def test_read_and_write(tmp_path: Path, tower335: SullivanModel) -> None:
    path = write_model(tmp_path / 'tower.sul', tower335)

    assert read_model(path) == tower335
    assert read_model(path, 'other').name == 'other'

    bare = tmp_path / 'bare.sul'
    bare.write_text("generator y 3\n", encoding='utf-8')

    assert read_model(bare).name == 'bare'


def test_reference_rows() -> None:
    rows = read_reference("# comment\nfd=4: (2) | (5)\n\nfd=4: (2,2) | (3,3)  # trailing\nfd=3: () | (3)\n")

    assert rows == [DegreeSequence((2,), (5,), 4), DegreeSequence((2, 2), (3, 3), 4), DegreeSequence((), (3,), 3)]


@pytest.mark.parametrize('text', ['fd=4 (2) | (5)', 'fd=4: (2) (5)', 'fd=4: (2) | (5', 'fd=x: (2) | (5)'])
def test_malformed_reference(text: str) -> None:
    with pytest.raises(MalformedReferenceError):
        read_reference(text)


def test_format_reference() -> None:
    rows = list(enumerate_fh(6))
    text = format_reference(rows)

    assert text.startswith('# Degree sequences of elliptic models with formal dimension 6.\n')
    assert read_reference(text) == rows


def test_enumeration_golden() -> None:
    assert format_enumeration(enumerate_fh(4)) == (GOLDEN / 'enumerate_fd4.txt').read_text(encoding='utf-8')


def test_machine_report_golden(sphere2: SullivanModel) -> None:
    text = emit_report(check_hilali(sphere2), ReportFormat.MACHINE)

    assert text == (GOLDEN / 'sphere2.json').read_text(encoding='utf-8')
    assert list(json.loads(text)) == [
        'model_name', 'dim_v', 'chi_pi', 'betti', 'chi_c', 'fd_predicted', 'fd_observed', 'total_dim', 'window',
        'classification', 'hilali_holds', 'margin', 'theorems', 'ellipticity_evidence', 'tower',
    ]


def test_human_report(sphere2: SullivanModel) -> None:
    text = emit_report(check_hilali(sphere2))

    assert 'Hilali check: sphere:2' in text
    assert '2 ≤ 2 HOLDS' in text
    assert 'Theorems' in text
    assert '\x1b[' not in text


def test_report_with_tower(tower335: SullivanModel) -> None:
    document = json.loads(emit_report(check_hilali(tower335), 'machine'))

    assert [stage['i'] for stage in document['tower']] == [1, 2, 3]
    assert document['tower'][2]['ker_dim'] == 3
    assert document['tower'][2]['im_dim'] == 1
    assert 'odd tower of oddtower:3,3,5: holds' in emit_report(check_hilali(tower335))


def test_emit_tower(tower335: SullivanModel) -> None:
    document = json.loads(emit_tower(odd_tower_check(tower335), ReportFormat.MACHINE))

    assert document['holds'] and document['c1_holds']
    assert len(document['stages']) == 3


def test_emit_cohomology() -> None:
    report = betti_table(build_named_model('cpn:2'), up_to=4)
    document = json.loads(emit_cohomology(report, ReportFormat.MACHINE))

    assert document['betti'] == [1, 0, 1, 0, 1]
    assert document['representatives'] == {'0': ['1'], '2': ['x'], '4': ['x^2']}
    assert 'H^*(cpn:2)' in emit_cohomology(report)


def test_emit_validation(broken_text: str, sphere2: SullivanModel) -> None:
    assert emit_validation(validate_model(sphere2)) == 'sphere:2: valid minimal model\n'

    lines = emit_validation(validate_model(parse_model(broken_text, 'broken'))).splitlines()

    assert lines == [
        'broken: degree: z: dz = x*y has degree 5, expected 6',
        'broken: d-squared: z: d(dz) = x^3 is not zero',
    ]
