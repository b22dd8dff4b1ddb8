"""
Model files, reference tables and report rendering.

A model file lists generator declarations and differentials, one per line::

    # model: sphere:2
    generator x 2
    generator y 3
    d x = 0
    d y = x^2

Blank lines and ``#`` comments are ignored. Unlisted differentials are zero.
"""
from __future__ import annotations

import json
from fractions import Fraction
from io import StringIO
from pathlib import Path
from typing import TYPE_CHECKING, Any, Iterable, Sequence

from pyparsing import (
    Combine, DelimitedList, Group, Keyword, Optional, ParseBaseException, ParseException, ParseResults, Regex,
    StringEnd, Suppress, Word, ZeroOrMore, alphanums, alphas, nums, one_of
)
from rich import box
from rich.console import Console
from rich.table import Table
from rich.text import Text

from .algebra import Generators, GradedElement, format_element, make_generators
from .cohomology import CohomologyClass, CohomologyReport
from .degrees import AuditResult, DegreeSequence, format_degrees
from .exceptions import (
    DuplicateDeclarationError, InvalidGeneratorError, MalformedReferenceError, ModelParseError, ModelSyntaxError,
    UndeclaredGeneratorError
)
from .model import SullivanModel, ValidationReport
from .templates import (
    audit_extra, audit_missing, audit_summary, cohomology_summary, differential_line, generator_line, model_header,
    reference_header, reference_row, report_title, tower_summary, validation_ok, validation_violation, verdict_line
)
from .types import DEFAULT_LINE_WIDTH, EVIDENCE_NOTE, FilePath, ReportFormat

if TYPE_CHECKING:
    from .checks import TowerReport
    from .corpus import CorpusOutcome
    from .hilali import HilaliVerdict

__all__ = [
    'emit_cohomology', 'emit_corpus', 'emit_report', 'emit_tower', 'emit_validation',
    'format_audit', 'format_enumeration', 'format_reference',
    'parse_expression', 'parse_model', 'read_model', 'read_reference',
    'serialize_model', 'write_model'
]

_INT = Word(nums)
_NAME = Word(alphas + '_', alphanums + '_')

_FACTOR = Group(_NAME('name') + Optional(Suppress('^') + _INT('exponent')))
_MONOMIAL = Group(DelimitedList(_FACTOR, delim='*'))
_COEFFICIENT = Combine(_INT + Optional('/' + _INT))
_BODY = (_COEFFICIENT('coeff') + Optional(Suppress('*') + _MONOMIAL('mono'))) | _MONOMIAL('mono')

_FIRST_TERM = Group(Optional(one_of('+ -'), default='+')('sign') + _BODY)
_TERM = Group(one_of('+ -')('sign') + _BODY)
_EXPRESSION = _FIRST_TERM + ZeroOrMore(_TERM)

_GENERATOR_LINE = Keyword('generator')('kind') + _NAME('name') + _INT('degree')
_DIFFERENTIAL_LINE = Keyword('d')('kind') + _NAME('name') + Suppress('=') + Group(_EXPRESSION)('expression')
_MODEL_LINE = (_GENERATOR_LINE | _DIFFERENTIAL_LINE) + StringEnd()

_HEADER = Regex(r'#\s*model:\s*(?P<model>\S.*?)\s*$')

_DEGREES = Group(Suppress('(') + Optional(DelimitedList(_INT, delim=',')) + Suppress(')'))
_REFERENCE_ROW = (
    Suppress('fd') + Suppress('=') + _INT('fd') + Suppress(':') + _DEGREES('even') + Suppress('|') + _DEGREES('odd')
    + StringEnd()
)


def _element_from_terms(terms: ParseResults, generators: Generators, line: int | None) -> GradedElement:
    index = {g.name: g.index for g in generators}
    element = GradedElement.zero(generators)

    for term in terms:
        coeff = Fraction(term.get('coeff', '1'))

        if term['sign'] == '-':
            coeff = -coeff

        factors = list[tuple[int, int]]()

        for factor in term.get('mono', []):
            if (i := index.get(factor['name'])) is None:
                raise UndeclaredGeneratorError(factor['name'], line)
            if (exponent := int(factor.get('exponent', 1))) > 0:
                factors.append((i, exponent))

        element = element + GradedElement.from_factors(generators, factors, coeff)

    return element


def _parse_terms(text: str, line: int) -> ParseResults:
    try:
        return _EXPRESSION.parse_string(text, parse_all=True)
    except ParseBaseException as e:
        raise ModelSyntaxError(line, e.col, e.msg) from e


def parse_expression(text: str, generators: Generators, line: int | None = None) -> GradedElement:
    """
    Parse a polynomial such as ``x^2 - 3/2*x*y1``.

    :param text:            The expression. ``0`` is the zero element.
    :param generators:      Names resolve against these generators.
    :param line:            Line number reported in errors.
    """
    try:
        return _element_from_terms(_parse_terms(text, line or 1), generators, line)
    except ZeroDivisionError as e:
        raise ModelSyntaxError(line or 1, 1, 'zero denominator') from e


def _strip_comment(raw: str) -> str:
    return raw.split('#', 1)[0].strip()


def _header_name(text: str) -> str | None:
    """The name in the first ``# model: <name>`` comment line, if any."""
    for raw in text.splitlines():
        if not (line := raw.strip()).startswith('#'):
            continue

        try:
            return str(_HEADER.parse_string(line)['model'])
        except ParseException:
            continue

    return None


def parse_model(text: str, name: str | None = None) -> SullivanModel:
    """
    Parse a model file.

    Generators may be declared after the differentials that use them.
    Parity is not checked here: that is :py:func:`sullivan.model.validate_model`'s job.

    :param text:    The model file contents.
    :param name:    Model name. Falls back on the ``# model:`` header, then on ``'model'``.

    :raises ModelSyntaxError:           A line does not follow the grammar.
    :raises DuplicateDeclarationError:  A generator or a differential is declared twice.
    :raises UndeclaredGeneratorError:   A differential uses (or is given for) an undeclared generator.
    """
    declarations = list[tuple[str, int]]()
    declared = dict[str, int]()
    differentials = dict[str, tuple[ParseResults, int]]()

    for number, raw in enumerate(text.splitlines(), 1):
        if not (content := _strip_comment(raw)):
            continue

        try:
            parsed = _MODEL_LINE.parse_string(content, parse_all=True)
        except ParseBaseException as e:
            raise ModelSyntaxError(number, e.col, e.msg) from e

        if parsed['kind'] == 'generator':
            if parsed['name'] in declared:
                raise DuplicateDeclarationError('generator', parsed['name'], number)

            declared[parsed['name']] = number
            declarations.append((parsed['name'], int(parsed['degree'])))
        else:
            if parsed['name'] in differentials:
                raise DuplicateDeclarationError('differential', parsed['name'], number)

            differentials[parsed['name']] = (parsed['expression'], number)

    try:
        generators = make_generators(declarations)
    except InvalidGeneratorError as e:
        raise ModelParseError(str(e)) from e

    elements = dict[str, GradedElement]()

    for key, (terms, number) in differentials.items():
        if key not in declared:
            raise UndeclaredGeneratorError(key, number)

        try:
            elements[key] = _element_from_terms(terms, generators, number)
        except ZeroDivisionError as e:
            raise ModelSyntaxError(number, 1, 'zero denominator') from e

    return SullivanModel.from_differentials(generators, elements, name or _header_name(text) or 'model')


def serialize_model(model: SullivanModel) -> str:
    """Canonical text of a model; :py:func:`parse_model` reads it back to an equal model."""
    lines = [model_header.format(name=model.name)]
    lines += [generator_line.format(name=g.name, degree=g.degree) for g in model.generators]
    lines += [
        differential_line.format(name=g.name, expression=format_element(dg))
        for g, dg in zip(model.generators, model.differential)
    ]

    return '\n'.join(lines) + '\n'


def read_model(path: FilePath, name: str | None = None) -> SullivanModel:
    """Read and parse a model file. Without a name or header the file stem names the model."""
    path = Path(path)
    text = path.read_text(encoding='utf-8')

    return parse_model(text, name or _header_name(text) or path.stem)


def write_model(path: FilePath, model: SullivanModel) -> Path:
    path = Path(path)
    path.write_text(serialize_model(model), encoding='utf-8')
    return path


def read_reference(text: str) -> list[DegreeSequence]:
    """
    Read a reference table: one ``fd=<k>: (even) | (odd)`` row per line, ``#`` comments allowed.

    Only the syntax is checked here; :py:func:`sullivan.degrees.audit_against_reference` checks the rows.
    """
    rows = list[DegreeSequence]()

    for raw in text.splitlines():
        if not (content := _strip_comment(raw)):
            continue

        try:
            parsed = _REFERENCE_ROW.parse_string(content, parse_all=True)
        except ParseException as e:
            raise MalformedReferenceError(content, e.msg) from e

        rows.append(DegreeSequence(
            tuple(int(d) for d in parsed['even']), tuple(int(d) for d in parsed['odd']), int(parsed['fd'])
        ))

    return rows


def format_reference(rows: Sequence[DegreeSequence], fd: int | None = None) -> str:
    if fd is None:
        fd = rows[0].fd if rows else 0

    lines = [reference_header.format(fd=fd)]
    lines += [
        reference_row.format(fd=row.fd, even=format_degrees(row.even), odd=format_degrees(row.odd)) for row in rows
    ]

    return '\n'.join(lines) + '\n'


def format_enumeration(rows: Iterable[DegreeSequence]) -> str:
    """One row per line in the reference-table format."""
    return ''.join(f"{row.format_row()}\n" for row in rows)


def format_audit(result: AuditResult) -> str:
    lines = [audit_summary.format(fd=result.fd, missing=len(result.missing), extra=len(result.extra))]
    lines += [audit_missing.format(row=row) for row in result.missing]
    lines += [audit_extra.format(row=row) for row in result.extra]

    return '\n'.join(lines) + '\n'


def _render(*renderables: Any) -> str:
    buffer = StringIO()
    console = Console(
        file=buffer, width=DEFAULT_LINE_WIDTH, color_system=None, force_terminal=False,
        markup=False, emoji=False, highlight=False
    )

    for renderable in renderables:
        console.print(renderable)

    return buffer.getvalue()


def _table(title: str, *columns: str) -> Table:
    table = Table(title=Text(title), box=box.ASCII, title_justify='left')

    for column in columns:
        table.add_column(column)

    return table


def _row(table: Table, *cells: Any) -> None:
    table.add_row(*(Text(str(cell)) for cell in cells))


def _dumps(document: dict[str, Any]) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False) + '\n'


def _class_json(cls: CohomologyClass) -> list[str]:
    return [str(c) for c in cls.coordinates]


def _tower_json(tower: TowerReport | None) -> list[dict[str, Any]] | None:
    if tower is None:
        return None

    return [
        {
            'i': stage.i,
            'alpha': _class_json(stage.alpha_class),
            'alpha_degree': stage.alpha_class.degree,
            'ker_dim': stage.ker_dim,
            'im_dim': stage.im_dim,
            'condition_ok': stage.condition_ok,
            'c1_factorable': stage.c1_factorable,
            'alpha_squared_zero': stage.alpha_squared_zero,
        }
        for stage in tower.stages
    ]


def emit_report(verdict: HilaliVerdict, fmt: ReportFormat | str = ReportFormat.HUMAN) -> str:
    """
    Render a :py:class:`sullivan.hilali.HilaliVerdict`.

    The machine format is JSON with a fixed field order. The human format is a set of plain-text tables.
    """
    report = verdict.report

    if ReportFormat(fmt) is ReportFormat.MACHINE:
        return _dumps({
            'model_name': verdict.model_name,
            'dim_v': verdict.dim_v,
            'chi_pi': verdict.invariants.chi_pi,
            'betti': report.betti,
            'chi_c': report.chi_c,
            'fd_predicted': report.fd_predicted,
            'fd_observed': report.fd_observed,
            'total_dim': report.total_dim,
            'window': report.window,
            'classification': verdict.classification.as_dict(),
            'hilali_holds': verdict.holds,
            'margin': verdict.margin,
            'theorems': {tag: status.value for tag, status in verdict.theorems.items()},
            'ellipticity_evidence': verdict.evidence.value,
            'tower': _tower_json(verdict.tower),
        })

    summary = _table(report_title.format(name=verdict.model_name), 'quantity', 'value')

    _row(summary, 'verdict', verdict_line.format(
        dim_v=verdict.dim_v, dim_h=verdict.dim_h, verdict='HOLDS' if verdict.holds else 'FAILS'
    ))
    _row(summary, 'margin', verdict.margin)
    _row(summary, 'chi_pi', verdict.invariants.chi_pi)
    _row(summary, 'chi_c', report.chi_c)
    _row(summary, 'betti', ' '.join(str(b) for b in report.betti))
    _row(summary, 'fd (predicted, observed)', f"{report.fd_predicted}, {report.fd_observed}")
    _row(summary, 'window', f"0..{report.window}")
    _row(summary, 'classification', ', '.join(k for k, v in verdict.classification.as_dict().items() if v) or '-')
    _row(summary, 'ellipticity evidence', f"{verdict.evidence.value} ({EVIDENCE_NOTE})")

    theorems = _table('Theorems', 'tag', 'status', 'detail')

    for result in verdict.applicable_theorems:
        _row(theorems, result.tag, result.status.value, result.detail)

    renderables: list[Any] = [summary, theorems]

    if verdict.tower is not None:
        renderables.append(_tower_table(verdict.tower))

    return _render(*renderables)


def emit_cohomology(report: CohomologyReport, fmt: ReportFormat | str = ReportFormat.HUMAN) -> str:
    """Render a Betti table, with class representatives when the report has them."""
    if ReportFormat(fmt) is ReportFormat.MACHINE:
        return _dumps({
            'model_name': report.model_name,
            'window': report.window,
            'betti': report.betti,
            'chi_c': report.chi_c,
            'fd_predicted': report.fd_predicted,
            'fd_observed': report.fd_observed,
            'total_dim': report.total_dim,
            'duality_ok': report.duality_ok,
            'ellipticity_evidence': report.evidence.value,
            'representatives': {
                str(s.degree): [str(rep) for rep in s.class_representatives] for s in report.slices if s.betti
            },
        })

    table = _table(f"H^*({report.model_name})", 'k', 'cocycles', 'coboundaries', 'b_k', 'representatives')

    for s in report.slices:
        _row(
            table, s.degree, s.dim_cocycles, s.dim_coboundaries, s.betti,
            ', '.join(str(rep) for rep in s.class_representatives)
        )

    summary = cohomology_summary.format(
        total=report.total_dim, chi_c=report.chi_c, fd_observed=report.fd_observed,
        fd_predicted=report.fd_predicted, duality='yes' if report.duality_ok else 'no',
        evidence=report.evidence.value, note=EVIDENCE_NOTE
    )

    return _render(table, Text(summary))


def emit_validation(report: ValidationReport) -> str:
    if report.ok:
        return validation_ok.format(name=report.model_name) + '\n'

    return ''.join(
        validation_violation.format(name=report.model_name, violation=violation) + '\n'
        for violation in report.violations
    )


def _tower_table(tower: TowerReport) -> Table:
    table = _table(
        tower_summary.format(name=tower.model_name, verdict='holds' if tower.holds else 'fails'),
        'i', 'alpha', 'dim H(i-1)', 'ker', 'im', 'ker > im', 'alpha^2 = 0', 'factors'
    )

    for stage in tower.stages:
        _row(
            table, stage.i, stage.alpha_class, stage.source_dim, stage.ker_dim, stage.im_dim,
            'yes' if stage.condition_ok else 'no',
            'yes' if stage.alpha_squared_zero else 'no',
            'yes' if stage.c1_factorable else 'no',
        )

    return table


def emit_tower(tower: TowerReport, fmt: ReportFormat | str = ReportFormat.HUMAN) -> str:
    """Render a :py:class:`sullivan.checks.TowerReport`."""
    if ReportFormat(fmt) is ReportFormat.MACHINE:
        return _dumps({
            'model_name': tower.model_name,
            'holds': tower.holds,
            'c1_holds': tower.c1_holds,
            'stages': _tower_json(tower),
        })

    return _render(_tower_table(tower))


def emit_corpus(outcomes: Sequence[CorpusOutcome], fmt: ReportFormat | str = ReportFormat.HUMAN) -> str:
    """Render the outcomes of a corpus run, one entry per row, in the order given."""
    if ReportFormat(fmt) is ReportFormat.MACHINE:
        return json.dumps([
            {
                'name': outcome.name,
                'ok': outcome.ok,
                'mismatches': list(outcome.mismatches),
                'witness_rank': outcome.witnesses.rank if outcome.witnesses else None,
                'witness_claimed': outcome.witnesses.claimed if outcome.witnesses else None,
                'report': json.loads(emit_report(outcome.verdict, ReportFormat.MACHINE)),
            }
            for outcome in outcomes
        ], indent=2, ensure_ascii=False) + '\n'

    table = _table('Corpus', 'model', 'dim V', 'dim H', 'fd', 'witnesses', 'status')

    for outcome in outcomes:
        verdict = outcome.verdict
        witnesses = f"{outcome.witnesses.rank}/{outcome.witnesses.claimed}" if outcome.witnesses else '-'
        status = 'ok' if outcome.ok else '; '.join(outcome.mismatches) or 'FAILED'
        _row(table, outcome.name, verdict.dim_v, verdict.dim_h, verdict.report.fd_observed, witnesses, status)

    return _render(table)
