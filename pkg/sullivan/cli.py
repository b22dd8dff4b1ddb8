"""
The ``sullivan`` command line.

Every subcommand takes a model file or a corpus name (``sphere:2``) and writes its report to stdout or ``--out``.
Exit codes: 0 success, 1 a check failed, 2 usage, parse or I/O error.
"""
from __future__ import annotations

import sys
from pathlib import Path
from typing import Any, Callable, Sequence

import click
from loguru import logger

from .checks import odd_tower_check
from .cohomology import betti_table, default_window
from .corpus import CORPUS_NAMES, SLOW_MODELS, build_named_model, corpus_entry, run_corpus
from .degrees import audit_against_reference, enumerate_fh, shipped_reference_rows
from .exceptions import (
    InvalidModelError, InvalidParameterError, MalformedReferenceError, ModelParseError, NotOddGeneratedError,
    UnknownGeneratorError, UnknownModelError, WindowError
)
from .helpers import configure_logging, default_jobs
from .hilali import check_hilali
from .model import SullivanModel, validate_model
from .model_io import (
    emit_cohomology, emit_corpus, emit_report, emit_tower, emit_validation, format_audit, format_enumeration,
    read_model, read_reference
)
from .types import Evidence, Pairing, ReportFormat

__all__ = ['EXIT_FAILED', 'EXIT_OK', 'EXIT_USAGE', 'cli', 'entrypoint', 'run']

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

SHIPPED_REFERENCE = 'shipped'

_USAGE_ERRORS = (
    ModelParseError, UnknownGeneratorError, UnknownModelError, InvalidParameterError, MalformedReferenceError,
    NotOddGeneratedError, WindowError, OSError
)


def load_model(source: str) -> SullivanModel:
    """Read a model file, or build a corpus model when no file of that name exists."""
    if (path := Path(source)).is_file():
        return read_model(path)

    if ':' not in source:
        raise FileNotFoundError(f"No such model file: {source}")

    return build_named_model(source)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text, encoding='utf-8')
        logger.info(f"Wrote {out}")


def _format(machine: bool) -> ReportFormat:
    return ReportFormat.MACHINE if machine else ReportFormat.HUMAN


def _out_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option('--out', type=click.Path(dir_okay=False), default=None,
                        help="Write the report to this file instead of stdout.")(func)


def _machine_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option('--machine', is_flag=True, help="Emit JSON instead of text tables.")(func)


def _up_to_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option('--up-to', type=click.IntRange(min=1), default=None,
                        help="Top degree of the cohomology window. "
                             "Defaults to fd_predicted plus the largest generator degree.")(func)


def _pairing_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option('--pairing', type=click.Choice([p.value for p in Pairing]), default=Pairing.TOP.value,
                        help="How even and odd degrees are matched in |y| >= 2|x| - 1.")(func)


@click.group()
@click.option('-v', '--verbose', count=True, help="Log progress to stderr. Repeat for debug output.")
def cli(verbose: int) -> None:
    """Minimal Sullivan models: cohomology, the Hilali inequality and its sufficient conditions."""
    configure_logging(verbose)


@cli.command()
@click.argument('model')
@_out_option
def validate(model: str, out: str | None) -> int:
    """Check degrees, triangularity, minimality and d∘d = 0."""
    report = validate_model(load_model(model))
    _emit(emit_validation(report), out)
    return EXIT_OK if report.ok else EXIT_FAILED


@cli.command()
@click.argument('model')
@_up_to_option
@_machine_option
@_out_option
def cohomology(model: str, up_to: int | None, machine: bool, out: str | None) -> int:
    """Betti numbers and class representatives over a degree window."""
    m = load_model(model)

    if not (validation := validate_model(m)).ok:
        _emit(emit_validation(validation), out)
        return EXIT_FAILED

    report = betti_table(m, up_to=up_to or default_window(m))
    _emit(emit_cohomology(report, _format(machine)), out)

    return EXIT_OK


@cli.command()
@click.argument('model')
@_up_to_option
@_pairing_option
@_machine_option
@_out_option
def check(model: str, up_to: int | None, pairing: str, machine: bool, out: str | None) -> int:
    """Compare dim V with dim H and evaluate every sufficient condition."""
    verdict = check_hilali(load_model(model), window=up_to, pairing=Pairing(pairing))
    _emit(emit_report(verdict, _format(machine)), out)
    return EXIT_OK if verdict.holds and verdict.evidence is not Evidence.CONTRADICTED else EXIT_FAILED


@cli.command('enumerate')
@click.option('--fd', type=click.IntRange(min=2), required=True, help="Formal dimension.")
@click.option('--audit', default=None, metavar='REF',
              help=f"Compare with a reference table file, or with the shipped one (\"{SHIPPED_REFERENCE}\").")
@_pairing_option
@_out_option
def enumerate_command(fd: int, audit: str | None, pairing: str, out: str | None) -> int:
    """List the degree sequences allowed for a formal dimension."""
    rows = enumerate_fh(fd, Pairing(pairing))
    text = format_enumeration(rows)
    status = EXIT_OK

    if audit is not None:
        if audit == SHIPPED_REFERENCE:
            reference = shipped_reference_rows(fd)
        else:
            reference = read_reference(Path(audit).read_text(encoding='utf-8'))

        result = audit_against_reference(fd, reference, Pairing(pairing))
        text += format_audit(result)
        status = EXIT_OK if result.ok else EXIT_FAILED

    _emit(text, out)

    return status


@cli.command()
@click.option('--run-all', is_flag=True, help="Check every entry instead of listing them.")
@click.option('--skip-slow', is_flag=True, help="Leave out the expensive entries.")
@click.option('--jobs', type=click.IntRange(min=1), default=None,
              help="Worker processes. Defaults to 40% of the CPU count.")
@_machine_option
@_out_option
def corpus(run_all: bool, skip_slow: bool, jobs: int | None, machine: bool, out: str | None) -> int:
    """List the built-in models, or check all of them against their known answers."""
    names = [name for name in CORPUS_NAMES if not (skip_slow and name in SLOW_MODELS)]

    if not run_all:
        lines = list[str]()

        for name in names:
            if (expected := corpus_entry(name).expected) is None:
                continue

            total = expected.total_dim if expected.total_dim is not None else f">={expected.total_dim_at_least}"
            lines.append(f"{name}: dim V = {expected.dim_v}, dim H = {total}, fd = {expected.fd}")

        _emit('\n'.join(lines) + '\n', out)
        return EXIT_OK

    outcomes = run_corpus(names, jobs or default_jobs())
    _emit(emit_corpus(outcomes, _format(machine)), out)

    return EXIT_OK if all(outcome.ok for outcome in outcomes) else EXIT_FAILED


@cli.command()
@click.argument('model')
@_machine_option
@_out_option
def tower(model: str, machine: bool, out: str | None) -> int:
    """Connecting maps of an odd-generated model, stage by stage."""
    m = load_model(model)

    if not (validation := validate_model(m)).ok:
        _emit(emit_validation(validation), out)
        return EXIT_FAILED

    report = odd_tower_check(m)
    _emit(emit_tower(report, _format(machine)), out)
    return EXIT_OK if report.holds else EXIT_FAILED


def run(argv: Sequence[str] | None = None) -> int:
    """Run the command line on `argv` and return the exit code instead of exiting."""
    try:
        result = cli.main(args=list(argv if argv is not None else sys.argv[1:]), prog_name='sullivan',
                          standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.Abort:
        return EXIT_USAGE
    except InvalidModelError as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_FAILED
    except _USAGE_ERRORS as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_USAGE

    return result if isinstance(result, int) else EXIT_OK


def entrypoint() -> None:
    sys.exit(run())
