"""
Named model families with known answers.

Names follow ``family:arguments``: ``sphere:4``, ``cpn:2``, ``product:sphere:3,sphere:5``, ``oddtower:3,3,5``,
``thmD:n1p3``, ``thmD:n2p3:W0``, ``thmD:n3p4:W2zero`` and ``hyperelliptic:sample``.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib.resources import files
from pathlib import Path
from typing import Iterable, Sequence

from loguru import logger

from .algebra import GradedElement
from .checks import WitnessCheck, certify_witnesses
from .exceptions import InvalidParameterError, UnknownModelError
from .hilali import HilaliVerdict, check_hilali
from .model import Classification, SullivanModel, validate_model
from .model_io import parse_expression

__all__ = [
    'CORPUS_NAMES', 'CorpusEntry', 'CorpusOutcome', 'ExpectedResults', 'WitnessSet',
    'all_entries', 'build_named_model', 'check_entry', 'corpus_entry', 'model_file_name', 'run_corpus',
    'shipped_model_path', 'shipped_model_text'
]

CORPUS_NAMES = (
    'sphere:2', 'sphere:3', 'sphere:4', 'sphere:5', 'sphere:6', 'sphere:7',
    'cpn:1', 'cpn:2', 'cpn:3', 'cpn:4', 'cpn:5',
    'product:sphere:3,sphere:5', 'product:sphere:2,sphere:4',
    'oddtower:3,3,5',
    'thmD:n1p3', 'thmD:n2p3:W0', 'thmD:n3p4:W2zero',
    'hyperelliptic:sample',
)

# q, r, s, a, b
N1P3_DEFAULTS = (2, 2, 2, 1, 0)

SLOW_MODELS = frozenset({'thmD:n3p4:W2zero'})


def _integers(name: str, argument: str) -> list[int]:
    try:
        values = [int(part) for part in argument.split(',')]
    except ValueError as e:
        raise InvalidParameterError(name, f"expected integers, got \"{argument}\"") from e

    return values


def _single(name: str, argument: str, minimum: int) -> int:
    values = _integers(name, argument)

    if len(values) != 1:
        raise InvalidParameterError(name, f"expected a single parameter, got {len(values)}")
    if values[0] < minimum:
        raise InvalidParameterError(name, f"the parameter must be at least {minimum}")

    return values[0]


def _split_factors(argument: str) -> list[str]:
    factors = list[str]()

    for piece in argument.split(','):
        if ':' not in piece and factors:
            factors[-1] += f",{piece}"
        else:
            factors.append(piece)

    return factors


def sphere(k: int) -> SullivanModel:
    """S^k: one closed odd generator, or ⋀(x, y) with dy = x^2 for even k."""
    name = f"sphere:{k}"

    if k % 2:
        return SullivanModel.from_expressions([('y', k)], {}, name)

    return SullivanModel.from_expressions([('x', k), ('y', 2 * k - 1)], {'y': 'x^2'}, name)


def complex_projective(m: int) -> SullivanModel:
    """CP^m: ⋀(x, y) with |x| = 2 and dy = x^{m+1}."""
    return SullivanModel.from_expressions([('x', 2), ('y', 2 * m + 1)], {'y': f"x^{m + 1}"}, f"cpn:{m}")


def odd_tower(degrees: Sequence[int]) -> SullivanModel:
    """
    Odd generators y1, y2, ... of the given degrees.

    dy_i = y_a*y_b for the first pair a < b < i of closed generators with |y_a| + |y_b| = |y_i| + 1,
    and zero when there is none.
    """
    name = f"oddtower:{','.join(str(d) for d in degrees)}"

    if any(d < 1 or d % 2 == 0 for d in degrees):
        raise InvalidParameterError(name, "every degree must be odd and positive")

    declarations = [(f"y{i}", d) for i, d in enumerate(degrees, 1)]
    expressions = dict[str, str]()

    for i, d in enumerate(degrees):
        closed = [j for j in range(i) if f"y{j + 1}" not in expressions]
        pair = next(
            ((a, b) for a in closed for b in closed if a < b and degrees[a] + degrees[b] == d + 1), None
        )

        if pair is not None:
            expressions[f"y{i + 1}"] = f"y{pair[0] + 1}*y{pair[1] + 1}"

    return SullivanModel.from_expressions(declarations, expressions, name)


def theorem_d_n1p3(q: int = 2, r: int = 2, s: int = 2, a: int = 1, b: int = 0) -> SullivanModel:
    """
    ⋀(x, y1, y2, y3, y4) with |x| = 2, dy1 = x^q, dy2 = a*x^r, dy3 = b*x^s and a closed y4 of degree 3.
    """
    parameters = (q, r, s, a, b)
    name = 'thmD:n1p3' if parameters == N1P3_DEFAULTS else f"thmD:n1p3({','.join(map(str, parameters))})"

    if min(q, r, s) < 2:
        raise InvalidParameterError(name, "q, r and s must be at least 2")
    if r < q or s < q:
        raise InvalidParameterError(name, "r and s must not be smaller than q")

    return SullivanModel.from_expressions(
        [('x', 2), ('y1', 2 * q - 1), ('y2', 2 * r - 1), ('y3', 2 * s - 1), ('y4', 3)],
        {'y1': f"x^{q}", 'y2': f"{a}*x^{r}", 'y3': f"{b}*x^{s}"},
        name,
    )


def theorem_d_n2p3_w0() -> SullivanModel:
    return SullivanModel.from_expressions(
        [('x1', 2), ('x2', 2), ('y1', 3), ('y2', 3), ('y3', 3), ('y4', 9), ('y5', 3)],
        {
            'y1': 'x1^2', 'y2': 'x1*x2', 'y3': 'x2^2',
            'y4': 'x1^2*y2*y3 - x1*x2*y1*y3 + x2^2*y1*y2',
        },
        'thmD:n2p3:W0',
    )


def theorem_d_n3p4_w2zero() -> SullivanModel:
    return SullivanModel.from_expressions(
        [('x1', 2), ('x2', 2), ('x3', 2)] + [(f"y{i}", 3) for i in range(1, 8)],
        {
            'y1': 'x1^2', 'y2': 'x2^2', 'y3': 'x3^2',
            'y4': 'x1*x2', 'y5': 'x1*x3', 'y6': 'x2*x3',
        },
        'thmD:n3p4:W2zero',
    )


def hyperelliptic_sample() -> SullivanModel:
    """A non-pure hyperelliptic model: dz has the mixed term x*y2*y3."""
    return SullivanModel.from_expressions(
        [('x', 2), ('y1', 3), ('y2', 3), ('y3', 3), ('z', 7)],
        {'y1': 'x^2', 'z': 'x^4 + x*y2*y3'},
        'hyperelliptic:sample',
    )


def build_named_model(name: str, parameters: Sequence[int] = ()) -> SullivanModel:
    """
    Build a model of the registry.

    :param name:            Registry name. Parameters may also be given separately: ``('sphere', [4])``.
    :param parameters:      Extra parameters. ``thmD:n1p3`` takes (q, r, s, a, b).

    :raises UnknownModelError:      No family of that name.
    :raises InvalidParameterError:  Parameters out of range.
    """
    family, _, argument = name.partition(':')

    if parameters and not argument and family in ('sphere', 'cpn', 'oddtower'):
        argument = ','.join(str(p) for p in parameters)

    match family, argument:
        case 'sphere', _:
            return sphere(_single(name, argument, 2))
        case 'cpn', _:
            return complex_projective(_single(name, argument, 1))
        case 'product', _ if argument:
            factors = [build_named_model(factor) for factor in _split_factors(argument)]
            return SullivanModel.product(*factors, name=name)
        case 'oddtower', _:
            return odd_tower(_integers(name, argument))
        case 'thmD', 'n1p3':
            values = tuple(parameters) + N1P3_DEFAULTS[len(parameters):]

            if len(values) != len(N1P3_DEFAULTS):
                raise InvalidParameterError(name, "expected at most five parameters (q, r, s, a, b)")

            return theorem_d_n1p3(*values)
        case 'thmD', 'n2p3:W0':
            return theorem_d_n2p3_w0()
        case 'thmD', 'n3p4:W2zero':
            return theorem_d_n3p4_w2zero()
        case 'hyperelliptic', 'sample':
            return hyperelliptic_sample()

    raise UnknownModelError(name)


@dataclass(frozen=True)
class ExpectedResults:
    """Known answers for a corpus model. ``total_dim`` is None when only a lower bound is known."""

    dim_v: int
    total_dim: int | None
    fd: int
    classification: Classification
    total_dim_at_least: int | None = None


@dataclass(frozen=True)
class WitnessSet:
    """Cocycles from a proof together with the rank of their classes the proof claims."""

    elements: tuple[GradedElement, ...]
    claimed_rank: int


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    parameters: tuple[int, ...]
    model: SullivanModel
    expected: ExpectedResults | None = None
    witnesses: WitnessSet | None = None
    slow: bool = field(default=False)


def _classification(pure: bool, hyperelliptic: bool, odd_generated: bool) -> Classification:
    return Classification(minimal=True, pure=pure, hyperelliptic=hyperelliptic, odd_generated=odd_generated)


def _expected(name: str) -> ExpectedResults:
    family, _, argument = name.partition(':')

    match family, argument:
        case 'sphere', _:
            k = int(argument)
            return ExpectedResults(1 if k % 2 else 2, 2, k, _classification(True, True, bool(k % 2)))
        case 'cpn', _:
            m = int(argument)
            return ExpectedResults(2, m + 1, 2 * m, _classification(True, True, False))
        case 'product', 'sphere:3,sphere:5':
            return ExpectedResults(2, 4, 8, _classification(True, True, True))
        case 'product', 'sphere:2,sphere:4':
            return ExpectedResults(4, 4, 6, _classification(True, True, False))
        case 'oddtower', '3,3,5':
            return ExpectedResults(3, 6, 11, _classification(False, False, True))
        case 'thmD', 'n1p3':
            return ExpectedResults(5, 16, 11, _classification(True, True, False))
        case 'thmD', 'n2p3:W0':
            return ExpectedResults(7, 24, 19, _classification(False, True, False))
        case 'thmD', 'n3p4:W2zero':
            return ExpectedResults(10, None, 18, _classification(True, True, False), total_dim_at_least=12)
        case 'hyperelliptic', 'sample':
            return ExpectedResults(5, 14, 15, _classification(False, True, False))

    raise UnknownModelError(name)


def _witness_set(model: SullivanModel, texts: Iterable[str], rank: int) -> WitnessSet:
    return WitnessSet(tuple(parse_expression(text, model.generators) for text in texts), rank)


def n1p3_witnesses(model: SullivanModel, q: int, r: int, s: int, a: int, b: int) -> WitnessSet:
    """ω1 = a x^{r-q} y1 - y2, ω2 = b x^{s-q} y1 - y3 and x ω1, or y2, x y2, y3, x y3 when a = b = 0."""
    if a == 0 and b == 0:
        return _witness_set(model, ['y2', 'x*y2', 'y3', 'x*y3'], 4)

    omega_1 = f"{a}*x^{r - q}*y1 - y2"
    omega_2 = f"{b}*x^{s - q}*y1 - y3"
    omega_3 = f"{a}*x^{r - q + 1}*y1 - x*y2"

    return _witness_set(model, [omega_1, omega_2, omega_3], 3)


def _witnesses(name: str, model: SullivanModel) -> WitnessSet | None:
    match name:
        case 'thmD:n1p3':
            return n1p3_witnesses(model, *N1P3_DEFAULTS)
        case 'thmD:n2p3:W0':
            return _witness_set(
                model,
                ['y4 - y1*y2*y3', 'x1*y4 - x1*y1*y2*y3', 'x2*y1 - x1*y2', 'x1*y3 - x2*y2'],
                4,
            )
        case 'thmD:n3p4:W2zero':
            return _witness_set(
                model,
                [
                    'x2*y1 - x1*y4', 'x1*y2 - x2*y4', 'x3*y1 - x1*y5',
                    'x1*y3 - x3*y5', 'x3*y2 - x2*y6', 'x2*y3 - x3*y6',
                ],
                6,
            )

    return None


def _parameters(name: str) -> tuple[int, ...]:
    family, _, argument = name.partition(':')

    match family:
        case 'sphere' | 'cpn' | 'oddtower':
            return tuple(int(p) for p in argument.split(','))
        case 'thmD' if argument == 'n1p3':
            return N1P3_DEFAULTS

    return ()


def corpus_entry(name: str) -> CorpusEntry:
    """The registry entry for one of :py:data:`CORPUS_NAMES`."""
    if name not in CORPUS_NAMES:
        raise UnknownModelError(name)

    model = build_named_model(name)

    return CorpusEntry(
        name, _parameters(name), model, _expected(name), _witnesses(name, model), name in SLOW_MODELS
    )


def all_entries(include_slow: bool = True) -> list[CorpusEntry]:
    """Every registry entry with its expected results, in registry order."""
    return [corpus_entry(name) for name in CORPUS_NAMES if include_slow or name not in SLOW_MODELS]


def model_file_name(name: str) -> str:
    """File name of the shipped model file, e.g. ``product_sphere_3_sphere_5.sul``."""
    return name.replace(':', '_').replace(',', '_') + '.sul'


def shipped_model_text(name: str) -> str:
    """Contents of the model file shipped for a corpus entry."""
    resource = files('sullivan') / 'data' / 'models' / model_file_name(name)

    if not resource.is_file():
        raise UnknownModelError(name)

    return resource.read_text(encoding='utf-8')


def shipped_model_path(name: str) -> Path:
    return Path(str(files('sullivan') / 'data' / 'models' / model_file_name(name)))


@dataclass(frozen=True)
class CorpusOutcome:
    """What checking one corpus entry found."""

    name: str
    verdict: HilaliVerdict
    mismatches: tuple[str, ...] = ()
    witnesses: WitnessCheck | None = None

    @property
    def ok(self) -> bool:
        return self.verdict.holds and not self.mismatches and (self.witnesses is None or self.witnesses.ok)


def _mismatches(entry: CorpusEntry, verdict: HilaliVerdict) -> list[str]:
    if (expected := entry.expected) is None:
        return []

    report = verdict.report
    found = list[str]()

    if verdict.dim_v != expected.dim_v:
        found.append(f"dim V is {verdict.dim_v}, expected {expected.dim_v}")
    if expected.total_dim is not None and report.total_dim != expected.total_dim:
        found.append(f"dim H is {report.total_dim}, expected {expected.total_dim}")
    if expected.total_dim_at_least is not None and report.total_dim < expected.total_dim_at_least:
        found.append(f"dim H is {report.total_dim}, expected at least {expected.total_dim_at_least}")
    if report.fd_observed != expected.fd:
        found.append(f"fd is {report.fd_observed}, expected {expected.fd}")
    if verdict.classification != expected.classification:
        found.append(f"classification is {verdict.classification}, expected {expected.classification}")

    return found


def check_entry(entry: CorpusEntry | str) -> CorpusOutcome:
    """Validate, check and compare one entry against its expected results and witnesses."""
    if isinstance(entry, str):
        entry = corpus_entry(entry)

    if not (validation := validate_model(entry.model)).ok:
        logger.warning(f"Corpus model {entry.name} does not validate: {validation.violations[0]}")

    verdict = check_hilali(entry.model)
    mismatches = _mismatches(entry, verdict)

    witnesses = None

    if entry.witnesses is not None:
        witnesses = certify_witnesses(entry.model, entry.witnesses.elements, entry.witnesses.claimed_rank)

    if mismatches:
        logger.warning(f"{entry.name}: {'; '.join(mismatches)}")

    return CorpusOutcome(entry.name, verdict, tuple(mismatches), witnesses)


def run_corpus(names: Sequence[str] | None = None, jobs: int = 1) -> list[CorpusOutcome]:
    """
    Check corpus entries, in parallel worker processes when ``jobs > 1``.

    Outcomes come back in the order of `names`.
    """
    names = list(names if names is not None else CORPUS_NAMES)

    logger.success(f"Checking {len(names)} corpus model(s) with {jobs} job(s)...")

    if jobs <= 1:
        return [check_entry(name) for name in names]

    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(check_entry, names))

