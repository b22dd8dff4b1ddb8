"""The inequality dim V <= dim H together with every theorem-specific sufficient condition."""
from __future__ import annotations

from dataclasses import dataclass

from loguru import logger

from .checks import (
    A1Case, TheoremResult, ToralRankInterval, TowerReport, TrinomialResult, hyperelliptic_lower_bound,
    odd_tower_check, small_n_lower_bound, theorem_d, theorem_e, theorem_f, theorem_g, toral_rank_interval,
    trinomial_condition
)
from .cohomology import CohomologyReport, betti_table, default_window
from .exceptions import InvalidModelError
from .model import (
    Classification, ModelInvariants, SullivanModel, classify_model, model_invariants, validate_model
)
from .types import THEOREM_TAGS, Evidence, Pairing, TheoremStatus

__all__ = ['HilaliVerdict', 'check_hilali', 'evaluate_theorems']

FD_TABLE_LIMIT = 10


@dataclass(frozen=True)
class HilaliVerdict:
    """
    Outcome of :py:func:`check_hilali`.

    ``holds`` and ``margin`` are only as good as the cohomology window; see ``evidence``.
    """

    model_name: str
    dim_v: int
    dim_h: int
    holds: bool
    margin: int
    applicable_theorems: tuple[TheoremResult, ...]
    evidence: Evidence
    invariants: ModelInvariants
    classification: Classification
    report: CohomologyReport
    trinomial: TrinomialResult | None = None
    toral_rank: ToralRankInterval | None = None
    tower: TowerReport | None = None

    def theorem(self, tag: str) -> TheoremResult:
        for result in self.applicable_theorems:
            if result.tag == tag:
                return result
        raise KeyError(tag)

    @property
    def theorems(self) -> dict[str, TheoremStatus]:
        return {result.tag: result.status for result in self.applicable_theorems}


def _theorem_fh(invariants: ModelInvariants) -> TheoremResult:
    if invariants.fh_violations:
        return TheoremResult('FH', TheoremStatus.FAIL, invariants.fh_violations[0])
    return TheoremResult('FH', TheoremStatus.PASS, f"degrees admissible for fd = {invariants.fd_predicted}")


def _theorem_ha(invariants: ModelInvariants, report: CohomologyReport) -> TheoremResult:
    chi_pi, chi_c = invariants.chi_pi, report.chi_c
    detail = f"chi_pi = {chi_pi}, chi_c = {chi_c}"

    if report.evidence is Evidence.CONTRADICTED:
        return TheoremResult('Ha', TheoremStatus.UNKNOWN, detail + ', model looks non-elliptic')

    relations = (
        chi_pi <= 0 and chi_c >= 0 and (chi_pi < 0) == (chi_c == 0)
        and report.total_dim == (2 * report.even_dim if chi_c == 0 else report.even_dim)
    )

    return TheoremResult('Ha', TheoremStatus.of(relations), detail)


def _hyperelliptic_theorems(
    invariants: ModelInvariants, classification: Classification, dim_h: int, trinomial: TrinomialResult | None
) -> list[TheoremResult]:
    if not classification.hyperelliptic or trinomial is None:
        reason = 'not hyperelliptic' if not classification.hyperelliptic else 'chi_pi > 0'
        return [TheoremResult(tag, TheoremStatus.NOT_APPLICABLE, reason) for tag in ('A', 'A1', 'A-bound')]

    n, p = invariants.n, invariants.p
    results = [TheoremResult('A', TheoremStatus.of(trinomial.satisfied), f"P({n}, {p}) = {trinomial.value}")]

    if trinomial.a1_case is None:
        results.append(TheoremResult('A1', TheoremStatus.FAIL, f"chi_pi = {-p} is below -2"))
    else:
        results.append(TheoremResult('A1', TheoremStatus.PASS, trinomial.a1_case.value))

    if classification.pure:
        results.append(TheoremResult('A-bound', TheoremStatus.NOT_APPLICABLE, 'pure'))
    else:
        bound = hyperelliptic_lower_bound(n, p)

        if trinomial.a1_case is A1Case.P_TWO_SMALL_N:
            bound = max(bound, small_n_lower_bound(n))

        results.append(TheoremResult('A-bound', TheoremStatus.of(dim_h >= bound), f"dim H = {dim_h} >= {bound}"))

    return results


def _theorem_b(invariants: ModelInvariants) -> TheoremResult:
    fd = invariants.fd_predicted
    return TheoremResult('B', TheoremStatus.of(fd <= FD_TABLE_LIMIT), f"fd = {fd}")


def _tower_theorems(tower: TowerReport | None) -> list[TheoremResult]:
    if tower is None:
        return [TheoremResult(tag, TheoremStatus.NOT_APPLICABLE, 'has even generators') for tag in ('C', 'C1')]

    good = sum(stage.condition_ok for stage in tower.stages)
    results = [TheoremResult('C', TheoremStatus.of(tower.holds), f"ker > im at {good}/{len(tower.stages)} stages")]

    if squares := [stage.i for stage in tower.stages if not stage.alpha_squared_zero]:
        results.append(TheoremResult('C1', TheoremStatus.FAIL, f"alpha^2 != 0 at stage {squares[0]}"))
    elif missing := [stage.i for stage in tower.stages if not stage.c1_factorable]:
        results.append(TheoremResult('C1', TheoremStatus.UNKNOWN, f"no factorisation found at stage {missing[0]}"))
    else:
        results.append(TheoremResult('C1', TheoremStatus.PASS, 'every alpha factors'))

    return results


def _theorem_hi(
    classification: Classification, report: CohomologyReport, interval: ToralRankInterval | None, e: TheoremResult
) -> TheoremResult:
    if interval is None or not (classification.hyperelliptic or (report.duality_ok and e.status is TheoremStatus.PASS)):
        return TheoremResult('Hi', TheoremStatus.NOT_APPLICABLE, 'neither hyperelliptic nor of small codimension')

    if not interval.exact:
        return TheoremResult('Hi', TheoremStatus.UNKNOWN, f"rk0 in {interval} is not exact")

    bound = 2 ** interval.lower

    return TheoremResult('Hi', TheoremStatus.of(report.total_dim >= bound), f"dim H = {report.total_dim} >= {bound}")


def evaluate_theorems(
    model: SullivanModel, invariants: ModelInvariants, classification: Classification, report: CohomologyReport,
    tower: TowerReport | None = None
) -> tuple[tuple[TheoremResult, ...], TrinomialResult | None, ToralRankInterval | None]:
    """
    Evaluate every theorem predicate.

    :returns:   The results in the order of :py:data:`sullivan.types.THEOREM_TAGS`,
                the trinomial evaluation and the toral-rank interval (both None when chi_pi > 0).
    """
    trinomial = trinomial_condition(invariants.n, invariants.p) if invariants.p >= 0 else None
    interval = toral_rank_interval(model, classification, invariants) if invariants.p >= 0 else None

    if interval is None:
        d = TheoremResult('D', TheoremStatus.NOT_APPLICABLE, 'chi_pi > 0')
        e = TheoremResult('E', TheoremStatus.NOT_APPLICABLE, 'chi_pi > 0')
    else:
        d = theorem_d(model, classification, interval)
        e = theorem_e(model, interval)

    results = [
        _theorem_fh(invariants),
        _theorem_ha(invariants, report),
        *_hyperelliptic_theorems(invariants, classification, report.total_dim, trinomial),
        _theorem_b(invariants),
        *_tower_theorems(tower),
        d,
        e,
        _theorem_hi(classification, report, interval, e),
        theorem_f(model, report),
        theorem_g(report),
    ]

    order = {tag: i for i, tag in enumerate(THEOREM_TAGS)}

    return tuple(sorted(results, key=lambda r: order[r.tag])), trinomial, interval


def check_hilali(model: SullivanModel, window: int | None = None, pairing: Pairing = Pairing.TOP) -> HilaliVerdict:
    """
    Compare dim V with dim H over a cohomology window and evaluate every theorem predicate.

    :param model:       A valid minimal model.
    :param window:      Top degree of the cohomology window.
                        Defaults to fd_predicted plus the largest generator degree.
    :param pairing:     Pairing used by the Friedlander-Halperin check.
    """
    logger.success(f"Checking dim V <= dim H for {model.name}...")

    if not (validation := validate_model(model)).ok:
        raise InvalidModelError(f"{model.name} is not a valid minimal model: {validation.violations[0]}")

    invariants = model_invariants(model, pairing)
    classification = classify_model(model)
    report = betti_table(model, up_to=window or default_window(model), representatives=False)
    tower = odd_tower_check(model) if classification.odd_generated and model.generators else None

    theorems, trinomial, interval = evaluate_theorems(model, invariants, classification, report, tower)
    dim_v, dim_h = invariants.dim_v, report.total_dim

    if dim_v > dim_h:
        logger.warning(f"{model.name}: dim V = {dim_v} exceeds dim H = {dim_h} over the window 0..{report.window}")
    else:
        logger.info(f"{model.name}: {dim_v} <= {dim_h}")

    return HilaliVerdict(
        model_name=model.name,
        dim_v=dim_v,
        dim_h=dim_h,
        holds=dim_v <= dim_h,
        margin=dim_h - dim_v,
        applicable_theorems=theorems,
        evidence=report.evidence,
        invariants=invariants,
        classification=classification,
        report=report,
        trinomial=trinomial,
        toral_rank=interval,
        tower=tower,
    )
