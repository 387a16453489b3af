"""
Tally Engine
Runs the rating pipeline stage by stage and checks every stage invariant
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

import numpy as np

from ..closure.indirect_scores import (
    IndirectScores,
    MarginMatrix,
    comparison_relation,
    indirect_scores,
    margins,
    satisfies_min_inequality,
)
from ..closure.relations import Relation, codual, transitive_closure
from ..ordering.admissible_order import (
    AdmissibleOrder,
    CopelandRanks,
    admissible_order,
    tie_splitting_ranks,
)
from ..profile.ballots import Profile
from ..profile.llull_matrix import LlullMatrix, ScoreMatrix, aggregate, validate_gamma
from ..projection.projector import (
    IntermediateMargins,
    ProjectedMargins,
    ProjectedScores,
    intermediate_margins,
    project,
    projected_margins,
)
from ..rating.rates import (
    RateVector,
    SocialPreorder,
    rank_like_rates,
    rates_from_margins,
    social_preorder,
)
from ..utils.errors import InputError, InvariantViolation
from ..utils.logger import logger, tally_logger


@dataclass(frozen=True)
class TallyReport:
    """Every stage of one tally; each field follows from the previous ones"""
    llull: LlullMatrix
    indirect_scores: IndirectScores
    indirect_margins: MarginMatrix
    comparison: Relation
    copeland_ranks: CopelandRanks
    admissible_order: AdmissibleOrder
    intermediate_margins: IntermediateMargins
    projected_margins: ProjectedMargins
    projected_scores: ProjectedScores
    rates: RateVector
    preorder: SocialPreorder
    scale: Optional[Fraction] = None

    @property
    def candidates(self):
        return self.llull.candidates


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one invariant check"""
    name: str
    passed: Optional[bool]
    detail: str = ''

    @property
    def status(self) -> str:
        if self.passed is None:
            return 'SKIP'
        return 'PASS' if self.passed else 'FAIL'


class TallyEngine:
    """Runs the CLC pipeline on a Llull matrix or a ballot profile"""

    def __init__(self):
        self.logger = logger

    def run_profile(self, profile: Profile) -> TallyReport:
        """Tally a ballot profile; integer weights enable absolute-count display"""
        matrix = aggregate(profile)
        scale = profile.total_weight if profile.has_integer_weights() else None
        return self.run(matrix, scale=scale)

    def run(self, matrix: ScoreMatrix, scale: Optional[Fraction] = None) -> TallyReport:
        """
        Run all stages

        Args:
            matrix: Score matrix, must lie in Γ
            scale: Total weight for absolute-count tables, if meaningful

        Returns:
            TallyReport

        Raises:
            InputError: If the matrix is not in Γ (names the first bad pair)
            InvariantViolation: If an internal post-condition fails
        """
        ok, violations = validate_gamma(matrix)
        if not ok:
            first = violations[0]
            raise InputError(f"{first.reason} (residual {first.residual})", pair=first.pair)

        llull = matrix if isinstance(matrix, LlullMatrix) else LlullMatrix(
            matrix.candidates, matrix.numerators, matrix.denominator)

        try:
            scores = indirect_scores(llull)
            tally_logger.log_stage('indirect scores', scores.to_frame())
            indirect = margins(scores)
            nu = comparison_relation(scores)
            ranks = tie_splitting_ranks(nu)
            xi = admissible_order(nu, ranks)
            tally_logger.log_stage('admissible order', ' '.join(xi.sequence))
            sigma = intermediate_margins(indirect, xi)
            tally_logger.log_stage('intermediate margins', sigma.sigma)
            projected = projected_margins(sigma)
            p = projected.scores()
            rates = rank_like_rates(p)
        except ValueError as e:
            raise InvariantViolation(f"pipeline stage failed on a Γ matrix: {e}") from e

        ok, reason = rates.validate()
        if not ok:
            raise InvariantViolation(f"rates out of range: {reason}")

        preorder = social_preorder(rates)
        self.logger.debug(f"Tallied {llull.N} candidates; order {' '.join(xi.sequence)}")

        return TallyReport(
            llull=llull,
            indirect_scores=scores,
            indirect_margins=indirect,
            comparison=nu,
            copeland_ranks=ranks,
            admissible_order=xi,
            intermediate_margins=sigma,
            projected_margins=projected,
            projected_scores=p,
            rates=rates,
            preorder=preorder,
            scale=Fraction(scale) if scale is not None else None,
        )

    def check(self, matrix: ScoreMatrix) -> List[CheckResult]:
        """
        Validate Γ membership and every stage invariant

        Returns:
            One CheckResult per invariant, in pipeline order
        """
        ok, violations = validate_gamma(matrix)
        detail = '; '.join(str(v) for v in violations[:5])
        if len(violations) > 5:
            detail += f"; ... {len(violations) - 5} more"
        results = [CheckResult('completeness (Γ membership)', ok, detail)]
        if not ok:
            results.append(CheckResult('pipeline invariants', None, 'input outside Γ'))
            return results

        try:
            report = self.run(matrix)
        except InvariantViolation as e:
            results.append(CheckResult('pipeline', False, str(e)))
            return results

        for name, check in _STAGE_CHECKS:
            try:
                passed, detail = check(report)
            except ValueError as e:
                passed, detail = False, str(e)
            results.append(CheckResult(name, passed, detail))

        failed = [r.name for r in results if r.passed is False]
        tally_logger.log_summary('invariant check', {
            'Candidates': matrix.N,
            'Checks': len(results),
            'Failed': ', '.join(failed) if failed else 'none',
        })
        return results


# -- stage invariants ------------------------------------------------------

def _first_pair(mask: np.ndarray, report: TallyReport) -> str:
    i, j = (int(k) for k in np.argwhere(mask)[0])
    names = report.candidates.names
    return f"pair ({names[i]}, {names[j]})"


def _check_dominance(report: TallyReport) -> Tuple[bool, str]:
    s = report.indirect_scores
    v = report.llull
    bad = s.numerators * v.denominator < v.numerators * s.denominator
    if bad.any():
        return False, f"indirect score below direct score at {_first_pair(bad, report)}"
    return True, ''


def _check_min_inequality(report: TallyReport) -> Tuple[bool, str]:
    return satisfies_min_inequality(report.indirect_scores), ''


def _check_closure_idempotent(report: TallyReport) -> Tuple[bool, str]:
    return indirect_scores(report.indirect_scores) == report.indirect_scores, ''


def _check_partial_order(report: TallyReport) -> Tuple[bool, str]:
    nu = report.comparison
    return nu.is_partial_order(), f"{len(nu)} pairs"


def _check_admissible(report: TallyReport) -> Tuple[bool, str]:
    xi = report.admissible_order.as_relation()
    nu = report.comparison
    return nu.pairs <= xi.pairs <= codual(nu).pairs, ' '.join(report.admissible_order.sequence)


def _check_rank_extension(report: TallyReport) -> Tuple[bool, str]:
    r = report.copeland_ranks
    bad = [(x, y) for x, y in report.comparison.pairs if not r[x] < r[y]]
    return not bad, f"rank order breaks ({bad[0][0]}, {bad[0][1]})" if bad else ''


def _check_intermediate(report: TallyReport) -> Tuple[bool, str]:
    sigma = report.intermediate_margins.sigma
    return all(0 <= s <= 1 for s in sigma), ''


def _check_projected_monotone(report: TallyReport) -> Tuple[bool, str]:
    return report.projected_margins.is_monotone(), ''


def _check_max_decomposition(report: TallyReport) -> Tuple[bool, str]:
    return report.projected_margins.is_max_decomposable(), ''


def _check_ultrametric(report: TallyReport) -> Tuple[bool, str]:
    return report.projected_margins.is_ultrametric(), ''


def _check_projected_gamma(report: TallyReport) -> Tuple[bool, str]:
    ok, violations = validate_gamma(report.projected_scores)
    return ok, str(violations[0]) if violations else ''


def _check_projection_idempotent(report: TallyReport) -> Tuple[bool, str]:
    return project(report.projected_scores) == report.projected_scores, ''


def _check_rate_range(report: TallyReport) -> Tuple[bool, str]:
    ok, reason = report.rates.validate()
    return ok, '' if ok else reason


def _check_rate_forms(report: TallyReport) -> Tuple[bool, str]:
    return rates_from_margins(report.projected_margins.margins) == report.rates, ''


def _check_rates_vs_scores(report: TallyReport) -> Tuple[bool, str]:
    rates, p = report.rates, report.projected_scores
    for x, y in p.pairs():
        if (rates[x] < rates[y]) != (p[x, y] > p[y, x]):
            return False, f"pair ({x}, {y})"
        if (rates[x] == rates[y]) != (p[x, y] == p[y, x]):
            return False, f"pair ({x}, {y})"
    return True, ''


def _check_rates_vs_comparison(report: TallyReport) -> Tuple[bool, str]:
    rates, nu = report.rates, report.comparison
    reach = transitive_closure(codual(nu))
    for x, y in report.llull.pairs():
        if rates[x] < rates[y] and (x, y) not in nu:
            return False, f"R_{x} < R_{y} but ({x}, {y}) not in the comparison relation"
        if (rates[x] <= rates[y]) != ((x, y) in reach):
            return False, f"pair ({x}, {y}) disagrees with the closure of the codual"
    return True, ''


_STAGE_CHECKS: List[Tuple[str, Callable[[TallyReport], Tuple[bool, str]]]] = [
    ('indirect scores dominate direct scores', _check_dominance),
    ('indirect scores satisfy the min-inequality', _check_min_inequality),
    ('closure is idempotent', _check_closure_idempotent),
    ('comparison relation is a partial order', _check_partial_order),
    ('order is admissible', _check_admissible),
    ('ranks extend the comparison relation', _check_rank_extension),
    ('intermediate margins lie in [0, 1]', _check_intermediate),
    ('projected margins are monotone along the order', _check_projected_monotone),
    ('projected margins are max-decomposable', _check_max_decomposition),
    ('projected margins are ultrametric', _check_ultrametric),
    ('projected scores lie in Γ', _check_projected_gamma),
    ('projection is idempotent', _check_projection_idempotent),
    ('rates lie in [1, N] with mean (N+1)/2', _check_rate_range),
    ('score and margin forms of the rates agree', _check_rate_forms),
    ('rates agree with projected scores', _check_rates_vs_scores),
    ('rates agree with the comparison relation', _check_rates_vs_comparison),
]
