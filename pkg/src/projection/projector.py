"""
Projection
Intermediate margins along an admissible order, projected margins and projected scores
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from config.config import Config
from ..closure.indirect_scores import MarginMatrix, comparison_relation, indirect_scores, margins
from ..ordering.admissible_order import (
    AdmissibleOrder,
    admissible_order,
    all_admissible_orders,
    tie_splitting_ranks,
)
from ..profile.llull_matrix import LlullMatrix, ScoreMatrix
from ..utils.logger import logger
from ..utils.rationals import common_denominator


@dataclass(frozen=True)
class IntermediateMargins:
    """sigma[i]: minimum indirect margin over rows up to x_i and columns from x_{i+1} in ξ order"""
    xi: AdmissibleOrder
    sigma: Tuple[Fraction, ...]

    def __post_init__(self):
        sigma = tuple(Fraction(s) for s in self.sigma)
        if len(sigma) != max(len(self.xi) - 1, 0):
            raise ValueError("need one intermediate margin per consecutive pair of the order")
        if any(s < 0 or s > 1 for s in sigma):
            raise ValueError("intermediate margins must lie in [0, 1]")
        object.__setattr__(self, 'sigma', sigma)

    def pairs(self) -> List[Tuple[str, str]]:
        seq = self.xi.sequence
        return [(seq[i], seq[i + 1]) for i in range(len(seq) - 1)]


class ProjectedScores(LlullMatrix):
    """p_xy = (1 + m_xy) / 2 from projected margins"""


@dataclass(frozen=True)
class ProjectedMargins:
    """Antisymmetric margins, non-negative along ξ and max-decomposable"""
    margins: MarginMatrix
    xi: AdmissibleOrder

    def in_order(self) -> np.ndarray:
        """Numerators arranged in ξ order"""
        idx = [self.margins.candidates.index(n) for n in self.xi]
        return self.margins.numerators[np.ix_(idx, idx)]

    def value(self, x: str, y: str) -> Fraction:
        return self.margins.value(x, y)

    def is_monotone(self) -> bool:
        """0 <= m_xy <= 1 whenever x precedes y"""
        upper = self.in_order()[np.triu_indices(len(self.xi), k=1)]
        den = self.margins.denominator
        return bool(((upper >= 0) & (upper <= den)).all())

    def is_max_decomposable(self) -> bool:
        """m_xz = max(m_xy, m_yz) whenever x precedes y precedes z"""
        return max_decomposable(self.in_order())

    def is_ultrametric(self) -> bool:
        return is_ultrametric(self.margins)

    def scores(self) -> ProjectedScores:
        return ProjectedScores.from_margins(self.margins)


def max_decomposable(ordered: np.ndarray) -> bool:
    """Check m[i, k] = max(m[i, j], m[j, k]) for all i < j < k"""
    n = ordered.shape[0]
    for j in range(1, n - 1):
        left = ordered[:j, j:j + 1]
        right = ordered[j:j + 1, j + 1:]
        if not (ordered[:j, j + 1:] == np.maximum(left, right)).all():
            return False
    return True


def is_ultrametric(matrix: ScoreMatrix) -> bool:
    """|m| satisfies d_xz <= max(d_xy, d_yz) for all triples"""
    d = np.abs(matrix.numerators)
    for y in range(matrix.N):
        bound = np.maximum(d[:, y:y + 1], d[y:y + 1, :])
        np.fill_diagonal(bound, 0)
        if (d > bound).any():
            return False
    return True


def intermediate_margins(indirect: MarginMatrix, xi: AdmissibleOrder) -> IntermediateMargins:
    """
    sigma_i = min{ M*_pq : p <= x_i, x_{i+1} <= q } in ξ order

    A running column minimum over the rows seen so far gives every
    rectangle minimum in one sweep.

    Raises:
        ValueError: If some ξ-ordered indirect margin is negative
    """
    idx = [indirect.candidates.index(n) for n in xi]
    ordered = indirect.numerators[np.ix_(idx, idx)]
    n = len(idx)
    if n > 1 and (ordered[np.triu_indices(n, k=1)] < 0).any():
        raise ValueError("order is not admissible: negative indirect margin along it")

    den = indirect.denominator
    sigma: List[Fraction] = []
    column_min = None
    for i in range(n - 1):
        row = ordered[i, :]
        column_min = row.copy() if column_min is None else np.minimum(column_min, row)
        sigma.append(Fraction(int(column_min[i + 1:].min()), den))
    return IntermediateMargins(xi, tuple(sigma))


def projected_margins(intermediate: IntermediateMargins) -> ProjectedMargins:
    """m_xy = max of sigma strictly between the positions of x and y; negated below"""
    xi = intermediate.xi
    candidates = xi.candidates
    n = len(xi)
    den = common_denominator(intermediate.sigma)
    sig = [int(s * den) for s in intermediate.sigma]

    nums = np.zeros((n, n), dtype=object)
    for i in range(n):
        running = None
        for j in range(i + 1, n):
            running = sig[j - 1] if running is None else max(running, sig[j - 1])
            a, b = candidates.index(xi.sequence[i]), candidates.index(xi.sequence[j])
            nums[a, b] = running
            nums[b, a] = -running
    return ProjectedMargins(MarginMatrix(candidates, nums, den), xi)


def default_order(matrix: ScoreMatrix) -> AdmissibleOrder:
    """Admissible order from tie-splitting ranks of the indirect comparison relation"""
    nu = comparison_relation(indirect_scores(matrix))
    return admissible_order(nu, tie_splitting_ranks(nu))


def project_with_order(matrix: ScoreMatrix, xi: AdmissibleOrder) -> ProjectedScores:
    """Projected scores using a caller-supplied admissible order"""
    indirect = margins(indirect_scores(matrix))
    return projected_margins(intermediate_margins(indirect, xi)).scores()


def project(matrix: ScoreMatrix) -> ProjectedScores:
    """
    Full projection P on Γ

    closure -> margins -> admissible order -> intermediate -> projected margins -> p = (1+m)/2
    """
    scores = indirect_scores(matrix)
    nu = comparison_relation(scores)
    xi = admissible_order(nu, tie_splitting_ranks(nu))
    projected = projected_margins(intermediate_margins(margins(scores), xi))
    logger.debug(f"Projected along {' '.join(xi.sequence)}")
    return projected.scores()


def satisfies_fixed_point_conditions(matrix: ScoreMatrix, xi: AdmissibleOrder) -> bool:
    """m_xy >= 0 whenever x precedes y, and m_xz = max(m_xy, m_yz) along ξ"""
    m = margins(matrix)
    idx = [m.candidates.index(n) for n in xi]
    ordered = m.numerators[np.ix_(idx, idx)]
    n = len(idx)
    if n > 1 and (ordered[np.triu_indices(n, k=1)] < 0).any():
        return False
    return max_decomposable(ordered)


def fixed_point_order(matrix: ScoreMatrix, bound: Optional[int] = None) -> Optional[AdmissibleOrder]:
    """
    A total order for which the matrix satisfies the fixed-point conditions, or None

    Any such order is admissible, so the search covers the default order and,
    up to the enumeration bound, every admissible order.
    """
    bound = Config.ENUMERATION_BOUND if bound is None else bound
    try:
        first = default_order(matrix)
    except ValueError:
        return None
    if satisfies_fixed_point_conditions(matrix, first):
        return first
    if matrix.N > bound:
        return None
    nu = comparison_relation(indirect_scores(matrix))
    for xi in all_admissible_orders(nu, bound):
        if satisfies_fixed_point_conditions(matrix, xi):
            return xi
    return None
