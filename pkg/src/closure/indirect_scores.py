"""
Indirect Scores
Max-min path closure of a score matrix, margins, and the indirect comparison relation
"""
import numpy as np

from ..profile.llull_matrix import ScoreMatrix
from ..utils.logger import logger
from ..utils.rationals import to_object_array, working_array
from .relations import Relation, strict_relation


class IndirectScores(ScoreMatrix):
    """s_xy: score of the strongest path from x to y, where a path scores its weakest link"""


class MarginMatrix(ScoreMatrix):
    """Antisymmetric differences m_xy = s_xy - s_yx"""

    def is_antisymmetric(self) -> bool:
        return bool(np.array_equal(self.numerators, -self.numerators.T))


def indirect_scores(matrix: ScoreMatrix) -> IndirectScores:
    """
    Max-min closure, Floyd-Warshall style

    For each pivot k, s = max(s, min(s[:, k], s[k, :])) with the diagonal
    held at the top value so that a pivot never weakens its own row or column.

    Returns:
        IndirectScores over the same candidates
    """
    den = matrix.denominator
    work = working_array(matrix.numerators)
    np.fill_diagonal(work, den)
    for k in range(matrix.N):
        work = np.maximum(work, np.minimum(work[:, k:k + 1], work[k:k + 1, :]))
    np.fill_diagonal(work, 0)
    return IndirectScores(matrix.candidates, to_object_array(work), den)


def margins(of: ScoreMatrix) -> MarginMatrix:
    """m_xy = v_xy - v_yx for direct or indirect scores"""
    nums = of.numerators
    return MarginMatrix(of.candidates, nums - nums.T, of.denominator)


def satisfies_min_inequality(matrix: ScoreMatrix) -> bool:
    """s_xz >= min(s_xy, s_yz) for all distinct x, y, z"""
    work = working_array(matrix.numerators)
    np.fill_diagonal(work, matrix.denominator)
    for y in range(matrix.N):
        if (np.minimum(work[:, y:y + 1], work[y:y + 1, :]) > work).any():
            return False
    return True


def comparison_relation(scores: ScoreMatrix) -> Relation:
    """
    Indirect comparison relation {xy : s_xy > s_yx}

    Raises:
        ValueError: If the scores fail the min-inequality (raw scores passed by mistake)
    """
    if not satisfies_min_inequality(scores):
        raise ValueError("scores do not satisfy the min-inequality; "
                         "compute indirect scores before the comparison relation")
    relation = strict_relation(scores)
    logger.debug(f"Indirect comparison relation has {len(relation)} pairs")
    return relation
