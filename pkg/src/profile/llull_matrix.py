"""
Llull Matrix
Exact-rational pairwise score matrices and ballot aggregation
"""
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, TypeVar

import numpy as np
import pandas as pd

from .ballots import Ballot, CandidateSet, Profile
from ..utils.logger import logger
from ..utils.rationals import Number, pack_fractions, reduce_fraction_array

M = TypeVar('M', bound='ScoreMatrix')


@dataclass(frozen=True, eq=False)
class ScoreMatrix:
    """
    N×N exact-rational matrix indexed by candidates

    Entries are integer numerators over one shared denominator, reduced by
    their common gcd. The diagonal is unused and stored as zero. Equality is
    exact and requires the same candidates in the same declared order.
    """
    candidates: CandidateSet
    numerators: np.ndarray
    denominator: int = 1

    def __post_init__(self):
        nums = np.asarray(self.numerators, dtype=object)
        n = self.candidates.N
        if nums.shape != (n, n):
            raise ValueError(f"matrix shape {nums.shape} does not match {n} candidates")
        nums = nums.copy()
        np.fill_diagonal(nums, 0)
        nums, den = reduce_fraction_array(nums, int(self.denominator))
        nums.setflags(write=False)
        object.__setattr__(self, 'numerators', nums)
        object.__setattr__(self, 'denominator', den)

    # -- construction -----------------------------------------------------

    @classmethod
    def from_fractions(cls, candidates: CandidateSet, rows: Sequence[Sequence[Number]]):
        """Build from a square table of rationals (diagonal ignored)"""
        nums, den = pack_fractions(rows)
        return cls(candidates, nums, den)

    @classmethod
    def from_counts(cls, candidates: CandidateSet, rows: Sequence[Sequence[Number]],
                    total: Number):
        """Build from absolute counts divided by a total (e.g. number of voters)"""
        total = Fraction(total)
        if total <= 0:
            raise ValueError("total weight must be positive")
        return cls.from_fractions(candidates, [[Fraction(v) / total for v in row] for row in rows])

    def _with(self: M, numerators: np.ndarray, candidates: Optional[CandidateSet] = None) -> M:
        return type(self)(candidates or self.candidates, numerators, self.denominator)

    # -- access -----------------------------------------------------------

    @property
    def N(self) -> int:
        return self.candidates.N

    def value(self, x: str, y: str) -> Fraction:
        i, j = self.candidates.index(x), self.candidates.index(y)
        return Fraction(self.numerators[i, j], self.denominator)

    def __getitem__(self, pair: Tuple[str, str]) -> Fraction:
        return self.value(*pair)

    def fraction_rows(self) -> List[List[Fraction]]:
        den = self.denominator
        return [[Fraction(x, den) for x in row] for row in self.numerators]

    def pairs(self) -> Iterable[Tuple[str, str]]:
        """Ordered proper pairs in declared order"""
        for x in self.candidates:
            for y in self.candidates:
                if x != y:
                    yield x, y

    def to_frame(self, order: Optional[Sequence[str]] = None, scale: Number = 1) -> pd.DataFrame:
        """DataFrame of Fractions (times scale); diagonal left as None"""
        order = list(order or self.candidates.names)
        idx = [self.candidates.index(n) for n in order]
        scale = Fraction(scale)
        data = [[None if i == j else Fraction(self.numerators[i, j], self.denominator) * scale
                 for j in idx] for i in idx]
        return pd.DataFrame(data, index=order, columns=order, dtype=object)

    def scaled_counts(self, total: Number) -> pd.DataFrame:
        """Absolute counts table (entries times total weight)"""
        return self.to_frame(scale=total)

    # -- structure --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, ScoreMatrix):
            return NotImplemented
        return (self.candidates.names == other.candidates.names
                and self.denominator == other.denominator
                and bool(np.array_equal(self.numerators, other.numerators)))

    __hash__ = None

    def submatrix(self: M, subset: Iterable[str]) -> M:
        """Rows and columns of a subset, declared order kept"""
        sub = self.candidates.subset(subset)
        idx = [self.candidates.index(n) for n in sub]
        return self._with(self.numerators[np.ix_(idx, idx)], candidates=sub)

    def relabeled(self: M, mapping: Mapping[str, str]) -> M:
        """Same entries under new names (positions unchanged)"""
        return self._with(self.numerators, candidates=CandidateSet(
            tuple(mapping[n] for n in self.candidates)))

    def is_autonomous(self, members: Iterable[str]) -> bool:
        """Every outsider has the same score against each member, in both directions"""
        inside = self.candidates.indices(set(members))
        outside = [i for i in range(self.N) if i not in set(inside)]
        if not inside or not outside:
            return True
        rows = self.numerators[np.ix_(inside, outside)]
        cols = self.numerators[np.ix_(outside, inside)]
        return bool((rows == rows[0:1, :]).all() and (cols == cols[:, 0:1]).all())

    def row_sums(self) -> Dict[str, Fraction]:
        den = self.denominator
        return {x: Fraction(int(s), den) for x, s in zip(self.candidates, self.numerators.sum(axis=1))}


class LlullMatrix(ScoreMatrix):
    """Pairwise scores v_xy; members of Γ satisfy v_xy + v_yx = 1"""

    @classmethod
    def from_margins(cls, margins: ScoreMatrix) -> 'LlullMatrix':
        """Scores v = (1 + m) / 2 from an antisymmetric margin matrix"""
        den = margins.denominator
        return cls(margins.candidates, margins.numerators + den, 2 * den)


@dataclass(frozen=True)
class GammaViolation:
    """One off-diagonal pair outside Γ"""
    pair: Tuple[str, str]
    forward: Fraction
    backward: Fraction
    residual: Fraction
    reason: str

    def __str__(self) -> str:
        x, y = self.pair
        return (f"pair ({x}, {y}): {self.reason}; v_xy={self.forward}, v_yx={self.backward}, "
                f"residual {self.residual}")


def ballot_to_scores(ballot: Ballot, candidates: CandidateSet) -> LlullMatrix:
    """
    Score matrix of one complete ballot

    Entry 1 if x sits in a strictly earlier tier than y, 1/2 if tied, 0 otherwise.
    """
    return LlullMatrix(candidates, _ballot_halves(ballot, candidates), 2)


def _ballot_halves(ballot: Ballot, candidates: CandidateSet) -> np.ndarray:
    """Ballot scores as numerators over 2 (unreduced)"""
    if not ballot.is_complete(candidates):
        raise ValueError(f"incomplete ballot: {ballot.render()}")
    tier = ballot.tier_of()
    t = np.array([tier[n] for n in candidates])
    halves = (2 * (t[:, None] < t[None, :]) + (t[:, None] == t[None, :])).astype(object)
    np.fill_diagonal(halves, 0)
    return halves


def aggregate(profile: Profile) -> LlullMatrix:
    """
    Weighted average of the ballot matrices, weights w_k / W

    Raises:
        ValueError: If the total weight is zero
    """
    total = profile.total_weight
    if total <= 0:
        raise ValueError("total ballot weight must be positive")

    scale = 1
    for b in profile.ballots:
        scale = lcm(scale, b.weight.denominator)

    n = profile.candidates.N
    nums = np.zeros((n, n), dtype=object)
    for b in profile.ballots:
        if b.weight == 0:
            continue
        w = int(b.weight * scale)
        nums = nums + w * _ballot_halves(b, profile.candidates)

    # ballot matrices are halves; total of integer weights is total * scale
    matrix = LlullMatrix(profile.candidates, nums, 2 * int(total * scale))
    logger.debug(f"Aggregated {len(profile.ballots)} ballots into a {n}x{n} Llull matrix "
                 f"(denominator {matrix.denominator})")
    return matrix


def validate_gamma(matrix: ScoreMatrix) -> Tuple[bool, List[GammaViolation]]:
    """
    Check membership in Γ: entries in [0, 1] and v_xy + v_yx = 1

    Returns:
        (ok, violations) with one entry per offending unordered pair
    """
    violations: List[GammaViolation] = []
    names = matrix.candidates.names
    den = matrix.denominator
    nums = matrix.numerators
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            a, b = nums[i, j], nums[j, i]
            forward, backward = Fraction(a, den), Fraction(b, den)
            residual = forward + backward - 1
            reasons = []
            if not (0 <= a <= den and 0 <= b <= den):
                reasons.append("score outside [0, 1]")
            if residual != 0:
                reasons.append("completeness v_xy + v_yx = 1 fails")
            if reasons:
                violations.append(GammaViolation((names[i], names[j]), forward, backward,
                                                 residual, ' and '.join(reasons)))
    return len(violations) == 0, violations
