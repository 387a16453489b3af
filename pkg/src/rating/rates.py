"""
Rank-Like Rates
Rates from projected scores, the social preorder, and the Borda and maximin baselines
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from ..closure.relations import Relation
from ..profile.ballots import CandidateSet, Profile
from ..profile.llull_matrix import ScoreMatrix
from ..utils.logger import logger


@dataclass(frozen=True)
class RateVector:
    """Rate per candidate; lower is better"""
    candidates: CandidateSet
    rates: Dict[str, Fraction]

    def __getitem__(self, name: str) -> Fraction:
        return self.rates[name]

    def as_tuple(self) -> Tuple[Fraction, ...]:
        return tuple(self.rates[n] for n in self.candidates)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RateVector):
            return NotImplemented
        return self.candidates == other.candidates and self.as_tuple() == other.as_tuple()

    __hash__ = None

    def total(self) -> Fraction:
        return sum(self.rates.values(), Fraction(0))

    def validate(self) -> Tuple[bool, str]:
        """
        Rates lie in [1, N] and sum to N(N+1)/2

        Returns:
            (ok, reason)
        """
        n = self.candidates.N
        for name in self.candidates:
            r = self.rates[name]
            if r < 1 or r > n:
                return False, f"rate of {name} is {r}, outside [1, {n}]"
        expected = Fraction(n * (n + 1), 2)
        if self.total() != expected:
            return False, f"rates sum to {self.total()}, expected {expected}"
        return True, "ok"


@dataclass(frozen=True)
class SocialPreorder:
    """Total preorder {xy : R_x <= R_y} with its strict part and exact-tie classes"""
    relation: Relation
    strict: Relation
    tie_classes: Tuple[Tuple[str, ...], ...]

    def has_ties(self) -> bool:
        return any(len(c) > 1 for c in self.tie_classes)


def rank_like_rates(projected: ScoreMatrix) -> RateVector:
    """R_x = N - sum over y of p_xy"""
    n = projected.N
    sums = projected.row_sums()
    return RateVector(projected.candidates, {x: n - sums[x] for x in projected.candidates})


def rates_from_margins(projected_margins: ScoreMatrix) -> RateVector:
    """R_x = (N + 1 - sum over y of m_xy) / 2, the margin form of the rates"""
    n = projected_margins.N
    sums = projected_margins.row_sums()
    return RateVector(projected_margins.candidates,
                      {x: (n + 1 - sums[x]) / 2 for x in projected_margins.candidates})


def social_preorder(rates: RateVector) -> SocialPreorder:
    """Order by rate; equal rates form tie classes listed in declared order"""
    candidates = rates.candidates
    weak = frozenset((x, y) for x in candidates for y in candidates
                     if x != y and rates[x] <= rates[y])
    strict = frozenset((x, y) for x, y in weak if rates[x] < rates[y])

    classes: Dict[Fraction, List[str]] = {}
    for name in candidates:
        classes.setdefault(rates[name], []).append(name)
    tie_classes = tuple(tuple(classes[r]) for r in sorted(classes))

    if any(len(c) > 1 for c in tie_classes):
        logger.debug(f"Social order has ties: "
                     f"{'; '.join(' = '.join(c) for c in tie_classes if len(c) > 1)}")
    return SocialPreorder(Relation(candidates, weak), Relation(candidates, strict), tie_classes)


def borda_mean_ranks(matrix: ScoreMatrix) -> RateVector:
    """Mean rank a_x = N - sum over y of v_xy"""
    return rank_like_rates(matrix)


def maximin_scores(matrix: ScoreMatrix) -> Dict[str, Fraction]:
    """
    sigma_x = min over y of v_xy (higher is better)

    Comparison baseline only: it does not respect majority dominance between groups.
    """
    if matrix.N == 1:
        return {matrix.candidates.names[0]: Fraction(1)}
    nums = matrix.numerators
    den = matrix.denominator
    result = {}
    for i, x in enumerate(matrix.candidates):
        row = [nums[i, j] for j in range(matrix.N) if j != i]
        result[x] = Fraction(int(min(row)), den)
    return result


def mean_ranks_from_ballots(profile: Profile) -> RateVector:
    """Weighted mean position per candidate; a tier shares the average of its positions"""
    total = profile.total_weight
    if total <= 0:
        raise ValueError("total ballot weight must be positive")
    sums = {x: Fraction(0) for x in profile.candidates}
    for b in profile.ballots:
        start = 1
        for tier in b.tiers:
            position = start + Fraction(len(tier) - 1, 2)
            for x in tier:
                sums[x] += b.weight * position
            start += len(tier)
    return RateVector(profile.candidates, {x: sums[x] / total for x in profile.candidates})
