"""
Executable Properties
Each check returns (passed, detail); a failure of a guaranteed property is a bug
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..closure.indirect_scores import MarginMatrix, comparison_relation, indirect_scores, margins
from ..closure.relations import (
    codual,
    contract_relation,
    is_autonomous,
    transitive_closure,
)
from ..ordering.admissible_order import all_admissible_orders
from ..profile.ballots import Profile, contract_profile, restrict_profile
from ..profile.llull_matrix import LlullMatrix, ScoreMatrix, aggregate, validate_gamma
from ..projection.projector import (
    default_order,
    fixed_point_order,
    intermediate_margins,
    project,
    project_with_order,
    projected_margins,
    satisfies_fixed_point_conditions,
)
from ..rating.rates import (
    RateVector,
    borda_mean_ranks,
    maximin_scores,
    mean_ranks_from_ballots,
    rank_like_rates,
    social_preorder,
)
from ..utils.logger import logger
from .generators import Lift, PlantedProfile, planted_majority, random_lift, random_profile
from .oracles import maxmin_power, oracle_indirect_scores

Outcome = Tuple[bool, str]


def rates_of(source) -> RateVector:
    """Rank-like rates of a profile or a Γ matrix"""
    matrix = aggregate(source) if isinstance(source, Profile) else source
    return rank_like_rates(project(matrix))


# -- closure ---------------------------------------------------------------

def check_oracles(v: ScoreMatrix) -> Outcome:
    """Floyd-Warshall closure = simple-path enumeration = max-min power"""
    closure = indirect_scores(v)
    if oracle_indirect_scores(v) != closure:
        return False, "closure differs from path enumeration"
    if maxmin_power(v) != closure:
        return False, "closure differs from the max-min matrix power"
    return True, ''


def check_closure_laws(v: ScoreMatrix) -> Outcome:
    """Dominance, idempotence and a transitive asymmetric comparison relation"""
    s = indirect_scores(v)
    if (s.numerators * v.denominator < v.numerators * s.denominator).any():
        return False, "indirect scores below direct scores"
    if indirect_scores(s) != s:
        return False, "closure is not idempotent"
    if not comparison_relation(s).is_partial_order():
        return False, "comparison relation is not a partial order"
    return True, ''


# -- projection ------------------------------------------------------------

def check_xi_independence(v: ScoreMatrix, bound: int = 5) -> Outcome:
    """
    Every admissible order yields the same projected scores, pairwise and
    position-indexed
    """
    nu = comparison_relation(indirect_scores(v))
    orders = all_admissible_orders(nu, bound)
    reference: Optional[LlullMatrix] = None
    positional: Optional[np.ndarray] = None
    for xi in orders:
        p = project_with_order(v, xi)
        idx = [p.candidates.index(x) for x in xi]
        by_position = p.numerators[np.ix_(idx, idx)]
        if reference is None:
            reference, positional = p, by_position
            continue
        if p != reference:
            return False, f"projected scores differ for order {' '.join(xi.sequence)}"
        if not np.array_equal(by_position, positional):
            return False, f"position-indexed scores differ for order {' '.join(xi.sequence)}"
    return True, f"{len(orders)} admissible orders"


def check_idempotence(v: ScoreMatrix) -> Outcome:
    p = project(v)
    ok, violations = validate_gamma(p)
    if not ok:
        return False, f"projection leaves Γ: {violations[0]}"
    if project(p) != p:
        return False, "P(P(v)) != P(v)"
    return True, ''


def check_image(v: ScoreMatrix) -> Outcome:
    """Outputs satisfy the fixed-point conditions along the order used"""
    xi = default_order(v)
    p = project_with_order(v, xi)
    if not satisfies_fixed_point_conditions(p, xi):
        return False, "projected scores fail the fixed-point conditions"
    return True, ''


def check_fixed_point(v: ScoreMatrix) -> Outcome:
    """A matrix satisfying the fixed-point conditions is left unchanged"""
    if fixed_point_order(v) is None:
        return False, "matrix does not satisfy the fixed-point conditions"
    if project(v) != v:
        return False, "fixed point moved by the projection"
    return True, ''


def check_projected_structure(v: ScoreMatrix) -> Outcome:
    """
    Along ξ: p_xz >= p_yz and p_zx <= p_zy for x before y; equalities when p_xy = p_yx;
    |m| ultrametric
    """
    s = indirect_scores(v)
    xi = default_order(v)
    pm = projected_margins(intermediate_margins(margins(s), xi))
    p = pm.scores()
    if not pm.is_ultrametric():
        return False, "projected margins are not ultrametric"
    seq = xi.sequence
    for i, x in enumerate(seq):
        for y in seq[i + 1:]:
            if p[x, y] < p[y, x]:
                return False, f"p_{x}{y} < p_{y}{x} although {x} precedes {y}"
            tied = p[x, y] == p[y, x]
            for z in seq:
                if z in (x, y):
                    continue
                if p[x, z] < p[y, z] or p[z, x] > p[z, y]:
                    return False, f"monotone structure fails at ({x}, {y}, {z})"
                if tied and (p[x, z] != p[y, z] or p[z, x] != p[z, y]):
                    return False, f"tied pair ({x}, {y}) differs against {z}"
    return True, ''


# -- rating ----------------------------------------------------------------

def check_rates_bridge(v: ScoreMatrix) -> Outcome:
    """Rates against projected scores, the comparison relation, and unanimous extremes"""
    s = indirect_scores(v)
    nu = comparison_relation(s)
    p = project(v)
    rates = rank_like_rates(p)
    ok, reason = rates.validate()
    if not ok:
        return False, reason
    reach = transitive_closure(codual(nu))
    n = v.N
    for x, y in v.pairs():
        if (rates[x] == rates[y]) != (p[x, y] == p[y, x]):
            return False, f"R_{x} = R_{y} disagrees with p at ({x}, {y})"
        if (rates[x] < rates[y]) != (p[x, y] > p[y, x]):
            return False, f"R_{x} < R_{y} disagrees with p at ({x}, {y})"
        if (rates[x] <= rates[y]) != ((x, y) in reach):
            return False, f"R_{x} <= R_{y} disagrees with the codual closure"
        if rates[x] < rates[y] and (x, y) not in nu:
            return False, f"R_{x} < R_{y} but ({x}, {y}) not in the comparison relation"
    for x in v.candidates:
        others = [y for y in v.candidates if y != x]
        if (rates[x] == 1) != all(v[x, y] == 1 for y in others):
            return False, f"winner characterisation fails for {x}"
        if (rates[x] == n) != all(v[x, y] == 0 for y in others):
            return False, f"loser characterisation fails for {x}"
    return True, ''


def check_mean_rank_agreement(profile: Profile) -> Tuple[Optional[bool], str]:
    """
    Rates equal Borda mean ranks for strict-ranking profiles whose matrix is a fixed point

    Returns:
        (None, reason) when the profile is outside the hypothesis
    """
    if any(len(t) > 1 for b in profile.ballots for t in b.tiers):
        return None, "ballots are not strict rankings"
    v = aggregate(profile)
    if project(v) != v:
        return None, "Llull matrix is not a fixed point"
    mean = mean_ranks_from_ballots(profile)
    if borda_mean_ranks(v) != mean:
        return False, "mean ranks from the Llull matrix differ from ballot positions"
    if rates_of(v) != mean:
        return False, "rates differ from mean ranks"
    return True, ''


# -- decomposition ---------------------------------------------------------

@dataclass(frozen=True)
class DecompositionReport:
    """The four equivalent conditions for a partition X, Y"""
    unanimity: bool
    restriction_x: bool
    restriction_y: bool
    sum_condition: bool

    @property
    def conditions(self) -> Tuple[bool, bool, bool, bool]:
        return self.unanimity, self.restriction_x, self.restriction_y, self.sum_condition

    @property
    def consistent(self) -> bool:
        return len(set(self.conditions)) == 1


def check_decomposition(profile: Profile, X: Iterable[str], Y: Iterable[str]) -> DecompositionReport:
    """
    Evaluate unanimity of X over Y, rates of X equal to rates from the X
    restriction, rates of Y equal to rates from the Y restriction plus |X|,
    and the rates of X summing to |X|(|X|+1)/2

    Raises:
        ValueError: If X, Y do not partition the candidates
    """
    X, Y = set(X), set(Y)
    names = set(profile.candidates.names)
    if not X or not Y or X & Y or X | Y != names:
        raise ValueError("X and Y must be non-empty and partition the candidates")

    v = aggregate(profile)
    rates = rates_of(v)
    rates_x = rates_of(restrict_profile(profile, X))
    rates_y = rates_of(restrict_profile(profile, Y))
    k = len(X)

    report = DecompositionReport(
        unanimity=all(v[x, y] == 1 for x in X for y in Y),
        restriction_x=all(rates[x] == rates_x[x] for x in X),
        restriction_y=all(rates[y] == rates_y[y] + k for y in Y),
        sum_condition=sum((rates[x] for x in X), Fraction(0)) == Fraction(k * (k + 1), 2),
    )
    if not report.consistent:
        logger.warning(f"Decomposition conditions disagree: {report.conditions}")
    return report


# -- Condorcet-Smith -------------------------------------------------------

def check_condorcet_smith(planted: PlantedProfile) -> Outcome:
    """Majority of X over Y puts all of X strictly above all of Y"""
    v = aggregate(planted.profile)
    nu = comparison_relation(indirect_scores(v))
    rates = rates_of(v)
    for x in planted.X:
        for y in planted.Y:
            if (x, y) not in nu:
                return False, f"({x}, {y}) missing from the comparison relation"
            if not rates[x] < rates[y]:
                return False, f"R_{x} = {rates[x]} not below R_{y} = {rates[y]}"
    return True, ''


def maximin_respects_majority(planted: PlantedProfile) -> bool:
    sigma = maximin_scores(aggregate(planted.profile))
    return all(sigma[x] > sigma[y] for x in planted.X for y in planted.Y)


# -- clones ----------------------------------------------------------------

def check_clones(planted: PlantedProfile) -> Tuple[Optional[bool], str]:
    """
    C stays autonomous through every stage, and tallying the contracted
    profile gives the contraction of the social preorder

    Returns:
        (None, reason) when C is the whole candidate set
    """
    profile, C = planted.profile, set(planted.C)
    if len(C) == profile.candidates.N:
        return None, "clone set is the whole candidate set"

    v = aggregate(profile)
    s = indirect_scores(v)
    nu = comparison_relation(s)
    p = project(v)
    preorder = social_preorder(rank_like_rates(p)).relation

    stages = [('Llull matrix', v.is_autonomous(C)), ('indirect scores', s.is_autonomous(C)),
              ('projected scores', p.is_autonomous(C)), ('comparison relation', is_autonomous(nu, C)),
              ('social preorder', is_autonomous(preorder, C))]
    for stage, autonomous in stages:
        if not autonomous:
            return False, f"clone set not autonomous for the {stage}"

    contracted = contract_profile(profile, C)
    expected = contract_relation(preorder, C)
    actual = social_preorder(rates_of(contracted)).relation
    if actual != expected:
        return False, "tally of the contracted profile differs from the contracted preorder"
    return True, ''


# -- monotonicity ----------------------------------------------------------

def check_monotonicity(source, a: str, lift: Lift) -> Outcome:
    """
    Raising a: indirect scores of a improve, R_a < R_y implies R'_a <= R'_y,
    and a unique winner stays the unique winner

    Raises:
        ValueError: If the lift leaves Γ
    """
    v = aggregate(source) if isinstance(source, Profile) else source
    if lift.a != a:
        raise ValueError("lift raises a different candidate")
    w = lift.apply(v)

    s, t = indirect_scores(v), indirect_scores(w)
    for y in v.candidates:
        if y == a:
            continue
        if t[a, y] < s[a, y]:
            return False, f"indirect score of ({a}, {y}) decreased"
        if t[y, a] > s[y, a]:
            return False, f"indirect score of ({y}, {a}) increased"

    before, after = rates_of(v), rates_of(w)
    others = [y for y in v.candidates if y != a]
    for y in others:
        if before[a] < before[y] and not after[a] <= after[y]:
            return False, f"{a} fell behind {y} after being raised"
    if all(before[a] < before[y] for y in others) and not all(after[a] < after[y] for y in others):
        return False, f"{a} lost its unique win after being raised"
    if lift.is_zero() and after != before:
        return False, "zero lift changed the rates"
    return True, ''


def violates_strict_monotonicity(v: ScoreMatrix, lift: Lift) -> Optional[str]:
    """Describe a failure of R'_a <= R_a or of strict/weak order preservation, if any"""
    a = lift.a
    w = lift.apply(v)
    before, after = rates_of(v), rates_of(w)
    if after[a] > before[a]:
        return f"R_{a} rose from {before[a]} to {after[a]}"
    for y in v.candidates:
        if y == a:
            continue
        if before[a] < before[y] and not after[a] < after[y]:
            return f"{a} was ahead of {y} but no longer strictly"
        if before[a] <= before[y] and not after[a] <= after[y]:
            return f"{a} was not behind {y} but fell behind"
    return None


# -- continuity ------------------------------------------------------------

def perturb(v: ScoreMatrix, directions: np.ndarray, eps: Fraction) -> LlullMatrix:
    """
    Move margins by eps * d (d in [-1, 1] per upper pair), clamp to [-1, 1],
    map back with v = (1 + m) / 2
    """
    m = margins(v)
    rows = m.fraction_rows()
    n = v.N
    for i in range(n):
        for j in range(i + 1, n):
            moved = min(Fraction(1), max(Fraction(-1), rows[i][j] + eps * Fraction(directions[i, j])))
            rows[i][j], rows[j][i] = moved, -moved
    return LlullMatrix.from_margins(MarginMatrix.from_fractions(v.candidates, rows))


def random_directions(rng: np.random.Generator, n: int) -> np.ndarray:
    """Upper-triangular directions k/1000 with k in [-1000, 1000]"""
    d = np.zeros((n, n), dtype=object)
    for i in range(n):
        for j in range(i + 1, n):
            d[i, j] = Fraction(int(rng.integers(-1000, 1001)), 1000)
    return d


def max_rate_change(first: RateVector, second: RateVector) -> Fraction:
    return max(abs(first[x] - second[x]) for x in first.candidates)


def continuity_probe(v: ScoreMatrix, eps: Fraction, trials: int, seed: int = 0) -> Fraction:
    """Largest change of any rate over random perturbations of margins by at most eps"""
    eps = Fraction(eps)
    if eps < 0:
        raise ValueError("eps must be non-negative")
    rng = np.random.default_rng(seed)
    base = rates_of(v)
    worst = Fraction(0)
    for _ in range(trials):
        moved = rates_of(perturb(v, random_directions(rng, v.N), eps))
        worst = max(worst, max_rate_change(base, moved))
    return worst


def continuity_sweep(v: ScoreMatrix, exponents: Sequence[int], trials: int,
                     seed: int = 0) -> List[Fraction]:
    """
    Observed change for eps = 2^-k, one entry per exponent

    Directions are drawn once and scaled by each step size, so entries for
    different k are comparable.
    """
    rng = np.random.default_rng(seed)
    base = rates_of(v)
    directions = [random_directions(rng, v.N) for _ in range(trials)]
    observed = []
    for k in exponents:
        eps = Fraction(1, 2 ** k)
        observed.append(max((max_rate_change(base, rates_of(perturb(v, d, eps))) for d in directions),
                            default=Fraction(0)))
    return observed


# -- expected-failure searches ---------------------------------------------

@dataclass(frozen=True)
class SearchResult:
    """Outcome of a budgeted search for a counterexample"""
    name: str
    found: bool
    seed: Optional[int]
    tried: int
    detail: str = ''

    def __str__(self) -> str:
        if self.found:
            return f"{self.name}: found at seed {self.seed} after {self.tried} tries ({self.detail})"
        return f"{self.name}: not found in {self.tried} tries"


def maximin_condorcet_smith_search(seed: int, budget: int, n: int = 5) -> SearchResult:
    """Look for a planted majority that the maximin baseline orders wrongly"""
    for k in range(budget):
        planted = planted_majority(np.random.default_rng(seed + k), n)
        if not maximin_respects_majority(planted):
            logger.info(f"Maximin ordering disagreement at seed {seed + k}")
            return SearchResult('maximin vs majority', True, seed + k, k + 1,
                                f"X={' '.join(planted.X)}")
    return SearchResult('maximin vs majority', False, None, budget)


def strict_monotonicity_search(seed: int, budget: int, n: int = 4) -> SearchResult:
    """Look for a lift under which the raised candidate's rate or strict standing worsens"""
    for k in range(budget):
        rng = np.random.default_rng(seed + k)
        v = aggregate(random_profile(rng, n))
        lift = random_lift(rng, v)
        problem = violates_strict_monotonicity(v, lift)
        if problem:
            logger.info(f"Strict monotonicity counterexample at seed {seed + k}: {problem}")
            return SearchResult('strict monotonicity', True, seed + k, k + 1, problem)
    return SearchResult('strict monotonicity', False, None, budget)
