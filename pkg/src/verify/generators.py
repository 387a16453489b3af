"""
Generators
Seeded random Γ matrices, profiles, and profiles with planted structure
"""
import string
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..profile.ballots import Ballot, CandidateSet, Profile
from ..profile.llull_matrix import LlullMatrix, ScoreMatrix, aggregate, validate_gamma
from ..utils.logger import logger


def candidate_names(n: int) -> CandidateSet:
    """A, B, C, ... (C01, C02, ... beyond 26)"""
    if n <= 26:
        return CandidateSet(tuple(string.ascii_uppercase[:n]))
    width = len(str(n))
    return CandidateSet(tuple(f"C{i:0{width}d}" for i in range(1, n + 1)))


def random_gamma_matrix(rng: np.random.Generator, n: int, max_denominator: int = 24) -> LlullMatrix:
    """Random matrix in Γ: v_xy = k/q, v_yx = (q-k)/q with q drawn once"""
    den = int(rng.integers(2, max_denominator + 1))
    nums = np.zeros((n, n), dtype=object)
    for i in range(n):
        for j in range(i + 1, n):
            k = int(rng.integers(0, den + 1))
            nums[i, j] = k
            nums[j, i] = den - k
    return LlullMatrix(candidate_names(n), nums, den)


def random_tiers(rng: np.random.Generator, names: Sequence[str],
                 tie_probability: float = 0.2) -> Tuple[Tuple[str, ...], ...]:
    """Random ranking with ties: shuffle, then merge neighbours with some probability"""
    if not names:
        return ()
    shuffled = [names[i] for i in rng.permutation(len(names))]
    tiers: List[List[str]] = [[shuffled[0]]]
    for name in shuffled[1:]:
        if rng.random() < tie_probability:
            tiers[-1].append(name)
        else:
            tiers.append([name])
    return tuple(tuple(t) for t in tiers)


def random_profile(rng: np.random.Generator, n: int, voters: Tuple[int, int] = (1, 12),
                   tie_probability: float = 0.2, max_weight: int = 3) -> Profile:
    """Random complete profile with small integer weights"""
    candidates = candidate_names(n)
    count = int(rng.integers(voters[0], voters[1] + 1))
    ballots = tuple(
        Ballot(random_tiers(rng, candidates.names, tie_probability),
               Fraction(int(rng.integers(1, max_weight + 1))))
        for _ in range(count)
    )
    return Profile(candidates, ballots)


def random_total_order_profile(rng: np.random.Generator, n: int,
                               voters: Tuple[int, int] = (1, 12)) -> Profile:
    """Random profile of strict rankings"""
    return random_profile(rng, n, voters, tie_probability=0.0)


@dataclass(frozen=True)
class PlantedProfile:
    """A profile together with the structure it was built to carry"""
    profile: Profile
    structure: str
    params: Dict[str, Tuple[str, ...]] = field(default_factory=dict)

    @property
    def X(self) -> Tuple[str, ...]:
        return self.params.get('X', ())

    @property
    def Y(self) -> Tuple[str, ...]:
        return self.params.get('Y', ())

    @property
    def C(self) -> Tuple[str, ...]:
        return self.params.get('C', ())

    @property
    def a(self) -> Optional[str]:
        return self.params.get('a', (None,))[0]


def _split(rng: np.random.Generator, candidates: CandidateSet, low: int,
           high: int) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
    size = int(rng.integers(low, high + 1))
    chosen = set(candidates.names[i] for i in rng.choice(candidates.N, size=size, replace=False))
    return candidates.ordered(chosen), candidates.ordered(set(candidates.names) - chosen)


def planted_dominance(rng: np.random.Generator, n: int, voters: Tuple[int, int] = (1, 10),
                      tie_probability: float = 0.2) -> PlantedProfile:
    """Every ballot ranks all of X above all of Y (unanimity of X over Y)"""
    if n < 2:
        raise ValueError("dominance needs at least two candidates")
    candidates = candidate_names(n)
    X, Y = _split(rng, candidates, 1, n - 1)
    count = int(rng.integers(voters[0], voters[1] + 1))
    ballots = tuple(
        Ballot(random_tiers(rng, X, tie_probability) + random_tiers(rng, Y, tie_probability),
               Fraction(int(rng.integers(1, 4))))
        for _ in range(count)
    )
    planted = PlantedProfile(Profile(candidates, ballots), 'dominance', {'X': X, 'Y': Y})
    v = aggregate(planted.profile)
    if not all(v[x, y] == 1 for x in X for y in Y):
        raise RuntimeError("planted dominance is missing from the generated profile")
    return planted


def planted_majority(rng: np.random.Generator, n: int, voters: Tuple[int, int] = (3, 15),
                     tie_probability: float = 0.2) -> PlantedProfile:
    """
    A strict majority of ballots ranks X above Y; 2 <= |X| <= N-2

    The remaining ballots are unconstrained.
    """
    if n < 4:
        raise ValueError("majority structure needs at least four candidates")
    candidates = candidate_names(n)
    X, Y = _split(rng, candidates, 2, n - 2)
    total = int(rng.integers(voters[0], voters[1] + 1))
    aligned = total // 2 + 1
    ballots = []
    for k in range(total):
        if k < aligned:
            tiers = random_tiers(rng, X, tie_probability) + random_tiers(rng, Y, tie_probability)
        else:
            tiers = random_tiers(rng, candidates.names, tie_probability)
        ballots.append(Ballot(tiers, Fraction(1)))
    planted = PlantedProfile(Profile(candidates, tuple(ballots)), 'majority', {'X': X, 'Y': Y})
    v = aggregate(planted.profile)
    if not all(v[x, y] > Fraction(1, 2) for x in X for y in Y):
        raise RuntimeError("planted majority is missing from the generated profile")
    return planted


def planted_clones(rng: np.random.Generator, n: int, size: int = 2,
                   voters: Tuple[int, int] = (1, 10), tie_probability: float = 0.2) -> PlantedProfile:
    """
    A clone set C of the given size, autonomous in every ballot

    Each ballot ranks the outsiders plus one representative, then expands the
    representative into C: tied with its tier-mates, or as consecutive tiers.
    """
    if not 1 <= size <= n:
        raise ValueError("clone set size must be between 1 and N")
    candidates = candidate_names(n)
    C, _ = _split(rng, candidates, size, size)
    rep = C[0]
    reduced = [x for x in candidates if x not in C or x == rep]

    count = int(rng.integers(voters[0], voters[1] + 1))
    ballots = []
    for _ in range(count):
        tiers: List[Tuple[str, ...]] = []
        for tier in random_tiers(rng, reduced, tie_probability):
            if rep not in tier:
                tiers.append(tier)
            elif len(tier) > 1 or rng.random() < 0.5:
                tiers.append(tuple(x for x in tier if x != rep) + C)
            else:
                tiers.extend(random_tiers(rng, C, tie_probability))
        ballots.append(Ballot(tuple(tiers), Fraction(int(rng.integers(1, 4)))))
    planted = PlantedProfile(Profile(candidates, tuple(ballots)), 'clones', {'C': C})
    if not aggregate(planted.profile).is_autonomous(C):
        raise RuntimeError("planted clone set is not autonomous")
    return planted


def raise_candidate(rng: np.random.Generator, profile: Profile, a: str,
                    share: float = 0.5) -> PlantedProfile:
    """
    Move a up by one step in a random share of the ballots

    A step lifts a out of its tier just above its former tie-mates, or joins
    the tier above when a was alone. Relations among the other candidates are
    untouched.
    """
    if a not in profile.candidates:
        raise ValueError(f"unknown candidate: '{a}'")
    ballots = []
    for b in profile.ballots:
        if rng.random() >= share:
            ballots.append(b)
            continue
        ballots.append(Ballot(_lift_tiers(b.tiers, a), b.weight))
    return PlantedProfile(Profile(profile.candidates, tuple(ballots)), 'raised', {'a': (a,)})


def _lift_tiers(tiers: Tuple[Tuple[str, ...], ...], a: str) -> Tuple[Tuple[str, ...], ...]:
    tiers = [list(t) for t in tiers]
    k = next(i for i, t in enumerate(tiers) if a in t)
    if len(tiers[k]) > 1:
        tiers[k].remove(a)
        tiers.insert(k, [a])
    elif k > 0:
        tiers.pop(k)
        tiers[k - 1].append(a)
    return tuple(tuple(t) for t in tiers)


@dataclass(frozen=True)
class Lift:
    """
    Raise candidate a against each opponent y by gains[y] >= 0

    v'_ay = v_ay + g_y and v'_ya = v_ya - g_y; all other scores unchanged.
    """
    a: str
    gains: Dict[str, Fraction]

    def apply(self, matrix: ScoreMatrix) -> LlullMatrix:
        """
        Raises:
            ValueError: If a gain is negative or the result leaves Γ
        """
        rows = matrix.fraction_rows()
        i = matrix.candidates.index(self.a)
        for y, gain in self.gains.items():
            gain = Fraction(gain)
            if gain < 0:
                raise ValueError(f"lift gain against {y} is negative")
            j = matrix.candidates.index(y)
            if j == i:
                raise ValueError("a candidate cannot be lifted against itself")
            rows[i][j] += gain
            rows[j][i] -= gain
        lifted = LlullMatrix.from_fractions(matrix.candidates, rows)
        ok, violations = validate_gamma(lifted)
        if not ok:
            raise ValueError(f"lift leaves Γ: {violations[0]}")
        return lifted

    def is_zero(self) -> bool:
        return all(g == 0 for g in self.gains.values())


def random_lift(rng: np.random.Generator, matrix: ScoreMatrix, a: Optional[str] = None) -> Lift:
    """Random gains within the room left below 1, on the matrix's own grid"""
    if a is None:
        a = matrix.candidates.names[int(rng.integers(0, matrix.N))]
    gains = {}
    den = matrix.denominator
    for y in matrix.candidates:
        if y == a:
            continue
        room = den - int(matrix.numerators[matrix.candidates.index(a), matrix.candidates.index(y)])
        gains[y] = Fraction(int(rng.integers(0, room + 1)), den) if rng.random() < 0.7 else Fraction(0)
    return Lift(a, gains)


def lift_between(before: ScoreMatrix, after: ScoreMatrix, a: str) -> Lift:
    """
    Recover the lift turning one matrix into another

    Raises:
        ValueError: If scores not involving a changed, or a lost ground somewhere
    """
    for x, y in before.pairs():
        if a in (x, y):
            continue
        if before[x, y] != after[x, y]:
            raise ValueError(f"score of ({x}, {y}) changed without involving {a}")
    gains = {}
    for y in before.candidates:
        if y == a:
            continue
        gain = after[a, y] - before[a, y]
        if gain < 0 or after[y, a] > before[y, a]:
            raise ValueError(f"{a} lost ground against {y}")
        gains[y] = gain
    return Lift(a, gains)


def random_fixed_point(rng: np.random.Generator, n: int, max_denominator: int = 24) -> LlullMatrix:
    """
    Matrix satisfying the fixed-point conditions for a random order

    Margins m_ij = max(s_i..s_{j-1}) along a shuffled order from random s >= 0.
    """
    candidates = candidate_names(n)
    den = int(rng.integers(1, max_denominator + 1))
    sigma = [int(rng.integers(0, den + 1)) for _ in range(n - 1)]
    order = [candidates.names[i] for i in rng.permutation(n)]
    nums = np.zeros((n, n), dtype=object)
    for i in range(n):
        running = 0
        for j in range(i + 1, n):
            running = max(running, sigma[j - 1])
            a, b = candidates.index(order[i]), candidates.index(order[j])
            nums[a, b] = running + den
            nums[b, a] = den - running
    logger.debug(f"Fixed-point matrix along {' '.join(order)}")
    return LlullMatrix(candidates, nums, 2 * den)
