"""
Ballot Profiles
Candidate sets, ranked-with-ties ballots and the ballot file grammar
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..utils.errors import BallotParseError
from ..utils.logger import logger
from ..utils.rationals import format_exact, parse_rational

UNLISTED_ERROR = 'error'
UNLISTED_TIED_LAST = 'tied-last'

_RESERVED = set('>=:#')


@dataclass(frozen=True)
class CandidateSet:
    """Ordered set of distinct candidate names; declared order breaks ties everywhere"""
    names: Tuple[str, ...]
    _index: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        names = tuple(self.names)
        if not names:
            raise ValueError("a candidate set needs at least one name")
        for name in names:
            if not isinstance(name, str) or not name or name != name.strip():
                raise ValueError(f"invalid candidate name: {name!r}")
            if _RESERVED & set(name) or any(ch.isspace() for ch in name):
                raise ValueError(f"candidate name may not contain whitespace or '>=:#': {name!r}")
        if len(set(names)) != len(names):
            raise ValueError("candidate names must be unique")
        object.__setattr__(self, 'names', names)
        object.__setattr__(self, '_index', {name: i for i, name in enumerate(names)})

    @property
    def N(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __contains__(self, name) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown candidate: '{name}'") from None

    def indices(self, names: Iterable[str]) -> List[int]:
        """Positions of the given names, in declared order"""
        return sorted(self.index(n) for n in names)

    def subset(self, names: Iterable[str]) -> 'CandidateSet':
        """Sub-candidate set keeping declared order"""
        return CandidateSet(tuple(self.names[i] for i in self.indices(set(names))))

    def ordered(self, names: Iterable[str]) -> Tuple[str, ...]:
        """Sort names by declared position"""
        return tuple(sorted(names, key=self.index))


@dataclass(frozen=True)
class Ballot:
    """
    One ranked-with-ties vote

    tiers: earlier tier is more preferred; members of a tier are tied
    weight: non-negative exact rational
    """
    tiers: Tuple[Tuple[str, ...], ...]
    weight: Fraction = Fraction(1)

    def __post_init__(self):
        tiers = tuple(tuple(t) for t in self.tiers)
        if any(not t for t in tiers):
            raise ValueError("ballot tiers must be non-empty")
        seen = [n for t in tiers for n in t]
        if len(set(seen)) != len(seen):
            raise ValueError("candidate listed twice in one ballot")
        weight = parse_rational(self.weight)
        if weight < 0:
            raise ValueError("ballot weight must be non-negative")
        object.__setattr__(self, 'tiers', tiers)
        object.__setattr__(self, 'weight', weight)

    @property
    def listed(self) -> FrozenSet[str]:
        return frozenset(n for t in self.tiers for n in t)

    def tier_of(self) -> Dict[str, int]:
        """Map candidate to tier position"""
        return {name: k for k, tier in enumerate(self.tiers) for name in tier}

    def is_complete(self, candidates: CandidateSet) -> bool:
        return self.listed == frozenset(candidates.names)

    def render(self, candidates: Optional[CandidateSet] = None) -> str:
        """Expression part of the ballot grammar, e.g. 'A > B = C'"""
        tiers = self.tiers if candidates is None else tuple(candidates.ordered(t) for t in self.tiers)
        return ' > '.join(' = '.join(t) for t in tiers)


@dataclass(frozen=True)
class Profile:
    """Weighted multiset of complete ballots over a candidate set"""
    candidates: CandidateSet
    ballots: Tuple[Ballot, ...]

    def __post_init__(self):
        ballots = tuple(self.ballots)
        for b in ballots:
            unknown = b.listed - frozenset(self.candidates.names)
            if unknown:
                raise ValueError(f"unknown candidate(s) in ballot: {', '.join(sorted(unknown))}")
            if not b.is_complete(self.candidates):
                raise ValueError(f"incomplete ballot: {b.render()}")
        object.__setattr__(self, 'ballots', ballots)

    @property
    def total_weight(self) -> Fraction:
        return sum((b.weight for b in self.ballots), Fraction(0))

    def has_integer_weights(self) -> bool:
        return all(b.weight.denominator == 1 for b in self.ballots)


def parse_profile(text: str, unlisted_policy: str = UNLISTED_ERROR) -> Profile:
    """
    Parse ballot file contents

    Grammar: optional '#' comment lines, then 'candidates: NAME NAME ...',
    then one 'WEIGHT: A > B = C > D' line per ballot.

    Args:
        text: File contents
        unlisted_policy: 'error' aborts on incomplete ballots, 'tied-last'
            appends the unlisted candidates as one final tier

    Returns:
        Profile

    Raises:
        BallotParseError: With the offending line number
    """
    if unlisted_policy not in (UNLISTED_ERROR, UNLISTED_TIED_LAST):
        raise ValueError(f"Unsupported unlisted policy: '{unlisted_policy}'")

    candidates: Optional[CandidateSet] = None
    ballots: List[Ballot] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue

        if candidates is None:
            head, sep, rest = line.partition(':')
            if not sep or head.strip().lower() != 'candidates':
                raise BallotParseError("expected 'candidates: NAME NAME ...'", line=lineno)
            try:
                candidates = CandidateSet(tuple(rest.split()))
            except ValueError as e:
                raise BallotParseError(str(e), line=lineno) from None
            continue

        ballots.append(_parse_ballot_line(line, lineno, candidates, unlisted_policy))

    if candidates is None:
        raise BallotParseError("missing 'candidates:' line")

    profile = Profile(candidates, tuple(ballots))
    logger.debug(f"Parsed {len(ballots)} ballots over {candidates.N} candidates "
                 f"(total weight {profile.total_weight})")
    return profile


def _parse_ballot_line(line: str, lineno: int, candidates: CandidateSet,
                       unlisted_policy: str) -> Ballot:
    head, sep, expr = line.partition(':')
    if not sep:
        raise BallotParseError("expected 'WEIGHT: expression'", line=lineno)
    try:
        weight = parse_rational(head)
    except ValueError as e:
        raise BallotParseError(str(e), line=lineno) from None
    if weight < 0:
        raise BallotParseError(f"negative weight {head.strip()}", line=lineno)

    tiers: List[Tuple[str, ...]] = []
    seen = set()
    for chunk in expr.split('>'):
        tier = tuple(name.strip() for name in chunk.split('='))
        if any(not name for name in tier):
            raise BallotParseError("empty candidate name", line=lineno)
        for name in tier:
            if name not in candidates:
                raise BallotParseError(f"unknown candidate '{name}'", line=lineno)
            if name in seen:
                raise BallotParseError(f"duplicate candidate '{name}'", line=lineno)
            seen.add(name)
        tiers.append(tier)

    missing = [n for n in candidates if n not in seen]
    if missing:
        if unlisted_policy == UNLISTED_ERROR:
            raise BallotParseError(f"incomplete ballot, missing: {' '.join(missing)}", line=lineno)
        tiers.append(tuple(missing))

    return Ballot(tuple(tiers), weight)


def format_profile(profile: Profile) -> str:
    """Render a profile in the ballot grammar"""
    lines = [f"candidates: {' '.join(profile.candidates)}"]
    for b in profile.ballots:
        weight = str(b.weight.numerator) if b.weight.denominator == 1 else format_exact(b.weight)
        lines.append(f"{weight}: {b.render(profile.candidates)}")
    return "\n".join(lines) + "\n"


def restrict_profile(profile: Profile, subset: Iterable[str]) -> Profile:
    """Every ballot restricted to the subset; empty tiers dropped, weights kept"""
    sub = profile.candidates.subset(subset)
    members = set(sub.names)
    ballots = []
    for b in profile.ballots:
        tiers = tuple(t for t in (tuple(n for n in tier if n in members) for tier in b.tiers) if t)
        ballots.append(Ballot(tiers, b.weight))
    return Profile(sub, tuple(ballots))


def is_autonomous_in_ballot(ballot: Ballot, members: Iterable[str]) -> bool:
    """Every outsider is uniformly above, tied with, or below all of the members"""
    members = set(members)
    tier = ballot.tier_of()
    positions = {tier[c] for c in members}
    lo, hi = min(positions), max(positions)
    for name, k in tier.items():
        if name in members:
            continue
        if lo <= k <= hi and not (lo == hi == k):
            return False
    return True


def contract_profile(profile: Profile, members: Iterable[str],
                     representative: Optional[str] = None) -> Profile:
    """
    Replace an autonomous set by one representative in every ballot

    The representative defaults to the first member in declared order.

    Raises:
        ValueError: If the set is not autonomous in some ballot
    """
    members = set(members)
    if not members or not members <= set(profile.candidates.names):
        raise ValueError("clone set must be a non-empty subset of the candidates")
    if representative is None:
        representative = profile.candidates.ordered(members)[0]
    if representative not in members:
        raise ValueError(f"representative '{representative}' is not in the clone set")

    kept = [n for n in profile.candidates if n not in members or n == representative]
    contracted = CandidateSet(tuple(kept))

    ballots = []
    for k, b in enumerate(profile.ballots):
        if not is_autonomous_in_ballot(b, members):
            raise ValueError(f"clone set is not autonomous in ballot {k + 1}: {b.render()}")
        tiers: List[Tuple[str, ...]] = []
        placed = False
        for tier in b.tiers:
            outsiders = tuple(n for n in tier if n not in members)
            touches = len(outsiders) != len(tier)
            if touches and not placed:
                outsiders = contracted.ordered(outsiders + (representative,))
                placed = True
            if outsiders:
                tiers.append(outsiders)
        ballots.append(Ballot(tuple(tiers), b.weight))
    return Profile(contracted, tuple(ballots))


def permute_profile(profile: Profile, mapping: Mapping[str, str]) -> Profile:
    """Relabel candidates; the new candidate set follows the relabeled declared order"""
    if set(mapping) != set(profile.candidates.names):
        raise ValueError("relabeling must cover every candidate")
    relabeled = CandidateSet(tuple(mapping[n] for n in profile.candidates))
    ballots = tuple(
        Ballot(tuple(tuple(mapping[n] for n in tier) for tier in b.tiers), b.weight)
        for b in profile.ballots
    )
    return Profile(relabeled, ballots)


def scale_profile(profile: Profile, k: int) -> Profile:
    """Every ballot repeated k times"""
    if k < 1:
        raise ValueError("scale factor must be >= 1")
    return Profile(profile.candidates, tuple(b for b in profile.ballots for _ in range(k)))


def merge_profiles(first: Profile, second: Profile) -> Profile:
    """Disjoint union of two profiles over the same candidates"""
    if first.candidates != second.candidates:
        raise ValueError("profiles must share the candidate set")
    return Profile(first.candidates, first.ballots + second.ballots)


def profile_from_rankings(candidates: Sequence[str],
                          rankings: Sequence[Tuple[int, str]]) -> Profile:
    """Build a profile from (weight, 'A > B = C') pairs"""
    text = "candidates: " + " ".join(candidates) + "\n"
    text += "\n".join(f"{w}: {expr}" for w, expr in rankings)
    return parse_profile(text)
