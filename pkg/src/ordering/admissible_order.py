"""
Admissible Orders
Tie-splitting Copeland ranks and total orders extending the indirect comparison relation
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from config.config import Config
from ..closure.relations import Relation, codual
from ..profile.ballots import CandidateSet
from ..utils.logger import logger


@dataclass(frozen=True)
class CopelandRanks:
    """Rank of each candidate in a relation; lower is better, half-integers possible"""
    candidates: CandidateSet
    ranks: Dict[str, Fraction]

    def __getitem__(self, name: str) -> Fraction:
        return self.ranks[name]

    def as_tuple(self) -> Tuple[Fraction, ...]:
        return tuple(self.ranks[n] for n in self.candidates)


@dataclass(frozen=True)
class AdmissibleOrder:
    """Total order of the candidates; position 0 is the most preferred"""
    candidates: CandidateSet
    sequence: Tuple[str, ...]

    def __post_init__(self):
        seq = tuple(self.sequence)
        if sorted(seq) != sorted(self.candidates.names) or len(set(seq)) != len(seq):
            raise ValueError("order must be a permutation of the candidates")
        object.__setattr__(self, 'sequence', seq)

    def __iter__(self):
        return iter(self.sequence)

    def __len__(self) -> int:
        return len(self.sequence)

    def position(self, name: str) -> int:
        return self.sequence.index(name)

    def as_relation(self) -> Relation:
        return Relation.from_sequence(self.candidates, self.sequence)

    def is_admissible_for(self, nu: Relation) -> bool:
        """nu ⊆ ξ; for a total order ξ this is equivalent to ξ ⊆ codual(nu)"""
        pos = {name: i for i, name in enumerate(self.sequence)}
        return all(pos[x] < pos[y] for x, y in nu.pairs)


def copeland_ranks(relation: Relation) -> CopelandRanks:
    """
    r_x = N - |{y : xy in rel, yx not in rel}| - 1/2 |{y : xy in rel, yx in rel}|

    Returns:
        CopelandRanks in the relation's candidate order
    """
    adj = relation.adjacency()
    n = relation.candidates.N
    strict = (adj & ~adj.T).sum(axis=1)
    mutual = (adj & adj.T).sum(axis=1)
    ranks = {
        name: Fraction(n) - int(strict[i]) - Fraction(int(mutual[i]), 2)
        for i, name in enumerate(relation.candidates)
    }
    return CopelandRanks(relation.candidates, ranks)


def tie_splitting_ranks(nu: Relation) -> CopelandRanks:
    """
    Ranks in the codual of nu: N - |{M*_xy > 0}| - 1/2 |{M*_xy = 0}|

    Sorting by these ranks extends nu whenever nu is a partial order.
    """
    return copeland_ranks(codual(nu))


def admissible_order(nu: Relation, ranks: CopelandRanks) -> AdmissibleOrder:
    """
    Sort candidates by (rank, declared index) and check the result extends nu

    Raises:
        ValueError: If nu is not a partial order or the ranks do not extend it
    """
    if not nu.is_partial_order():
        raise ValueError("comparison relation is not a partial order")
    candidates = nu.candidates
    sequence = tuple(sorted(candidates, key=lambda x: (ranks[x], candidates.index(x))))
    order = AdmissibleOrder(candidates, sequence)
    if not order.is_admissible_for(nu):
        raise ValueError("ranks do not produce an extension of the comparison relation")
    logger.debug(f"Admissible order: {' '.join(sequence)}")
    return order


def all_admissible_orders(nu: Relation, bound: Optional[int] = None) -> List[AdmissibleOrder]:
    """
    Every total order containing nu, by backtracking over ready candidates

    Candidates are tried in declared order, so the output is deterministic.

    Raises:
        ValueError: If nu is not a partial order or N exceeds the bound
    """
    bound = Config.ENUMERATION_BOUND if bound is None else bound
    candidates = nu.candidates
    if candidates.N > bound:
        raise ValueError(f"enumeration bound exceeded: N={candidates.N} > {bound}")
    if not nu.is_partial_order():
        raise ValueError("comparison relation is not a partial order")

    predecessors: Dict[str, set] = {name: set() for name in candidates}
    for x, y in nu.pairs:
        predecessors[y].add(x)

    results: List[AdmissibleOrder] = []
    prefix: List[str] = []
    placed: set = set()

    def extend():
        if len(prefix) == candidates.N:
            results.append(AdmissibleOrder(candidates, tuple(prefix)))
            return
        for name in candidates:
            if name in placed or not predecessors[name] <= placed:
                continue
            prefix.append(name)
            placed.add(name)
            extend()
            placed.discard(name)
            prefix.pop()

    extend()
    logger.debug(f"Enumerated {len(results)} admissible orders over {candidates.N} candidates")
    return results


def order_from_sequence(candidates: CandidateSet, sequence: Sequence[str]) -> AdmissibleOrder:
    return AdmissibleOrder(candidates, tuple(sequence))
