"""
Binary Relations
Explicit pair sets over a candidate set: codual, transitive closure, autonomy, contraction
"""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

import numpy as np

from ..profile.ballots import CandidateSet
from ..profile.llull_matrix import ScoreMatrix

Pair = Tuple[str, str]


@dataclass(frozen=True)
class Relation:
    """Set of ordered pairs of distinct candidates"""
    candidates: CandidateSet
    pairs: FrozenSet[Pair]

    def __post_init__(self):
        pairs = frozenset((str(x), str(y)) for x, y in self.pairs)
        for x, y in pairs:
            if x == y:
                raise ValueError(f"relation may not contain the diagonal pair ({x}, {x})")
            if x not in self.candidates or y not in self.candidates:
                raise ValueError(f"pair ({x}, {y}) uses an unknown candidate")
        object.__setattr__(self, 'pairs', pairs)

    @classmethod
    def from_matrix(cls, candidates: CandidateSet, adjacency: np.ndarray) -> 'Relation':
        """Relation from a boolean adjacency matrix (diagonal ignored)"""
        names = candidates.names
        rows, cols = np.nonzero(adjacency)
        return cls(candidates, frozenset((names[i], names[j]) for i, j in zip(rows, cols) if i != j))

    @classmethod
    def from_sequence(cls, candidates: CandidateSet, sequence: Iterable[str]) -> 'Relation':
        """Total order placing earlier elements first"""
        seq = list(sequence)
        return cls(candidates, frozenset(
            (seq[i], seq[j]) for i in range(len(seq)) for j in range(i + 1, len(seq))))

    def adjacency(self) -> np.ndarray:
        n = self.candidates.N
        adj = np.zeros((n, n), dtype=bool)
        for x, y in self.pairs:
            adj[self.candidates.index(x), self.candidates.index(y)] = True
        return adj

    def __contains__(self, pair) -> bool:
        return tuple(pair) in self.pairs

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.sorted_pairs())

    def __len__(self) -> int:
        return len(self.pairs)

    def sorted_pairs(self) -> List[Pair]:
        idx = self.candidates.index
        return sorted(self.pairs, key=lambda p: (idx(p[0]), idx(p[1])))

    def is_asymmetric(self) -> bool:
        return all((y, x) not in self.pairs for x, y in self.pairs)

    def is_transitive(self) -> bool:
        adj = self.adjacency()
        two_step = (adj.astype(np.int64) @ adj.astype(np.int64)) > 0
        np.fill_diagonal(two_step, False)
        return bool(not (two_step & ~adj).any())

    def is_total(self) -> bool:
        adj = self.adjacency()
        either = adj | adj.T
        np.fill_diagonal(either, True)
        return bool(either.all())

    def is_partial_order(self) -> bool:
        return self.is_asymmetric() and self.is_transitive()

    def is_total_order(self) -> bool:
        return self.is_partial_order() and self.is_total()

    def is_total_preorder(self) -> bool:
        return self.is_total() and self.is_transitive()

    def restricted(self, subset: Iterable[str]) -> 'Relation':
        sub = self.candidates.subset(subset)
        return Relation(sub, frozenset((x, y) for x, y in self.pairs if x in sub and y in sub))


def codual(relation: Relation) -> Relation:
    """{xy : yx not in relation}"""
    adj = relation.adjacency()
    return Relation.from_matrix(relation.candidates, ~adj.T)


def transitive_closure(relation: Relation) -> Relation:
    """Smallest transitive superset, by boolean Warshall reachability"""
    reach = relation.adjacency()
    for k in range(relation.candidates.N):
        reach = reach | (reach[:, k:k + 1] & reach[k:k + 1, :])
    return Relation.from_matrix(relation.candidates, reach)


def strict_relation(matrix: ScoreMatrix) -> Relation:
    """{xy : v_xy > v_yx}"""
    nums = matrix.numerators
    return Relation.from_matrix(matrix.candidates, (nums > nums.T).astype(bool))


def weak_relation(matrix: ScoreMatrix) -> Relation:
    """{xy : v_xy >= v_yx}"""
    nums = matrix.numerators
    return Relation.from_matrix(matrix.candidates, (nums >= nums.T).astype(bool))


def is_autonomous(relation: Relation, members: Iterable[str]) -> bool:
    """Each outsider relates identically to every member, in both directions"""
    members = set(members)
    outsiders = [z for z in relation.candidates if z not in members]
    for z in outsiders:
        if len({(z, c) in relation.pairs for c in members}) > 1:
            return False
        if len({(c, z) in relation.pairs for c in members}) > 1:
            return False
    return True


def is_interval(relation: Relation, members: Iterable[str]) -> bool:
    """No outsider lies strictly between two members of a total order"""
    members = set(members)
    for z in relation.candidates:
        if z in members:
            continue
        above = any((c, z) in relation.pairs for c in members)
        below = any((z, c) in relation.pairs for c in members)
        if above and below:
            return False
    return True


def contract_relation(relation: Relation, members: Iterable[str],
                      representative: Optional[str] = None) -> Relation:
    """
    Replace an autonomous set by a single representative

    The representative defaults to the first member in declared order.

    Raises:
        ValueError: If the set is not autonomous for the relation
    """
    members = set(members)
    if representative is None:
        representative = relation.candidates.ordered(members)[0]
    if representative not in members:
        raise ValueError(f"representative '{representative}' is not in the clone set")
    if not is_autonomous(relation, members):
        raise ValueError("set is not autonomous for the relation")

    kept = [n for n in relation.candidates if n not in members or n == representative]
    contracted = CandidateSet(tuple(kept))

    def image(x: str) -> str:
        return representative if x in members else x

    pairs = frozenset((image(x), image(y)) for x, y in relation.pairs if image(x) != image(y))
    return Relation(contracted, pairs)
