"""
Test Copeland ranks and admissible orders
"""
from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest

from src.closure.indirect_scores import comparison_relation, indirect_scores
from src.closure.relations import Relation
from src.ordering.admissible_order import (
    AdmissibleOrder,
    admissible_order,
    all_admissible_orders,
    copeland_ranks,
    order_from_sequence,
    tie_splitting_ranks,
)
from src.profile.ballots import CandidateSet
from src.verify.generators import random_gamma_matrix
from tests.conftest import BLACKPOOL_ORDER

ABCD = CandidateSet(('A', 'B', 'C', 'D'))


def test_blackpool_ranks_and_order(blackpool):
    nu = comparison_relation(indirect_scores(blackpool))
    ranks = tie_splitting_ranks(nu)
    assert ranks.as_tuple() == (4, 2, 5, 1, 6, 3)
    xi = admissible_order(nu, ranks)
    assert xi.sequence == BLACKPOOL_ORDER
    assert xi.is_admissible_for(nu)


def test_copeland_ranks_of_total_order():
    ranks = copeland_ranks(Relation.from_sequence(ABCD, ['C', 'A', 'D', 'B']))
    assert ranks.as_tuple() == (2, 4, 1, 3)


def test_empty_relation_ties_everyone_at_middle_rank():
    nu = Relation(ABCD, frozenset())
    ranks = tie_splitting_ranks(nu)
    assert all(r == Fraction(5, 2) for r in ranks.as_tuple())
    assert admissible_order(nu, ranks).sequence == ('A', 'B', 'C', 'D')


def test_declared_order_breaks_rank_ties():
    nu = Relation(ABCD, frozenset({('D', 'C')}))
    xi = admissible_order(nu, tie_splitting_ranks(nu))
    assert xi.sequence == ('D', 'A', 'B', 'C')


def test_admissible_order_rejects_non_partial_order():
    cycle = Relation(CandidateSet(('A', 'B', 'C')), frozenset({('A', 'B'), ('B', 'C'), ('C', 'A')}))
    with pytest.raises(ValueError):
        admissible_order(cycle, tie_splitting_ranks(cycle))


@pytest.mark.parametrize('seed', range(30))
def test_ranks_extend_comparison_relation(seed):
    rng = np.random.default_rng(seed)
    nu = comparison_relation(indirect_scores(random_gamma_matrix(rng, int(rng.integers(2, 8)))))
    ranks = tie_splitting_ranks(nu)
    for x, y in nu.pairs:
        assert ranks[x] < ranks[y], f"seed {seed}"


def test_all_admissible_orders_enumerates_linear_extensions():
    nu = Relation(ABCD, frozenset({('A', 'B'), ('C', 'D')}))
    orders = all_admissible_orders(nu)
    assert len(orders) == 6
    assert orders[0].sequence == ('A', 'B', 'C', 'D')
    assert all(o.is_admissible_for(nu) for o in orders)
    assert len({o.sequence for o in orders}) == 6


def test_all_admissible_orders_of_empty_relation():
    assert len(all_admissible_orders(Relation(ABCD, frozenset()))) == 24


def test_enumeration_bound():
    with pytest.raises(ValueError):
        all_admissible_orders(Relation(ABCD, frozenset()), bound=3)


def test_order_validation_and_relation():
    with pytest.raises(ValueError):
        AdmissibleOrder(ABCD, ('A', 'B', 'C'))
    with pytest.raises(ValueError):
        AdmissibleOrder(ABCD, ('A', 'B', 'C', 'C'))
    xi = order_from_sequence(ABCD, ['B', 'A', 'D', 'C'])
    assert xi.position('D') == 2
    assert ('B', 'C') in xi.as_relation()
    assert xi.as_relation().is_total_order()


@pytest.mark.parametrize('seed', range(20))
def test_all_admissible_orders_match_permutation_filter(seed):
    rng = np.random.default_rng(seed)
    v = random_gamma_matrix(rng, int(rng.integers(2, 6)), max_denominator=4)
    nu = comparison_relation(indirect_scores(v))
    expected = {
        seq for seq in permutations(v.candidates.names)
        if all(seq.index(x) < seq.index(y) for x, y in nu.pairs)
    }
    assert {o.sequence for o in all_admissible_orders(nu)} == expected, f"seed {seed}"
