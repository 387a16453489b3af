"""
Test the max-min closure, margins and relation utilities
"""
from fractions import Fraction

import numpy as np
import pytest

from src.closure.indirect_scores import (
    comparison_relation,
    indirect_scores,
    margins,
    satisfies_min_inequality,
)
from src.closure.relations import (
    Relation,
    codual,
    contract_relation,
    is_autonomous,
    is_interval,
    strict_relation,
    transitive_closure,
    weak_relation,
)
from src.profile.ballots import CandidateSet
from src.profile.llull_matrix import aggregate
from src.verify.generators import planted_dominance, random_gamma_matrix
from src.verify.oracles import maxmin_power, oracle_indirect_scores


def test_blackpool_indirect_scores(blackpool):
    s = indirect_scores(blackpool)
    assert s['31', '238'] == Fraction(25, 44)
    assert s['238', '31'] == Fraction(19, 44)
    assert s['238', '4'] == Fraction(19, 44)
    assert margins(s)['4', '238'] == Fraction(11, 44)


def test_indirect_scores_dominate_direct(blackpool):
    s = indirect_scores(blackpool)
    for x, y in blackpool.pairs():
        assert s[x, y] >= blackpool[x, y]


def test_cyclic_closure_is_uniform(cyclic_profile):
    s = indirect_scores(aggregate(cyclic_profile))
    for x, y in s.pairs():
        assert s[x, y] == Fraction(2, 3)
    assert len(comparison_relation(s)) == 0


def test_closure_is_idempotent(blackpool):
    s = indirect_scores(blackpool)
    assert indirect_scores(s) == s
    assert satisfies_min_inequality(s)


def test_raw_scores_may_fail_min_inequality(cyclic_profile):
    v = aggregate(cyclic_profile)
    assert not satisfies_min_inequality(v)
    with pytest.raises(ValueError):
        comparison_relation(v)


@pytest.mark.parametrize('seed', range(40))
def test_closure_matches_oracles(seed):
    rng = np.random.default_rng(seed)
    v = random_gamma_matrix(rng, int(rng.integers(2, 7)))
    s = indirect_scores(v)
    assert oracle_indirect_scores(v) == s, f"seed {seed}"
    assert maxmin_power(v) == s, f"seed {seed}"


def test_oracle_bound_enforced():
    v = random_gamma_matrix(np.random.default_rng(1), 4)
    with pytest.raises(ValueError):
        oracle_indirect_scores(v, bound=3)


@pytest.mark.parametrize('seed', range(40))
def test_comparison_relation_is_partial_order(seed):
    rng = np.random.default_rng(seed)
    s = indirect_scores(random_gamma_matrix(rng, int(rng.integers(2, 8))))
    assert comparison_relation(s).is_partial_order(), f"seed {seed}"


def test_margins_are_antisymmetric(blackpool):
    m = margins(indirect_scores(blackpool))
    assert m.is_antisymmetric()
    assert m['122', '4'] == -m['4', '122']


def test_large_matrix_closure_matches_power():
    v = random_gamma_matrix(np.random.default_rng(7), 12, max_denominator=1000)
    assert indirect_scores(v) == maxmin_power(v)


# -- relations -------------------------------------------------------------

ABC = CandidateSet(('A', 'B', 'C'))


def test_codual_of_empty_relation_is_complete():
    full = codual(Relation(ABC, frozenset()))
    assert len(full) == 6


def test_codual_of_total_order_is_itself():
    order = Relation.from_sequence(ABC, ['B', 'A', 'C'])
    assert codual(order) == order
    assert order.is_total_order()


def test_transitive_closure():
    chain = Relation(ABC, frozenset({('A', 'B'), ('B', 'C')}))
    assert ('A', 'C') in transitive_closure(chain)
    assert not chain.is_transitive()
    assert transitive_closure(chain).is_partial_order()


def test_strict_and_weak_relations(cyclic_profile):
    v = aggregate(cyclic_profile)
    assert strict_relation(v).pairs == {('A', 'B'), ('B', 'C'), ('C', 'A')}
    assert weak_relation(v) == strict_relation(v)
    s = indirect_scores(v)
    assert len(weak_relation(s)) == 6


def test_autonomy_interval_and_contraction():
    order = Relation.from_sequence(ABC, ['A', 'B', 'C'])
    assert is_autonomous(order, {'B', 'C'})
    assert is_interval(order, {'B', 'C'})
    assert not is_autonomous(order, {'A', 'C'})
    assert not is_interval(order, {'A', 'C'})
    contracted = contract_relation(order, {'B', 'C'})
    assert contracted.candidates.names == ('A', 'B')
    assert contracted.pairs == {('A', 'B')}
    with pytest.raises(ValueError):
        contract_relation(order, {'A', 'C'})


def test_relation_rejects_unknown_or_diagonal_pairs():
    with pytest.raises(ValueError):
        Relation(ABC, frozenset({('A', 'A')}))
    with pytest.raises(ValueError):
        Relation(ABC, frozenset({('A', 'Z')}))


def test_codual_is_an_involution():
    rng = np.random.default_rng(0)
    names = CandidateSet(tuple('ABCDEF'))
    for _ in range(100):
        adjacency = rng.random((6, 6)) < 0.4
        r = Relation.from_matrix(names, adjacency)
        assert codual(codual(r)) == r


@pytest.mark.parametrize('seed', range(15))
def test_planted_dominance_is_in_comparison_relation(seed):
    planted = planted_dominance(np.random.default_rng(seed), 5)
    nu = comparison_relation(indirect_scores(aggregate(planted.profile)))
    assert all((x, y) in nu for x in planted.X for y in planted.Y), f"seed {seed}"
