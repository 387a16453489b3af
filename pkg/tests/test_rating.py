"""
Test rank-like rates, the social preorder and the Borda and maximin baselines
"""
import logging
from fractions import Fraction

import numpy as np
import pytest

from src.closure.indirect_scores import comparison_relation, indirect_scores, margins
from src.closure.relations import codual
from src.profile.ballots import CandidateSet, profile_from_rankings
from src.profile.llull_matrix import aggregate
from src.projection.projector import default_order, intermediate_margins, project, projected_margins
from src.rating.rates import (
    RateVector,
    borda_mean_ranks,
    maximin_scores,
    mean_ranks_from_ballots,
    rank_like_rates,
    rates_from_margins,
    social_preorder,
)
from src.verify.generators import random_gamma_matrix, random_profile
from tests.conftest import BLACKPOOL_NAMES, BLACKPOOL_ORDER, BLACKPOOL_RATES


def test_blackpool_rates(blackpool):
    rates = rank_like_rates(project(blackpool))
    for name, expected in BLACKPOOL_RATES.items():
        assert rates[name] == expected
    assert rates.total() == 21
    assert rates.validate() == (True, 'ok')


def test_blackpool_social_order(blackpool):
    preorder = social_preorder(rank_like_rates(project(blackpool)))
    assert preorder.tie_classes == tuple((x,) for x in BLACKPOOL_ORDER)
    assert not preorder.has_ties()
    assert preorder.relation.is_total_preorder()
    assert preorder.strict.is_total_order()


def test_blackpool_baselines(blackpool):
    borda = borda_mean_ranks(blackpool)
    order = sorted(BLACKPOOL_NAMES, key=lambda x: borda[x])
    assert tuple(order) == ('122', '3', '4', '264', '31', '238')
    assert maximin_scores(blackpool)['122'] == Fraction(21, 44)


def test_margin_form_matches_score_form(blackpool):
    s = indirect_scores(blackpool)
    xi = default_order(blackpool)
    pm = projected_margins(intermediate_margins(margins(s), xi))
    assert rates_from_margins(pm.margins) == rank_like_rates(pm.scores())


def test_cyclic_rates_all_two(cyclic_profile):
    v = aggregate(cyclic_profile)
    rates = rank_like_rates(project(v))
    assert rates.as_tuple() == (2, 2, 2)
    assert borda_mean_ranks(v).as_tuple() == (2, 2, 2)
    assert set(maximin_scores(v).values()) == {Fraction(1, 3)}
    preorder = social_preorder(rates)
    assert preorder.tie_classes == (('A', 'B', 'C'),)
    assert preorder.has_ties()
    assert len(preorder.strict) == 0


def test_unanimous_winner_and_loser():
    v = aggregate(profile_from_rankings(['A', 'B', 'C'], [(1, 'B > A > C'), (2, 'B > C > A')]))
    rates = rank_like_rates(project(v))
    assert rates['B'] == 1
    assert rates['A'] > 1 and rates['C'] < 3


def test_two_candidate_single_ballot():
    rates = rank_like_rates(project(aggregate(profile_from_rankings(['A', 'B'], [(1, 'A > B')]))))
    assert rates.as_tuple() == (1, 2)


def test_rate_validation_reports_problems():
    names = CandidateSet(('A', 'B'))
    assert not RateVector(names, {'A': Fraction(0), 'B': Fraction(3)}).validate()[0]
    ok, reason = RateVector(names, {'A': Fraction(1), 'B': Fraction(1)}).validate()
    assert not ok
    assert 'sum' in reason


@pytest.mark.parametrize('seed', range(40))
def test_rates_in_range_with_exact_mean(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 9))
    rates = rank_like_rates(project(random_gamma_matrix(rng, n)))
    ok, reason = rates.validate()
    assert ok, f"seed {seed}: {reason}"
    assert rates.total() == Fraction(n * (n + 1), 2)


@pytest.mark.parametrize('seed', range(30))
def test_rates_agree_with_comparison_relation(seed):
    rng = np.random.default_rng(seed)
    v = aggregate(random_profile(rng, int(rng.integers(2, 7))))
    nu = comparison_relation(indirect_scores(v))
    rates = rank_like_rates(project(v))
    strict = codual(nu).is_transitive()
    for x, y in v.pairs():
        if rates[x] < rates[y]:
            assert (x, y) in nu, f"seed {seed}"
    for x, y in nu.pairs:
        assert rates[x] <= rates[y], f"seed {seed}"
        if strict:
            assert rates[x] < rates[y], f"seed {seed}"


def test_mean_ranks_from_ballots():
    profile = profile_from_rankings(['A', 'B', 'C'], [(1, 'A > B = C'), (1, 'C > A > B')])
    mean = mean_ranks_from_ballots(profile)
    assert mean['A'] == Fraction(3, 2)
    assert mean['B'] == Fraction(11, 4)
    assert mean['C'] == Fraction(7, 4)
    assert borda_mean_ranks(aggregate(profile)) == mean


def test_single_candidate_maximin():
    v = aggregate(profile_from_rankings(['A'], [(1, 'A')]))
    assert maximin_scores(v) == {'A': Fraction(1)}
    assert rank_like_rates(project(v)).as_tuple() == (1,)


def test_ties_are_logged_at_debug(cyclic_profile, caplog):
    rates = rank_like_rates(project(aggregate(cyclic_profile)))
    with caplog.at_level(logging.DEBUG, logger='CLCTally'):
        social_preorder(rates)
    tie_records = [r for r in caplog.records if 'ties' in r.getMessage()]
    assert tie_records
    assert all(r.levelno == logging.DEBUG for r in tie_records)
