"""
Test intermediate margins, projected margins and the projection P
"""
from fractions import Fraction

import numpy as np
import pytest

from src.closure.indirect_scores import MarginMatrix, comparison_relation, indirect_scores, margins
from src.ordering.admissible_order import all_admissible_orders, order_from_sequence
from src.profile.ballots import CandidateSet, profile_from_rankings
from src.profile.llull_matrix import LlullMatrix, aggregate, validate_gamma
from src.projection.projector import (
    IntermediateMargins,
    default_order,
    fixed_point_order,
    intermediate_margins,
    is_ultrametric,
    max_decomposable,
    project,
    project_with_order,
    projected_margins,
    satisfies_fixed_point_conditions,
)
from src.verify.generators import random_fixed_point, random_gamma_matrix
from tests.conftest import BLACKPOOL_ORDER


def _blackpool_projection(v):
    xi = default_order(v)
    sigma = intermediate_margins(margins(indirect_scores(v)), xi)
    return xi, sigma, projected_margins(sigma)


def test_blackpool_intermediate_margins(blackpool):
    xi, sigma, _ = _blackpool_projection(blackpool)
    assert xi.sequence == BLACKPOOL_ORDER
    assert sigma.sigma == tuple(Fraction(k, 44) for k in (1, 1, 1, 3, 6))
    assert sigma.pairs()[0] == ('122', '4')


def test_blackpool_projected_margins(blackpool):
    _, _, pm = _blackpool_projection(blackpool)
    expected_rows = [(1, 1, 1, 3, 6), (1, 1, 3, 6), (1, 3, 6), (3, 6), (6,)]
    seq = BLACKPOOL_ORDER
    for i, row in enumerate(expected_rows):
        for k, value in enumerate(row):
            y = seq[i + 1 + k]
            assert pm.value(seq[i], y) == Fraction(value, 44)
            assert pm.value(y, seq[i]) == -Fraction(value, 44)
    assert pm.is_monotone()
    assert pm.is_max_decomposable()
    assert pm.is_ultrametric()


def test_projected_scores_follow_margins(blackpool):
    p = project(blackpool)
    assert p['122', '238'] == Fraction(1, 2) + Fraction(3, 44)
    assert p['238', '122'] == Fraction(1, 2) - Fraction(3, 44)
    assert validate_gamma(p)[0]


def test_cyclic_projection_is_half_everywhere(cyclic_profile):
    p = project(aggregate(cyclic_profile))
    for x, y in p.pairs():
        assert p[x, y] == Fraction(1, 2)


def test_unanimous_order_is_a_fixed_point():
    v = aggregate(profile_from_rankings(['A', 'B', 'C'], [(1, 'B > C > A')]))
    assert project(v) == v
    assert fixed_point_order(v).sequence == ('B', 'C', 'A')


def test_single_candidate():
    v = LlullMatrix(CandidateSet(('A',)), np.zeros((1, 1), dtype=object), 1)
    assert project(v) == v


@pytest.mark.parametrize('seed', range(40))
def test_projection_is_idempotent(seed):
    rng = np.random.default_rng(seed)
    p = project(random_gamma_matrix(rng, int(rng.integers(2, 9))))
    assert project(p) == p, f"seed {seed}"


@pytest.mark.parametrize('seed', range(25))
def test_projection_does_not_depend_on_order(seed):
    rng = np.random.default_rng(seed)
    if seed % 2:
        rankings = [(int(rng.integers(1, 3)), expr) for expr in ('A = B > C = D', 'C = D > A = B', 'A > B = C > D')]
        v = aggregate(profile_from_rankings(['A', 'B', 'C', 'D'], rankings))
    else:
        v = random_gamma_matrix(rng, 4, max_denominator=4)
    nu = comparison_relation(indirect_scores(v))
    projections = [project_with_order(v, xi) for xi in all_admissible_orders(nu)]
    assert all(p == projections[0] for p in projections), f"seed {seed}"


@pytest.mark.parametrize('seed', range(25))
def test_fixed_points_are_recognized(seed):
    rng = np.random.default_rng(seed)
    v = random_fixed_point(rng, int(rng.integers(2, 7)))
    assert fixed_point_order(v) is not None, f"seed {seed}"
    assert project(v) == v, f"seed {seed}"


@pytest.mark.parametrize('seed', range(25))
def test_image_satisfies_fixed_point_conditions(seed):
    rng = np.random.default_rng(seed)
    v = random_gamma_matrix(rng, int(rng.integers(2, 7)))
    xi = default_order(v)
    assert satisfies_fixed_point_conditions(project_with_order(v, xi), xi), f"seed {seed}"


def test_non_fixed_point_is_detected(cyclic_profile):
    assert fixed_point_order(aggregate(cyclic_profile)) is None


def test_negative_margin_along_order_rejected(blackpool):
    m = margins(indirect_scores(blackpool))
    backwards = order_from_sequence(blackpool.candidates, list(reversed(BLACKPOOL_ORDER)))
    with pytest.raises(ValueError):
        intermediate_margins(m, backwards)


def test_intermediate_margins_validated():
    xi = order_from_sequence(CandidateSet(('A', 'B')), ['A', 'B'])
    with pytest.raises(ValueError):
        IntermediateMargins(xi, (Fraction(3, 2),))
    with pytest.raises(ValueError):
        IntermediateMargins(xi, ())


def test_max_decomposition_and_ultrametric_helpers():
    good = np.array([[0, 1, 3], [-1, 0, 3], [-3, -3, 0]], dtype=object)
    bad = np.array([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]], dtype=object)
    assert max_decomposable(good)
    assert not max_decomposable(bad)
    names = CandidateSet(('A', 'B', 'C'))
    assert is_ultrametric(MarginMatrix(names, good, 4))
    assert not is_ultrametric(MarginMatrix(names, bad, 4))
