"""
Rating Module
Rank-like rates, the social preorder and baseline ratings
"""
from .rates import (
    RateVector,
    SocialPreorder,
    borda_mean_ranks,
    maximin_scores,
    mean_ranks_from_ballots,
    rank_like_rates,
    rates_from_margins,
    social_preorder,
)

__all__ = [
    'RateVector', 'SocialPreorder', 'borda_mean_ranks', 'maximin_scores', 'mean_ranks_from_ballots',
    'rank_like_rates', 'rates_from_margins', 'social_preorder',
]
