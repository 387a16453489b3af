"""
Profile Module
Ballots, candidate sets and the exact-rational Llull matrix
"""
from .ballots import (
    Ballot,
    CandidateSet,
    Profile,
    UNLISTED_ERROR,
    UNLISTED_TIED_LAST,
    contract_profile,
    format_profile,
    is_autonomous_in_ballot,
    merge_profiles,
    parse_profile,
    permute_profile,
    profile_from_rankings,
    restrict_profile,
    scale_profile,
)
from .llull_matrix import (
    GammaViolation,
    LlullMatrix,
    ScoreMatrix,
    aggregate,
    ballot_to_scores,
    validate_gamma,
)

__all__ = [
    'Ballot', 'CandidateSet', 'Profile', 'UNLISTED_ERROR', 'UNLISTED_TIED_LAST',
    'contract_profile', 'format_profile', 'is_autonomous_in_ballot', 'merge_profiles',
    'parse_profile', 'permute_profile', 'profile_from_rankings', 'restrict_profile',
    'scale_profile', 'GammaViolation', 'LlullMatrix', 'ScoreMatrix', 'aggregate',
    'ballot_to_scores', 'validate_gamma',
]
