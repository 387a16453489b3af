"""
Verification Module
Oracles, seeded generators, executable properties and the harness that runs them
"""
from .generators import (
    Lift,
    PlantedProfile,
    candidate_names,
    lift_between,
    planted_clones,
    planted_dominance,
    planted_majority,
    raise_candidate,
    random_fixed_point,
    random_gamma_matrix,
    random_lift,
    random_profile,
    random_total_order_profile,
)
from .harness import PropertyResult, VerificationHarness
from .oracles import maxmin_power, maxmin_product, oracle_indirect_scores
from .properties import (
    DecompositionReport,
    SearchResult,
    check_clones,
    check_closure_laws,
    check_condorcet_smith,
    check_decomposition,
    check_fixed_point,
    check_idempotence,
    check_image,
    check_mean_rank_agreement,
    check_monotonicity,
    check_oracles,
    check_projected_structure,
    check_rates_bridge,
    check_xi_independence,
    continuity_probe,
    continuity_sweep,
    maximin_condorcet_smith_search,
    maximin_respects_majority,
    perturb,
    rates_of,
    strict_monotonicity_search,
    violates_strict_monotonicity,
)

__all__ = [
    'Lift', 'PlantedProfile', 'candidate_names', 'lift_between', 'planted_clones',
    'planted_dominance', 'planted_majority', 'raise_candidate', 'random_fixed_point',
    'random_gamma_matrix', 'random_lift', 'random_profile', 'random_total_order_profile',
    'PropertyResult', 'VerificationHarness', 'maxmin_power', 'maxmin_product',
    'oracle_indirect_scores', 'DecompositionReport', 'SearchResult', 'check_clones',
    'check_closure_laws', 'check_condorcet_smith', 'check_decomposition', 'check_fixed_point',
    'check_idempotence', 'check_image', 'check_mean_rank_agreement', 'check_monotonicity',
    'check_oracles', 'check_projected_structure', 'check_rates_bridge', 'check_xi_independence',
    'continuity_probe', 'continuity_sweep', 'maximin_condorcet_smith_search',
    'maximin_respects_majority', 'perturb', 'rates_of', 'strict_monotonicity_search',
    'violates_strict_monotonicity',
]
