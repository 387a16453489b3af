"""
Closure Module
Indirect scores, margins and relation utilities
"""
from .indirect_scores import (
    IndirectScores,
    MarginMatrix,
    comparison_relation,
    indirect_scores,
    margins,
    satisfies_min_inequality,
)
from .relations import (
    Relation,
    codual,
    contract_relation,
    is_autonomous,
    is_interval,
    strict_relation,
    transitive_closure,
    weak_relation,
)

__all__ = [
    'IndirectScores', 'MarginMatrix', 'comparison_relation', 'indirect_scores', 'margins',
    'satisfies_min_inequality', 'Relation', 'codual', 'contract_relation', 'is_autonomous',
    'is_interval', 'strict_relation', 'transitive_closure', 'weak_relation',
]
