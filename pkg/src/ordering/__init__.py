"""
Ordering Module
Copeland ranks and admissible orders
"""
from .admissible_order import (
    AdmissibleOrder,
    CopelandRanks,
    admissible_order,
    all_admissible_orders,
    copeland_ranks,
    order_from_sequence,
    tie_splitting_ranks,
)

__all__ = [
    'AdmissibleOrder', 'CopelandRanks', 'admissible_order', 'all_admissible_orders',
    'copeland_ranks', 'order_from_sequence', 'tie_splitting_ranks',
]
