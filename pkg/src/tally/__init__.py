"""
Tally Module
Pipeline runner, invariant checks, file loading and report formatting
"""
from .matrix_loader import format_matrix_tsv, load_matrix, load_profile, parse_matrix
from .tally_engine import CheckResult, TallyEngine, TallyReport

__all__ = [
    'CheckResult', 'TallyEngine', 'TallyReport',
    'format_matrix_tsv', 'load_matrix', 'load_profile', 'parse_matrix',
]
