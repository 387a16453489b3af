"""
Projection Module
Projected margins and the idempotent projection P on Γ
"""
from .projector import (
    IntermediateMargins,
    ProjectedMargins,
    ProjectedScores,
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

__all__ = [
    'IntermediateMargins', 'ProjectedMargins', 'ProjectedScores', 'default_order',
    'fixed_point_order', 'intermediate_margins', 'is_ultrametric', 'max_decomposable',
    'project', 'project_with_order', 'projected_margins', 'satisfies_fixed_point_conditions',
]
