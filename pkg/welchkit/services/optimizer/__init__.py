from .objectives import gram, potential, smoothed_coherence, project_tangent, retract, finite_difference_gradient
from .search import PackingOptimizer, minimize_coherence, minimize_potential, optimize, gradient_check

__all__ = [
    'gram', 'potential', 'smoothed_coherence', 'project_tangent', 'retract', 'finite_difference_gradient',
    'PackingOptimizer', 'minimize_coherence', 'minimize_potential', 'optimize', 'gradient_check',
]
