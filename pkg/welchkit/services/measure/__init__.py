from .quadrature import (
    counting_measure,
    weighted_atoms,
    uniform_interval,
    monte_carlo_sphere,
    mass_summary,
    require_count,
)
from .rng import make_rng, unit_vectors

__all__ = [
    'counting_measure',
    'weighted_atoms',
    'uniform_interval',
    'monte_carlo_sphere',
    'mass_summary',
    'require_count',
    'make_rng',
    'unit_vectors',
]
