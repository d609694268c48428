# check_all lives in .checker, which depends on the metrics package
from .welch import (
    sym_dim,
    welch_discrete,
    welch_continuous,
    evaluate_lhs,
    welch_reports,
    welch_generalized,
    p_welch,
    p_welch_discrete,
    trace_power_bound,
    finiteness_check,
    potential_bounds,
)
from .alternatives import gerzon, alt_bounds, coherence_alt_reports
from .duals import dual_welch, dual_dim_check

__all__ = [
    'sym_dim', 'welch_discrete', 'welch_continuous', 'evaluate_lhs', 'welch_reports', 'welch_generalized',
    'p_welch', 'p_welch_discrete', 'trace_power_bound', 'finiteness_check', 'potential_bounds',
    'gerzon', 'alt_bounds', 'coherence_alt_reports', 'dual_welch', 'dual_dim_check',
]
