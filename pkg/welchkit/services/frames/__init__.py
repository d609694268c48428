from .operator import (
    from_vectors,
    analysis,
    synthesis,
    operator_matrix,
    frame_operator,
    trace_identities,
    tensor_power,
    canonical_dual,
    parseval,
    is_dual_pair,
    require_dual_pair,
    minimal_dual_check,
    trace_via_frame,
)
from .builtins import (
    BUILTINS,
    builtin,
    builtin_from_spec,
    cos_sin,
    onb,
    simplex_etf,
    harmonic,
    sic_d2,
    random_unit,
    cp_monte_carlo,
)
from .storage import FrameStorage, frame_storage, load_frame, save_frame, frame_from_document, frame_to_document

__all__ = [
    'from_vectors', 'analysis', 'synthesis', 'operator_matrix', 'frame_operator', 'trace_identities', 'tensor_power',
    'canonical_dual', 'parseval', 'is_dual_pair', 'require_dual_pair', 'minimal_dual_check', 'trace_via_frame',
    'BUILTINS', 'builtin', 'builtin_from_spec', 'cos_sin', 'onb', 'simplex_etf', 'harmonic', 'sic_d2',
    'random_unit', 'cp_monte_carlo',
    'FrameStorage', 'frame_storage', 'load_frame', 'save_frame', 'frame_from_document', 'frame_to_document',
]
